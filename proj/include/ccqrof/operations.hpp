// Copyright 2026 The ccqrof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Gaussian algebraic operations on circular complex q-rung orthopair fuzzy
// values, evaluated in generator form on the power domain:
//
//   sum          membership  h^{-1}(h(a1) + h(a2))     non-membership g^{-1}(g(b1) + g(b2))
//   product      membership  g^{-1}(g(a1) + g(a2))     non-membership h^{-1}(h(b1) + h(b2))
//   scalar l*A   membership  h^{-1}(l h(a))            non-membership g^{-1}(l g(b))
//   power A^l    membership  g^{-1}(l g(a))            non-membership h^{-1}(l h(b))
//
// with a = mu^q, b = nu^q, g the Gaussian t-norm generator and h(x) = g(1-x).
// Radii combine through the configured generator Z: Z^{-1}(Z(r1) + Z(r2)) for
// the binary operations and Z^{-1}(l Z(r)) for the unary ones.
//
// Binary operations require both operands to carry the identical q.

#include "ccqrof/generators.hpp"
#include "ccqrof/value.hpp"

namespace ccqrof {

struct RadiusRule {
  GeneratorSpec generator = kAlgebraicTnorm;
};

FuzzyValue add(const FuzzyValue& a, const FuzzyValue& b, RadiusRule rule = {});
FuzzyValue multiply(const FuzzyValue& a, const FuzzyValue& b, RadiusRule rule = {});

/// lambda = 0 yields <mu=(0,0), nu=(1,1), r=Z^{-1}(0)>.
FuzzyValue scalar_multiply(double lambda, const FuzzyValue& a, RadiusRule rule = {});

/// lambda = 0 yields <mu=(1,1), nu=(0,0), r=Z^{-1}(0)>.
FuzzyValue power(const FuzzyValue& a, double lambda, RadiusRule rule = {});

/// Throws Errc::rung_mismatch unless a.q() == b.q() exactly.
void require_same_rung(const FuzzyValue& a, const FuzzyValue& b);

}  // namespace ccqrof
