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

#include "ccqrof/operations.hpp"

#include <cmath>
#include <sstream>

#include "ccqrof/error.hpp"

namespace ccqrof {

namespace {

void require_lambda(double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    std::ostringstream msg;
    msg << "lambda = " << lambda << " must be finite and nonnegative";
    throw Error(Errc::domain, msg.str());
  }
}

FuzzyValue combine_binary(const FuzzyValue& a, const FuzzyValue& b, GeneratorSpec membership,
                          GeneratorSpec nonmembership, RadiusRule rule) {
  require_same_rung(a, b);
  const PowerOperand pa = to_power_operand(a);
  const PowerOperand pb = to_power_operand(b);
  const PowerGrades out{{generator_sum(membership, pa.mu_re, pb.mu_re),
                         generator_sum(membership, pa.mu_im, pb.mu_im)},
                        {generator_sum(nonmembership, pa.nu_re, pb.nu_re),
                         generator_sum(nonmembership, pa.nu_im, pb.nu_im)}};
  return from_power_domain(a.q(), out, generator_sum(rule.generator, a.r(), b.r()));
}

FuzzyValue scale_unary(double lambda, const FuzzyValue& a, GeneratorSpec membership,
                       GeneratorSpec nonmembership, RadiusRule rule) {
  require_lambda(lambda);
  const PowerOperand p = to_power_operand(a);
  const PowerGrades out{{generator_scale(membership, lambda, p.mu_re),
                         generator_scale(membership, lambda, p.mu_im)},
                        {generator_scale(nonmembership, lambda, p.nu_re),
                         generator_scale(nonmembership, lambda, p.nu_im)}};
  return from_power_domain(a.q(), out, generator_scale(rule.generator, lambda, a.r()));
}

}  // namespace

void require_same_rung(const FuzzyValue& a, const FuzzyValue& b) {
  if (a.q() != b.q()) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "operands have different rungs: q = " << a.q() << " and q = " << b.q();
    throw Error(Errc::rung_mismatch, msg.str());
  }
}

FuzzyValue add(const FuzzyValue& a, const FuzzyValue& b, RadiusRule rule) {
  return combine_binary(a, b, kGaussianTconorm, kGaussianTnorm, rule);
}

FuzzyValue multiply(const FuzzyValue& a, const FuzzyValue& b, RadiusRule rule) {
  return combine_binary(a, b, kGaussianTnorm, kGaussianTconorm, rule);
}

FuzzyValue scalar_multiply(double lambda, const FuzzyValue& a, RadiusRule rule) {
  return scale_unary(lambda, a, kGaussianTconorm, kGaussianTnorm, rule);
}

FuzzyValue power(const FuzzyValue& a, double lambda, RadiusRule rule) {
  return scale_unary(lambda, a, kGaussianTnorm, kGaussianTconorm, rule);
}

}  // namespace ccqrof
