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

// Circular complex q-rung orthopair fuzzy values.
//
// A value carries a rung q >= 1, a membership pair mu = (re, im), a
// non-membership pair nu = (re, im) and a scalar radius r in [0, 1]. Each
// part obeys the rung constraint mu_p^q + nu_p^q <= 1.

#include "ccqrof/generators.hpp"

namespace ccqrof {

/// Tolerance on the rung constraint mu^q + nu^q <= 1.
inline constexpr double kConstraintTolerance = 1e-9;

struct UnitComplexPair {
  double re = 0.0;
  double im = 0.0;

  friend constexpr bool operator==(const UnitComplexPair&, const UnitComplexPair&) = default;
};

/// Unvalidated field bundle, as read from input.
struct RawValue {
  double q = 1.0;
  UnitComplexPair mu;
  UnitComplexPair nu;
  double r = 0.0;
};

/// Images of the grades under x -> x^q. In this domain the q-rung
/// operations become plain t-norm / t-conorm applications.
struct PowerGrades {
  UnitComplexPair membership;
  UnitComplexPair nonmembership;
};

/// Hesitancy per part: pi_p = (1 - mu_p^q - nu_p^q)^{1/q}.
struct NeutralPair {
  double re = 0.0;
  double im = 0.0;
};

class FuzzyValue {
 public:
  /// Throws Error(Errc::constraint_violation) naming the offending field or
  /// part (with the excess for rung violations).
  static FuzzyValue validate(const RawValue& raw);
  static FuzzyValue validate(double q, UnitComplexPair mu, UnitComplexPair nu, double r) {
    return validate(RawValue{q, mu, nu, r});
  }

  double q() const noexcept { return q_; }
  const UnitComplexPair& mu() const noexcept { return mu_; }
  const UnitComplexPair& nu() const noexcept { return nu_; }
  double r() const noexcept { return r_; }

  RawValue raw() const noexcept { return {q_, mu_, nu_, r_}; }

  /// The same value with membership and non-membership exchanged.
  FuzzyValue swapped() const noexcept { return FuzzyValue(q_, nu_, mu_, r_); }

  friend bool operator==(const FuzzyValue&, const FuzzyValue&) = default;

 private:
  FuzzyValue(double q, UnitComplexPair mu, UnitComplexPair nu, double r) noexcept
      : q_(q), mu_(mu), nu_(nu), r_(r) {}

  double q_;
  UnitComplexPair mu_;
  UnitComplexPair nu_;
  double r_;
};

NeutralPair neutral(const FuzzyValue& v);

PowerGrades to_power_domain(const FuzzyValue& v);

/// Operand form used by the operations: a = mu^q and b = nu^q per part, each
/// with a directly computed complement 1 - x^q. A part that the tolerance let
/// through with a + b slightly above 1 is moved onto a + b = 1 by replacing
/// the larger grade with the complement of the smaller one; otherwise an
/// absorbing grade (b = 1, say) would meet a partner that is not quite 0.
struct PowerOperand {
  GradePair mu_re;
  GradePair mu_im;
  GradePair nu_re;
  GradePair nu_im;
};

PowerOperand to_power_operand(const FuzzyValue& v);

/// Inverse of to_power_domain. Components more than kClampTolerance outside
/// [0, 1], or parts whose sum exceeds 1 by more than kConstraintTolerance,
/// raise Errc::internal_consistency.
FuzzyValue from_power_domain(double q, const PowerGrades& grades, double r);

}  // namespace ccqrof
