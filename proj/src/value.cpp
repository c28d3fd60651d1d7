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

#include "ccqrof/value.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "ccqrof/error.hpp"
#include "ccqrof/generators.hpp"

namespace ccqrof {

namespace {

void require_unit(double x, const char* field) {
  if (!std::isfinite(x)) {
    throw Error(Errc::constraint_violation, std::string(field) + " is not finite");
  }
  if (x < 0.0 || x > 1.0) {
    std::ostringstream msg;
    msg.precision(12);
    msg << field << " = " << x << " is outside [0, 1]";
    throw Error(Errc::constraint_violation, msg.str());
  }
}

void require_rung(double q, double mu, double nu, const char* part) {
  const double sum = std::pow(mu, q) + std::pow(nu, q);
  if (sum > 1.0 + kConstraintTolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << part << "-part rung constraint violated: mu^q + nu^q = " << sum << " exceeds 1 by "
        << sum - 1.0 << " (q = " << q << ")";
    throw Error(Errc::constraint_violation, msg.str());
  }
}

double root(double a, double q) { return q == 1.0 ? a : std::pow(a, 1.0 / q); }

}  // namespace

FuzzyValue FuzzyValue::validate(const RawValue& raw) {
  if (!std::isfinite(raw.q)) {
    throw Error(Errc::constraint_violation, "q is not finite");
  }
  if (raw.q < 1.0) {
    std::ostringstream msg;
    msg << "q = " << raw.q << " is below 1";
    throw Error(Errc::constraint_violation, msg.str());
  }
  require_unit(raw.mu.re, "mu.re");
  require_unit(raw.mu.im, "mu.im");
  require_unit(raw.nu.re, "nu.re");
  require_unit(raw.nu.im, "nu.im");
  require_unit(raw.r, "r");
  require_rung(raw.q, raw.mu.re, raw.nu.re, "real");
  require_rung(raw.q, raw.mu.im, raw.nu.im, "imaginary");
  return FuzzyValue(raw.q, raw.mu, raw.nu, raw.r);
}

NeutralPair neutral(const FuzzyValue& v) {
  const double q = v.q();
  auto part = [q](double mu, double nu) {
    double radicand = 1.0 - std::pow(mu, q) - std::pow(nu, q);
    if (radicand < 0.0) radicand = 0.0;  // within kConstraintTolerance by validity
    return root(radicand, q);
  };
  return {part(v.mu().re, v.nu().re), part(v.mu().im, v.nu().im)};
}

PowerGrades to_power_domain(const FuzzyValue& v) {
  const double q = v.q();
  return {{std::pow(v.mu().re, q), std::pow(v.mu().im, q)},
          {std::pow(v.nu().re, q), std::pow(v.nu().im, q)}};
}

namespace {

// x^q with 1 - x^q evaluated without cancellation when x^q is close to 1.
GradePair power_pair(double x, double q) {
  if (x < 0.5) return grade_pair(std::pow(x, q));
  return {std::pow(x, q), -std::expm1(q * std::log1p(x - 1.0))};
}

// The larger grade gives way: its double value barely moves and only its
// complement is refined, while the smaller grade (possibly tiny, and then
// amplified by the 1/q root) is kept as given.
// The test compares the smaller grade with the complement of the larger, the
// two quantities known to full relative precision.
void make_feasible(GradePair& a, GradePair& b) {
  if (b.value >= a.value) {
    if (a.value > b.complement) b = {a.complement, a.value};
  } else {
    if (b.value > a.complement) a = {b.complement, b.value};
  }
}

}  // namespace

PowerOperand to_power_operand(const FuzzyValue& v) {
  const double q = v.q();
  PowerOperand p{power_pair(v.mu().re, q), power_pair(v.mu().im, q), power_pair(v.nu().re, q),
                 power_pair(v.nu().im, q)};
  make_feasible(p.mu_re, p.nu_re);
  make_feasible(p.mu_im, p.nu_im);
  return p;
}

FuzzyValue from_power_domain(double q, const PowerGrades& grades, double r) {
  const double a_re = clamp_grade(grades.membership.re, "from_power_domain");
  const double a_im = clamp_grade(grades.membership.im, "from_power_domain");
  const double b_re = clamp_grade(grades.nonmembership.re, "from_power_domain");
  const double b_im = clamp_grade(grades.nonmembership.im, "from_power_domain");
  const double radius = clamp_grade(r, "from_power_domain radius");
  for (double sum : {a_re + b_re, a_im + b_im}) {
    if (sum > 1.0 + kConstraintTolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "power-domain grades sum to " << sum << ", beyond the rung constraint";
      throw Error(Errc::internal_consistency, msg.str());
    }
  }
  return FuzzyValue::validate(
      q, {root(a_re, q), root(a_im, q)}, {root(b_re, q), root(b_im, q)}, radius);
}

}  // namespace ccqrof
