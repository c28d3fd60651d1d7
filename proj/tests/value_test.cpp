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

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <utility>

#include "ccqrof/error.hpp"
#include "test_support.hpp"

namespace {

using namespace ccqrof;
namespace ts = ccqrof::testing;

Errc validate_error(const RawValue& raw, std::string* message = nullptr) {
  try {
    FuzzyValue::validate(raw);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "expected validate to throw";
  return Errc::internal_consistency;
}

TEST(Validate, ExampleRowsAreValid) {
  for (const RawValue& raw : ts::example_rows()) {
    const FuzzyValue v = FuzzyValue::validate(raw);
    EXPECT_EQ(v.q(), 2.0);
    EXPECT_EQ(v.mu(), raw.mu);
    EXPECT_EQ(v.nu(), raw.nu);
    EXPECT_EQ(v.r(), raw.r);
  }
}

TEST(Validate, RejectsRungViolation) {
  std::string message;
  EXPECT_EQ(validate_error(RawValue{2.0, {0.9, 0.1}, {0.5, 0.1}, 0.5}, &message),
            Errc::constraint_violation);
  EXPECT_NE(message.find("real-part"), std::string::npos) << message;
  EXPECT_NE(message.find("1.06"), std::string::npos) << message;

  RawValue imag{2.0, {0.1, 0.9}, {0.1, 0.5}, 0.5};
  EXPECT_EQ(validate_error(imag, &message), Errc::constraint_violation);
  EXPECT_NE(message.find("imaginary-part"), std::string::npos) << message;
}

TEST(Validate, MutatedExampleRowRejected) {
  RawValue x1 = ts::example_rows()[0];
  x1.mu.re = 0.95;  // 0.9025 + 0.16 > 1
  EXPECT_EQ(validate_error(x1), Errc::constraint_violation);
}

TEST(Validate, BoundaryOfLinearCase) {
  EXPECT_NO_THROW(FuzzyValue::validate(RawValue{1.0, {0.6, 0.4}, {0.4, 0.6}, 1.0}));
  // Within the tolerance band.
  EXPECT_NO_THROW(FuzzyValue::validate(RawValue{1.0, {0.6 + 5e-10, 0.4}, {0.4, 0.6}, 1.0}));
  EXPECT_EQ(validate_error(RawValue{1.0, {0.6 + 1e-8, 0.4}, {0.4, 0.6}, 1.0}),
            Errc::constraint_violation);
}

TEST(Validate, FieldRanges) {
  std::string message;
  EXPECT_EQ(validate_error(RawValue{0.5, {0.1, 0.1}, {0.1, 0.1}, 0.1}, &message),
            Errc::constraint_violation);
  EXPECT_NE(message.find("q"), std::string::npos);
  EXPECT_EQ(validate_error(RawValue{NAN, {0.1, 0.1}, {0.1, 0.1}, 0.1}), Errc::constraint_violation);
  EXPECT_EQ(validate_error(RawValue{INFINITY, {0.1, 0.1}, {0.1, 0.1}, 0.1}),
            Errc::constraint_violation);
  EXPECT_EQ(validate_error(RawValue{2.0, {1.2, 0.1}, {0.1, 0.1}, 0.1}, &message),
            Errc::constraint_violation);
  EXPECT_NE(message.find("mu.re"), std::string::npos) << message;
  EXPECT_EQ(validate_error(RawValue{2.0, {0.1, 0.1}, {0.1, -0.1}, 0.1}, &message),
            Errc::constraint_violation);
  EXPECT_NE(message.find("nu.im"), std::string::npos) << message;
  EXPECT_EQ(validate_error(RawValue{2.0, {0.1, 0.1}, {0.1, 0.1}, 1.5}, &message),
            Errc::constraint_violation);
  EXPECT_NE(message.find("r"), std::string::npos) << message;
  EXPECT_EQ(validate_error(RawValue{2.0, {NAN, 0.1}, {0.1, 0.1}, 0.5}), Errc::constraint_violation);
}

TEST(Validate, LargerRungAdmitsMore) {
  const RawValue raw{3.0, {0.9, 0.1}, {0.5, 0.1}, 0.5};  // 0.729 + 0.125 <= 1
  EXPECT_NO_THROW(FuzzyValue::validate(raw));
}

TEST(Swapped, ExchangesGrades) {
  const FuzzyValue v = ts::example_values()[0];
  const FuzzyValue s = v.swapped();
  EXPECT_EQ(s.mu(), v.nu());
  EXPECT_EQ(s.nu(), v.mu());
  EXPECT_EQ(s.r(), v.r());
  EXPECT_EQ(s.swapped(), v);
}

TEST(Neutral, Examples) {
  const NeutralPair linear =
      neutral(FuzzyValue::validate(RawValue{1.0, {0.5, 0.2}, {0.3, 0.3}, 0.0}));
  EXPECT_NEAR(linear.re, 0.2, 1e-15);
  EXPECT_NEAR(linear.im, 0.5, 1e-15);

  const NeutralPair x1 = neutral(ts::example_values()[0]);
  EXPECT_NEAR(x1.re, 0.768114, 1e-6);
  EXPECT_NEAR(x1.im, 0.932737, 1e-6);
  EXPECT_NEAR(x1.re, std::sqrt(0.59), 1e-15);

  const NeutralPair edge = neutral(FuzzyValue::validate(RawValue{2.0, {0.6, 0.0}, {0.8, 0.0}, 0.5}));
  EXPECT_EQ(edge.re, 0.0);
  EXPECT_EQ(edge.im, 1.0);
}

TEST(Neutral, ClampsSlightlyNegativeRadicand) {
  const NeutralPair p = neutral(FuzzyValue::validate(RawValue{1.0, {0.6 + 5e-10, 0.0}, {0.4, 0.0}, 0.5}));
  EXPECT_EQ(p.re, 0.0);
}

TEST(Neutral, Conservation) {
  ts::ValueSampler sampler(101);
  for (int i = 0; i < 10000; ++i) {
    const FuzzyValue v = sampler.value(sampler.rung());
    const NeutralPair p = neutral(v);
    const double q = v.q();
    ASSERT_NEAR(std::pow(v.mu().re, q) + std::pow(v.nu().re, q) + std::pow(p.re, q), 1.0, 1e-9);
    ASSERT_NEAR(std::pow(v.mu().im, q) + std::pow(v.nu().im, q) + std::pow(p.im, q), 1.0, 1e-9);
  }
}

TEST(PowerDomain, Examples) {
  const RawValue base{1.0, {0.3, 0.2}, {0.6, 0.7}, 0.4};
  const PowerGrades identity = to_power_domain(FuzzyValue::validate(base));
  EXPECT_EQ(identity.membership, base.mu);
  EXPECT_EQ(identity.nonmembership, base.nu);

  EXPECT_EQ(to_power_domain(ts::example_values()[0]).membership.re, 0.25);
  const PowerGrades cube = to_power_domain(FuzzyValue::validate(RawValue{3.0, {0.1, 0.1}, {0.1, 0.2}, 0.0}));
  EXPECT_NEAR(cube.nonmembership.im, 0.008, 1e-17);

  const FuzzyValue zero = from_power_domain(2.0, PowerGrades{}, 0.3);
  EXPECT_EQ(zero.mu(), (UnitComplexPair{0.0, 0.0}));
  EXPECT_EQ(zero.nu(), (UnitComplexPair{0.0, 0.0}));
  EXPECT_EQ(zero.r(), 0.3);

  const FuzzyValue half = from_power_domain(2.0, PowerGrades{{0.25, 0.0}, {0.0, 0.0}}, 0.0);
  EXPECT_EQ(half.mu().re, 0.5);
}

TEST(PowerDomain, ExampleRoundTrip) {
  const FuzzyValue x2 = ts::example_values()[1];
  EXPECT_LE(ts::max_abs_diff(from_power_domain(2.0, to_power_domain(x2), x2.r()), x2), 1e-12);
}

TEST(PowerDomain, RandomRoundTripEveryRung) {
  ts::ValueSampler sampler(202);
  for (double q : ts::kRungs) {
    for (int i = 0; i < 10000; ++i) {
      const FuzzyValue v = sampler.value(q);
      const FuzzyValue back = from_power_domain(q, to_power_domain(v), v.r());
      ASSERT_LE(ts::max_abs_diff(back, v), 1e-12) << "q = " << q;
    }
  }
}

TEST(PowerDomain, OutOfRangeComponentsAreInternalErrors) {
  for (const PowerGrades& bad :
       {PowerGrades{{1.0 + 1e-6, 0.0}, {0.0, 0.0}}, PowerGrades{{0.2, 0.0}, {-1e-6, 0.0}},
        PowerGrades{{0.7, 0.0}, {0.7, 0.0}}}) {
    try {
      from_power_domain(2.0, bad, 0.5);
      ADD_FAILURE() << "expected an internal-consistency error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::internal_consistency);
    }
  }
  // Rounding noise inside the tolerance is absorbed.
  const FuzzyValue v = from_power_domain(2.0, PowerGrades{{1.0 + 1e-12, 0.0}, {0.0, 0.0}}, 0.5);
  EXPECT_EQ(v.mu().re, 1.0);
}

TEST(PowerOperand, ComplementsAreAccurate) {
  const FuzzyValue v = FuzzyValue::validate(RawValue{7.5, {1.0 - 0x1p-40, 0.3}, {0.0, 0.2}, 0.5});
  const PowerOperand p = to_power_operand(v);
  // 1 - (1 - d)^q = q d - ... with d = 2^-40.
  const double d = 0x1p-40;
  EXPECT_NEAR(p.mu_re.complement, 7.5 * d - 7.5 * 6.5 / 2 * d * d, 1e-15 * 7.5 * d);
  EXPECT_EQ(p.nu_re.value, 0.0);
  EXPECT_EQ(p.nu_re.complement, 1.0);
  EXPECT_NEAR(p.mu_im.value + p.mu_im.complement, 1.0, 1e-16);
}

TEST(PowerOperand, ValuesMatchPowerDomainAndAreFeasible) {
  ts::ValueSampler sampler(303);
  for (int i = 0; i < 10000; ++i) {
    const FuzzyValue v = sampler.value(sampler.rung());
    const PowerOperand p = to_power_operand(v);
    const PowerGrades g = to_power_domain(v);
    for (auto [got, want] : {std::pair{p.mu_re.value, g.membership.re},
                             std::pair{p.mu_im.value, g.membership.im},
                             std::pair{p.nu_re.value, g.nonmembership.re},
                             std::pair{p.nu_im.value, g.nonmembership.im}}) {
      ASSERT_NEAR(got, want, 1e-15);
    }
    for (auto [a, b] : {std::pair{p.mu_re, p.nu_re}, std::pair{p.mu_im, p.nu_im}}) {
      if (a.value <= b.value) {
        ASSERT_LE(a.value, b.complement);
      } else {
        ASSERT_LE(b.value, a.complement);
      }
    }
  }
}

TEST(PowerOperand, RoundOffExcessMovesTheLargerGrade) {
  // mu^q + nu^q = 1 + 2.7e-16: nu = 1 must stop being absorbing.
  const FuzzyValue v =
      FuzzyValue::validate(RawValue{7.5, {0.0083450193279392109, 0.0}, {1.0, 0.0}, 0.5});
  const PowerOperand p = to_power_operand(v);
  EXPECT_EQ(p.mu_re.value, std::pow(0.0083450193279392109, 7.5));
  EXPECT_EQ(p.nu_re.complement, p.mu_re.value);
  EXPECT_LE(p.mu_re.value, p.nu_re.complement);
}

}  // namespace
