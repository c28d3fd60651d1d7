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

#include "ccqrof/aggregation.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "ccqrof/error.hpp"

namespace ccqrof {

namespace {

FuzzyValue combine_weighted(std::span<const FuzzyValue> values, const WeightVector& weights,
                            GeneratorSpec membership, GeneratorSpec nonmembership,
                            RadiusRule rule) {
  if (values.empty()) {
    throw Error(Errc::domain, "aggregation of an empty list");
  }
  if (values.size() != weights.size()) {
    std::ostringstream msg;
    msg << "aggregation: " << values.size() << " values but " << weights.size() << " weights";
    throw Error(Errc::invalid_weights, msg.str());
  }
  const std::size_t n = values.size();
  std::vector<GradePair> a_re(n), a_im(n), b_re(n), b_im(n);
  std::vector<double> radius(n);
  for (std::size_t i = 0; i < n; ++i) {
    require_same_rung(values[0], values[i]);
    const PowerOperand p = to_power_operand(values[i]);
    a_re[i] = p.mu_re;
    a_im[i] = p.mu_im;
    b_re[i] = p.nu_re;
    b_im[i] = p.nu_im;
    radius[i] = values[i].r();
  }
  const PowerGrades out{{weighted_generator_combine(membership, a_re, weights),
                         weighted_generator_combine(membership, a_im, weights)},
                        {weighted_generator_combine(nonmembership, b_re, weights),
                         weighted_generator_combine(nonmembership, b_im, weights)}};
  return from_power_domain(values[0].q(), out,
                           weighted_generator_combine(rule.generator, radius, weights));
}

}  // namespace

std::string_view to_string(Aggregator op) noexcept {
  return op == Aggregator::weighted_average ? "wa" : "wg";
}

std::optional<Aggregator> parse_aggregator(std::string_view name) noexcept {
  if (name == "wa") return Aggregator::weighted_average;
  if (name == "wg") return Aggregator::weighted_geometric;
  return std::nullopt;
}

FuzzyValue weighted_average(std::span<const FuzzyValue> values, const WeightVector& weights,
                            RadiusRule rule) {
  return combine_weighted(values, weights, kGaussianTconorm, kGaussianTnorm, rule);
}

FuzzyValue weighted_geometric(std::span<const FuzzyValue> values, const WeightVector& weights,
                              RadiusRule rule) {
  return combine_weighted(values, weights, kGaussianTnorm, kGaussianTconorm, rule);
}

FuzzyValue aggregate(Aggregator op, std::span<const FuzzyValue> values,
                     const WeightVector& weights, RadiusRule rule) {
  return op == Aggregator::weighted_average ? weighted_average(values, weights, rule)
                                            : weighted_geometric(values, weights, rule);
}

double plumbing_score(const FuzzyValue& v, double radius_weight) {
  if (!(radius_weight >= 0.0 && radius_weight <= 1.0)) {
    std::ostringstream msg;
    msg << "radius weight " << radius_weight << " is outside [0, 1]";
    throw Error(Errc::domain, msg.str());
  }
  const PowerGrades p = to_power_domain(v);
  const double grade_term =
      ((p.membership.re - p.nonmembership.re) + (p.membership.im - p.nonmembership.im)) / 2.0;
  return (1.0 - radius_weight) * grade_term + radius_weight * (2.0 * v.r() - 1.0);
}

}  // namespace ccqrof
