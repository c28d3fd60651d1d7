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

#include <optional>
#include <span>
#include <string_view>

#include "ccqrof/operations.hpp"
#include "ccqrof/value.hpp"
#include "ccqrof/weights.hpp"

namespace ccqrof {

enum class Aggregator { weighted_average, weighted_geometric };

/// "wa" / "wg"
std::string_view to_string(Aggregator op) noexcept;
std::optional<Aggregator> parse_aggregator(std::string_view name) noexcept;

/// Gaussian weighted arithmetic aggregation (CCq-ROFWA): the Gaussian sum of
/// the scaled values w_i * A_i. In the power domain each membership part is
/// h^{-1}(sum w_i h(a_i)), each non-membership part g^{-1}(sum w_i g(b_i)),
/// and the radius Z^{-1}(sum w_i Z(r_i)); with the default algebraic rule the
/// radius is prod r_i^{w_i}.
FuzzyValue weighted_average(std::span<const FuzzyValue> values, const WeightVector& weights,
                            RadiusRule rule = {});

/// Gaussian weighted geometric aggregation (CCq-ROFWG): the Gaussian product
/// of the powers A_i^{w_i}; g and h swap roles relative to weighted_average.
FuzzyValue weighted_geometric(std::span<const FuzzyValue> values, const WeightVector& weights,
                              RadiusRule rule = {});

FuzzyValue aggregate(Aggregator op, std::span<const FuzzyValue> values,
                     const WeightVector& weights, RadiusRule rule = {});

/// Ranking score for the command line report. Not part of the fuzzy
/// calculus; any monotone summary would do.
///
///   s = (1 - w) ((a_re - b_re) + (a_im - b_im)) / 2 + w (2 r - 1)
///
/// with a = mu^q, b = nu^q and w = radius_weight in [0, 1]. Result in [-1, 1].
double plumbing_score(const FuzzyValue& v, double radius_weight);

}  // namespace ccqrof
