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

#include <cstddef>
#include <span>
#include <vector>

namespace ccqrof {

/// Sum tolerance for weight vectors. Deviations up to this are renormalized
/// away; larger ones are rejected.
inline constexpr double kWeightSumTolerance = 1e-9;

/// Nonnegative weights in [0, 1] summing to one.
class WeightVector {
 public:
  /// Throws Error(Errc::invalid_weights) when the weights are empty, contain a
  /// non-finite or out-of-range entry, or do not sum to 1 within tolerance.
  static WeightVector make(std::vector<double> weights);

  /// n equal weights of 1/n.
  static WeightVector uniform(std::size_t n);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> values() const noexcept { return weights_; }

 private:
  explicit WeightVector(std::vector<double> w) : weights_(std::move(w)) {}
  std::vector<double> weights_;
};

}  // namespace ccqrof
