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

#include "ccqrof/weights.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "ccqrof/error.hpp"

namespace ccqrof {

WeightVector WeightVector::make(std::vector<double> weights) {
  if (weights.empty()) {
    throw Error(Errc::invalid_weights, "weight vector is empty");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
      std::ostringstream msg;
      msg << "weight " << i << " = " << w << " is outside [0, 1]";
      throw Error(Errc::invalid_weights, msg.str());
    }
  }
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::fabs(sum - 1.0) > kWeightSumTolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "weights sum to " << sum << ", expected 1";
    throw Error(Errc::invalid_weights, msg.str());
  }
  for (double& w : weights) w /= sum;
  return WeightVector(std::move(weights));
}

WeightVector WeightVector::uniform(std::size_t n) {
  if (n == 0) {
    throw Error(Errc::invalid_weights, "weight vector is empty");
  }
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

}  // namespace ccqrof
