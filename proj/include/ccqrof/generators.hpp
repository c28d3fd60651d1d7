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

// Additive generators of continuous Archimedean t-norms and t-conorms.
//
// A t-norm generator g is strictly decreasing on [0, 1] with g(1) = 0 and
// tau(x, y) = g^{-1}(g(x) + g(y)). The dual t-conorm generator is
// h(x) = g(1 - x). Every fuzzy operation in this library reduces to sums of
// generator images pushed back through the inverse.
//
// The value +infinity that g takes at 0 (and h at 1) is represented by the
// finite sentinel kGeneratorInfinity; sums saturate there and the inverse maps
// it to the absorbing element.

#include <limits>
#include <optional>
#include <span>
#include <string_view>

#include "ccqrof/weights.hpp"

namespace ccqrof {

inline constexpr double kGeneratorInfinity = std::numeric_limits<double>::max();

/// Grades that drift outside [0, 1] by at most this much are clamped; beyond
/// it an Errc::internal_consistency error is raised.
inline constexpr double kClampTolerance = 1e-9;

/// A grade t together with 1 - t. When t = x^q is close to 1 the subtraction
/// loses the complement, so callers that can compute it directly pass it
/// here; the t-conorm generators read the complement above 1/2.
struct GradePair {
  double value = 0.0;
  double complement = 1.0;
};

inline constexpr GradePair grade_pair(double t) noexcept { return {t, 1.0 - t}; }

enum class GeneratorKind {
  gaussian_tnorm,
  gaussian_tconorm,
  algebraic_tnorm,
  algebraic_tconorm,
};

std::string_view to_string(GeneratorKind kind) noexcept;
std::optional<GeneratorKind> parse_generator_kind(std::string_view name) noexcept;

class GeneratorSpec {
 public:
  constexpr explicit GeneratorSpec(GeneratorKind kind) noexcept : kind_(kind) {}

  constexpr GeneratorKind kind() const noexcept { return kind_; }
  constexpr bool is_conorm() const noexcept {
    return kind_ == GeneratorKind::gaussian_tconorm || kind_ == GeneratorKind::algebraic_tconorm;
  }

  /// [0, 1] -> [0, kGeneratorInfinity]
  double forward(double t) const { return forward(grade_pair(t)); }
  double forward(GradePair t) const;
  /// [0, kGeneratorInfinity] -> [0, 1]
  double inverse(double s) const;

  friend constexpr bool operator==(GeneratorSpec, GeneratorSpec) = default;

 private:
  GeneratorKind kind_;
};

inline constexpr GeneratorSpec kGaussianTnorm{GeneratorKind::gaussian_tnorm};
inline constexpr GeneratorSpec kGaussianTconorm{GeneratorKind::gaussian_tconorm};
inline constexpr GeneratorSpec kAlgebraicTnorm{GeneratorKind::algebraic_tnorm};
inline constexpr GeneratorSpec kAlgebraicTconorm{GeneratorKind::algebraic_tconorm};

/// g(t) = -ln(erf(t) / erf(1)), the Gaussian t-norm generator.
double gaussian_g(double t);
double gaussian_g_inverse(double s);

/// h(t) = g(1 - t), the Gaussian t-conorm generator.
double gaussian_h(double t);
double gaussian_h_inverse(double s);

/// erfinv(erf(x) erf(y) / erf(1))
double gaussian_tnorm(double x, double y);

/// 1 - gaussian_tnorm(1 - x, 1 - y), evaluated without cancellation near 0.
double gaussian_tconorm(double x, double y);

/// inverse(forward(x) + forward(y))
double generator_sum(GeneratorSpec spec, GradePair x, GradePair y);
inline double generator_sum(GeneratorSpec spec, double x, double y) {
  return generator_sum(spec, grade_pair(x), grade_pair(y));
}

/// inverse(lambda * forward(x)), lambda >= 0.
double generator_scale(GeneratorSpec spec, double lambda, GradePair x);
inline double generator_scale(GeneratorSpec spec, double lambda, double x) {
  return generator_scale(spec, lambda, grade_pair(x));
}

/// inverse(sum_i w_i forward(v_i)). For the algebraic t-norm this is the
/// weighted geometric mean prod v_i^{w_i}.
double weighted_generator_combine(GeneratorSpec spec, std::span<const GradePair> values,
                                  const WeightVector& weights);
double weighted_generator_combine(GeneratorSpec spec, std::span<const double> values,
                                  const WeightVector& weights);

/// Clamp a computed grade into [0, 1]; throws Errc::internal_consistency
/// if it is further than kClampTolerance outside.
double clamp_grade(double value, std::string_view context);

}  // namespace ccqrof
