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

#include "ccqrof/generators.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "ccqrof/error.hpp"
#include "ccqrof/special_functions.hpp"

namespace ccqrof {

namespace {

using special::kErfOne;

// erf(1) - erf(1/2): gap values above this correspond to grades above 1/2.
constexpr double kGapAtHalf = 0.32220091513666833166;

void require_grade(double t, std::string_view context) {
  if (!(t >= 0.0 && t <= 1.0)) {
    std::ostringstream msg;
    msg << context << ": grade " << t << " is outside [0, 1]";
    throw Error(Errc::domain, msg.str());
  }
}

void require_generator_value(double s, std::string_view context) {
  if (!(s >= 0.0)) {
    std::ostringstream msg;
    msg << context << ": generator value " << s << " is negative";
    throw Error(Errc::domain, msg.str());
  }
}

double saturate(double s) { return s < kGeneratorInfinity ? s : kGeneratorInfinity; }

}  // namespace

std::string_view to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::gaussian_tnorm: return "gaussian-tnorm";
    case GeneratorKind::gaussian_tconorm: return "gaussian-tconorm";
    case GeneratorKind::algebraic_tnorm: return "algebraic-tnorm";
    case GeneratorKind::algebraic_tconorm: return "algebraic-tconorm";
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) noexcept {
  for (auto kind : {GeneratorKind::gaussian_tnorm, GeneratorKind::gaussian_tconorm,
                    GeneratorKind::algebraic_tnorm, GeneratorKind::algebraic_tconorm}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

double clamp_grade(double value, std::string_view context) {
  if (!(value >= -kClampTolerance && value <= 1.0 + kClampTolerance)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << context << ": computed grade " << value << " left [0, 1] beyond round-off";
    throw Error(Errc::internal_consistency, msg.str());
  }
  return std::fmin(std::fmax(value, 0.0), 1.0);
}

double gaussian_g(double t) {
  require_grade(t, "gaussian_g");
  if (t == 0.0) return kGeneratorInfinity;
  if (t == 1.0) return 0.0;
  return std::fmax(0.0, -std::log(special::erf(t) / kErfOne));
}

double gaussian_g_inverse(double s) {
  require_generator_value(s, "gaussian_g_inverse");
  if (s == 0.0) return 1.0;
  if (s >= kGeneratorInfinity) return 0.0;
  return clamp_grade(special::erfinv(kErfOne * std::exp(-s)), "gaussian_g_inverse");
}

double gaussian_h(double t) {
  require_grade(t, "gaussian_h");
  if (t == 0.0) return 0.0;
  if (t == 1.0) return kGeneratorInfinity;
  if (t <= 0.5) return -std::log1p(-special::erf_gap(t) / kErfOne);
  return saturate(-std::log(special::erf(1.0 - t) / kErfOne));
}

double gaussian_h_inverse(double s) {
  require_generator_value(s, "gaussian_h_inverse");
  if (s == 0.0) return 0.0;
  if (s >= kGeneratorInfinity) return 1.0;
  const double gap = -kErfOne * std::expm1(-s);
  if (gap <= kGapAtHalf) return clamp_grade(special::erf_gap_inv(gap), "gaussian_h_inverse");
  return clamp_grade(1.0 - special::erfinv(kErfOne * std::exp(-s)), "gaussian_h_inverse");
}

double gaussian_tnorm(double x, double y) {
  require_grade(x, "gaussian_tnorm");
  require_grade(y, "gaussian_tnorm");
  if (x == 1.0) return y;
  if (y == 1.0) return x;
  if (x == 0.0 || y == 0.0) return 0.0;
  return clamp_grade(special::erfinv(special::erf(x) * special::erf(y) / kErfOne),
                     "gaussian_tnorm");
}

double gaussian_tconorm(double x, double y) {
  require_grade(x, "gaussian_tconorm");
  require_grade(y, "gaussian_tconorm");
  if (x == 0.0) return y;
  if (y == 0.0) return x;
  if (x == 1.0 || y == 1.0) return 1.0;
  // erf(1 - rho) = (E - u)(E - v) / E with u, v the gaps of x, y.
  const double u = special::erf_gap(x);
  const double v = special::erf_gap(y);
  const double gap = u + v - u * v / kErfOne;
  if (gap <= kGapAtHalf) return clamp_grade(special::erf_gap_inv(gap), "gaussian_tconorm");
  const double product = special::erf(1.0 - x) * special::erf(1.0 - y) / kErfOne;
  return clamp_grade(1.0 - special::erfinv(product), "gaussian_tconorm");
}

double GeneratorSpec::forward(GradePair p) const {
  const double t = p.value;
  switch (kind_) {
    case GeneratorKind::gaussian_tnorm:
      return gaussian_g(t);
    case GeneratorKind::gaussian_tconorm:
      if (t <= 0.5) return gaussian_h(t);
      require_grade(p.complement, "gaussian_tconorm generator");
      return gaussian_g(p.complement);
    case GeneratorKind::algebraic_tnorm:
      require_grade(t, "algebraic_tnorm generator");
      return t == 0.0 ? kGeneratorInfinity : -std::log(t);
    case GeneratorKind::algebraic_tconorm:
      require_grade(t, "algebraic_tconorm generator");
      if (t <= 0.5) return -std::log1p(-t);
      require_grade(p.complement, "algebraic_tconorm generator");
      return p.complement == 0.0 ? kGeneratorInfinity : -std::log(p.complement);
  }
  throw Error(Errc::domain, "unknown generator kind");
}

double GeneratorSpec::inverse(double s) const {
  switch (kind_) {
    case GeneratorKind::gaussian_tnorm:
      return gaussian_g_inverse(s);
    case GeneratorKind::gaussian_tconorm:
      return gaussian_h_inverse(s);
    case GeneratorKind::algebraic_tnorm:
      require_generator_value(s, "algebraic_tnorm inverse");
      return s >= kGeneratorInfinity ? 0.0 : std::exp(-s);
    case GeneratorKind::algebraic_tconorm:
      require_generator_value(s, "algebraic_tconorm inverse");
      return s >= kGeneratorInfinity ? 1.0 : -std::expm1(-s);
  }
  throw Error(Errc::domain, "unknown generator kind");
}

double generator_sum(GeneratorSpec spec, GradePair x, GradePair y) {
  return spec.inverse(saturate(spec.forward(x) + spec.forward(y)));
}

double generator_scale(GeneratorSpec spec, double lambda, GradePair x) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw Error(Errc::domain, "scale factor must be finite and nonnegative, got " +
                                  std::to_string(lambda));
  }
  if (lambda == 0.0) return spec.inverse(0.0);
  const double image = spec.forward(x);
  if (image >= kGeneratorInfinity) return spec.inverse(kGeneratorInfinity);
  return spec.inverse(saturate(lambda * image));
}

double weighted_generator_combine(GeneratorSpec spec, std::span<const GradePair> values,
                                  const WeightVector& weights) {
  if (values.empty()) {
    throw Error(Errc::domain, "weighted combine of an empty list");
  }
  if (values.size() != weights.size()) {
    std::ostringstream msg;
    msg << "weighted combine: " << values.size() << " values but " << weights.size()
        << " weights";
    throw Error(Errc::invalid_weights, msg.str());
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double image = spec.forward(values[i]);
    if (weights[i] == 0.0) continue;
    sum = image >= kGeneratorInfinity ? kGeneratorInfinity : saturate(sum + weights[i] * image);
  }
  return spec.inverse(sum);
}

double weighted_generator_combine(GeneratorSpec spec, std::span<const double> values,
                                  const WeightVector& weights) {
  std::vector<GradePair> pairs;
  pairs.reserve(values.size());
  for (double v : values) pairs.push_back(grade_pair(v));
  return weighted_generator_combine(spec, pairs, weights);
}

}  // namespace ccqrof
