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

#include "ccqrof/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ccqrof/error.hpp"

namespace ccqrof::special {

namespace {

constexpr double kSeriesCutoff = 1e-18;
constexpr int kMaxNewton = 50;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Maclaurin series sum_{n>=0} (-1)^n x^{2n+1} / (n! (2n+1)), x >= 0.
// Stops once a term is below kSeriesCutoff relative to the running sum.
double erf_series(double x) {
  const double x2 = x * x;
  double power = x;  // (-1)^n x^{2n+1} / n!
  double sum = x;
  for (int n = 1; n < 200; ++n) {
    power *= -x2 / n;
    const double term = power / (2 * n + 1);
    sum += term;
    if (std::fabs(term) <= kSeriesCutoff * std::fabs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

double erf_positive(double x) {
  if (x <= 2.0) return erf_series(x);
  return std::erf(x);
}

// Single-precision rational approximation (Giles 2010) used as a starting point.
double erfinv_guess(double y) {
  double w = -std::log((1.0 - y) * (1.0 + y));
  double p;
  if (w < 5.0) {
    w -= 2.5;
    p = 2.81022636e-08;
    p = 3.43273939e-07 + p * w;
    p = -3.5233877e-06 + p * w;
    p = -4.39150654e-06 + p * w;
    p = 0.00021858087 + p * w;
    p = -0.00125372503 + p * w;
    p = -0.00417768164 + p * w;
    p = 0.246640727 + p * w;
    p = 1.50140941 + p * w;
  } else {
    w = std::sqrt(w) - 3.0;
    p = -0.000200214257;
    p = 0.000100950558 + p * w;
    p = 0.00134934322 + p * w;
    p = -0.00367342844 + p * w;
    p = 0.00573950773 + p * w;
    p = -0.0076224613 + p * w;
    p = 0.00943887047 + p * w;
    p = 1.00167406 + p * w;
    p = 2.83297682 + p * w;
  }
  return p * y;
}

// Series in powers of x from the Hermite generating function:
//   exp(-(1-s)^2) = e^{-1} sum_n H_n(1) s^n / n!
// so erf(1) - erf(1-x) = 2/(e sqrt(pi)) sum_n H_n(1) x^{n+1} / (n+1)!.
double gap_series(double x) {
  constexpr double kScale = 0.41510749742059470334;  // 2 / (e sqrt(pi))
  double h_prev = 1.0;   // H_0(1)
  double h_curr = 2.0;   // H_1(1)
  double power = x;      // x^{n+1} / (n+1)!
  double sum = x;        // n = 0 term
  int small_terms = 0;
  for (int n = 1; n < 120; ++n) {
    power *= x / (n + 1);
    const double term = h_curr * power;
    sum += term;
    small_terms = std::fabs(term) <= kSeriesCutoff * std::fabs(sum) ? small_terms + 1 : 0;
    if (small_terms >= 2) break;
    const double h_next = 2.0 * h_curr - 2.0 * n * h_prev;
    h_prev = h_curr;
    h_curr = h_next;
  }
  return kScale * sum;
}

}  // namespace

double erf(double x) {
  if (!std::isfinite(x)) {
    throw Error(Errc::domain, "erf: non-finite argument");
  }
  return std::signbit(x) ? -erf_positive(-x) : erf_positive(x);
}

double erfinv(double y) {
  if (std::isnan(y) || std::fabs(y) >= 1.0) {
    throw Error(Errc::domain, "erfinv: argument must lie in (-1, 1), got " + std::to_string(y));
  }
  if (y == 0.0) return y;
  const double ay = std::fabs(y);
  double x = erfinv_guess(ay);
  for (int i = 0; i < kMaxNewton; ++i) {
    const double residual = erf_positive(x) - ay;
    if (residual == 0.0) break;
    const double step = residual / (kTwoOverSqrtPi * std::exp(-x * x));
    x -= step;
    if (std::fabs(step) <= 2.0 * kEps * std::fabs(x)) break;
  }
  return std::copysign(x, y);
}

double erf_gap(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(Errc::domain, "erf_gap: argument must lie in [0, 1]");
  }
  if (x <= 0.5) return gap_series(x);
  return kErfOne - erf_positive(1.0 - x);
}

double erf_gap_inv(double d) {
  if (!(d >= 0.0) || d > kErfOne * (1.0 + 4 * kEps)) {
    throw Error(Errc::domain, "erf_gap_inv: argument must lie in [0, erf(1)]");
  }
  if (d == 0.0) return 0.0;
  if (d >= kErfOne) return 1.0;
  // Derivative of erf_gap at 0 is 2 / (e sqrt(pi)).
  double x = d < 1e-4 ? d / 0.41510749742059470334 : 1.0 - erfinv(kErfOne - d);
  x = std::fmin(std::fmax(x, 0.0), 1.0);
  for (int i = 0; i < kMaxNewton; ++i) {
    const double residual = erf_gap(x) - d;
    if (residual == 0.0) break;
    const double slope = kTwoOverSqrtPi * std::exp(-(1.0 - x) * (1.0 - x));
    const double next = std::fmin(std::fmax(x - residual / slope, 0.0), 1.0);
    const double step = next - x;
    x = next;
    if (std::fabs(step) <= 2.0 * kEps * x) break;
  }
  return x;
}

}  // namespace ccqrof::special
