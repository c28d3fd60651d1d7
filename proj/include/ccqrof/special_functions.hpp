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

// Gaussian error function kernel shared by every Gaussian t-norm evaluation.
//
// All functions are pure and thread-safe. Within this library, call sites
// only ever pass arguments from [0, 1] (erf) and [0, erf(1)] (erfinv), where
// the implementations below are accurate to a few ulps in *relative* terms,
// which matters once results are raised to the 1/q power.

namespace ccqrof::special {

/// erf(1), the normalization constant of every Gaussian closed form.
inline constexpr double kErfOne = 0.84270079294971486934122063508260926;

/// 2/sqrt(pi)
inline constexpr double kTwoOverSqrtPi = 1.12837916709551257389615890312154517;

/// Gaussian error function. Maclaurin series for |x| <= 2, odd by
/// construction. Throws Error(Errc::domain) on non-finite input.
double erf(double x);

/// Inverse error function on (-1, 1). Rational starting point refined by
/// Newton steps on erf(). Throws Error(Errc::domain) for |y| >= 1 or NaN.
double erfinv(double y);

/// erf(1) - erf(1 - x) for x in [0, 1], without the cancellation that the
/// literal difference suffers for small x. The Gaussian t-conorm generator
/// lives on this quantity.
double erf_gap(double x);

/// Inverse of erf_gap on [0, erf(1)].
double erf_gap_inv(double d);

}  // namespace ccqrof::special
