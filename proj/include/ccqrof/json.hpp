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

#include <json.hpp>

#include "ccqrof/value.hpp"

namespace ccqrof {

using Json = nlohmann::ordered_json;

/// Significant digits used for every number the command line tool emits.
inline constexpr int kReportDigits = 12;

/// Round to `digits` significant decimal digits (round-half-even on the
/// decimal expansion, as printf does).
double round_significant(double x, int digits = kReportDigits);

/// {"q": q, "mu": {"re", "im"}, "nu": {"re", "im"}, "r": r}
Json to_json(const FuzzyValue& v, int digits = kReportDigits);

/// Parses the canonical rendering. When `inherited_q` is set the "q" key may
/// be omitted; if present it must equal the inherited rung. Shape errors
/// throw Errc::schema_violation, constraint errors Errc::constraint_violation,
/// a conflicting rung Errc::rung_mismatch.
FuzzyValue value_from_json(const nlohmann::json& j, std::optional<double> inherited_q = {});

}  // namespace ccqrof
