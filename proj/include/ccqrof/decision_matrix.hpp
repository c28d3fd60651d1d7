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

// Decision matrices and aggregation reports for the `ccqrof aggregate` tool.
//
// Input document:
//   {"q": number, "weights": [number...],
//    "alternatives": [{"name": string, "values": [cell...]}...]}
// where each cell is the canonical value rendering with "q" optional.
//
// Report document:
//   {"operator", "radius_rule",
//    "results": [{"name", "aggregated", "neutral", "score", "rank", "tie"}...],
//    "score_note": "non-paper plumbing"}

#include <string>
#include <string_view>
#include <vector>

#include "ccqrof/aggregation.hpp"
#include "ccqrof/generators.hpp"
#include "ccqrof/value.hpp"
#include "ccqrof/weights.hpp"

namespace ccqrof {

inline constexpr std::string_view kScoreNote = "non-paper plumbing";

struct Alternative {
  std::string name;
  std::vector<FuzzyValue> values;
};

struct DecisionMatrix {
  double q;
  WeightVector criteria_weights;
  std::vector<Alternative> alternatives;
};

/// Errors: Errc::malformed_json when the text is not JSON; schema,
/// constraint, weight and rung errors otherwise. Messages name the
/// alternative and the 1-based criterion of the offending cell.
DecisionMatrix parse_matrix(std::string_view document);

struct RunOptions {
  Aggregator op = Aggregator::weighted_average;
  RadiusRule radius_rule{};
  double score_radius_weight = 0.0;
};

struct ResultRow {
  std::string name;
  FuzzyValue aggregated;
  NeutralPair neutral;
  double score;
  int rank = 0;
  bool tie = false;
};

struct Report {
  Aggregator op;
  GeneratorKind radius_rule;
  std::vector<ResultRow> results;  // input order
};

Report run(const DecisionMatrix& matrix, const RunOptions& options);

/// Ranks by descending score as reported (rounded to kReportDigits), ties
/// broken by input order. Rows sharing a reported score get tie = true.
void assign_ranks(std::vector<ResultRow>& rows);

/// Pretty-printed JSON followed by a newline. Identical reports render to
/// identical bytes.
std::string render_report(const Report& report);

}  // namespace ccqrof
