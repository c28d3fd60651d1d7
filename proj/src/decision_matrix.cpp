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

#include "ccqrof/decision_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ccqrof/error.hpp"
#include "ccqrof/json.hpp"

namespace ccqrof {

namespace {

std::string cell_context(const std::string& name, std::size_t criterion) {
  return "alternative \"" + name + "\", criterion " + std::to_string(criterion + 1) + ": ";
}

const nlohmann::json& require_key(const nlohmann::json& j, const char* key,
                                  const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw Error(Errc::schema_violation, where + "missing \"" + key + "\"");
  }
  return *it;
}

}  // namespace

DecisionMatrix parse_matrix(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document.begin(), document.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::malformed_json, e.what());
  }
  if (!doc.is_object()) {
    throw Error(Errc::schema_violation, "matrix document must be a JSON object");
  }

  const auto& q_node = require_key(doc, "q", "matrix: ");
  if (!q_node.is_number()) throw Error(Errc::schema_violation, "matrix: \"q\" must be a number");
  const double q = q_node.get<double>();
  if (!(q >= 1.0) || !std::isfinite(q)) {
    throw Error(Errc::constraint_violation, "matrix: q must be a finite number >= 1");
  }

  const auto& w_node = require_key(doc, "weights", "matrix: ");
  if (!w_node.is_array()) {
    throw Error(Errc::schema_violation, "matrix: \"weights\" must be an array");
  }
  std::vector<double> raw_weights;
  for (const auto& w : w_node) {
    if (!w.is_number()) throw Error(Errc::schema_violation, "matrix: weights must be numbers");
    raw_weights.push_back(w.get<double>());
  }
  WeightVector weights = WeightVector::make(std::move(raw_weights));

  const auto& alt_node = require_key(doc, "alternatives", "matrix: ");
  if (!alt_node.is_array()) {
    throw Error(Errc::schema_violation, "matrix: \"alternatives\" must be an array");
  }
  if (alt_node.empty()) {
    throw Error(Errc::schema_violation, "matrix: no alternatives");
  }

  std::vector<Alternative> alternatives;
  for (std::size_t a = 0; a < alt_node.size(); ++a) {
    const auto& alt = alt_node[a];
    const std::string where = "alternative " + std::to_string(a + 1) + ": ";
    if (!alt.is_object()) throw Error(Errc::schema_violation, where + "must be an object");
    const auto& name_node = require_key(alt, "name", where);
    if (!name_node.is_string()) {
      throw Error(Errc::schema_violation, where + "\"name\" must be a string");
    }
    Alternative out{name_node.get<std::string>(), {}};
    const auto& values = require_key(alt, "values", "alternative \"" + out.name + "\": ");
    if (!values.is_array()) {
      throw Error(Errc::schema_violation,
                  "alternative \"" + out.name + "\": \"values\" must be an array");
    }
    if (values.size() != weights.size()) {
      throw Error(Errc::schema_violation,
                  "alternative \"" + out.name + "\": " + std::to_string(values.size()) +
                      " values but " + std::to_string(weights.size()) + " criteria weights");
    }
    for (std::size_t c = 0; c < values.size(); ++c) {
      try {
        out.values.push_back(value_from_json(values[c], q));
      } catch (const Error& e) {
        throw Error(e.code(), cell_context(out.name, c) + e.what());
      }
    }
    alternatives.push_back(std::move(out));
  }
  return DecisionMatrix{q, std::move(weights), std::move(alternatives)};
}

void assign_ranks(std::vector<ResultRow>& rows) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto reported = [&rows](std::size_t i) { return round_significant(rows[i].score); };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return reported(l) > reported(r); });
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    ResultRow& row = rows[order[pos]];
    row.rank = static_cast<int>(pos + 1);
    const bool same_prev = pos > 0 && reported(order[pos - 1]) == reported(order[pos]);
    const bool same_next =
        pos + 1 < order.size() && reported(order[pos + 1]) == reported(order[pos]);
    row.tie = same_prev || same_next;
  }
}

Report run(const DecisionMatrix& matrix, const RunOptions& options) {
  Report report{options.op, options.radius_rule.generator.kind(), {}};
  report.results.reserve(matrix.alternatives.size());
  for (const Alternative& alt : matrix.alternatives) {
    const FuzzyValue value =
        aggregate(options.op, alt.values, matrix.criteria_weights, options.radius_rule);
    report.results.push_back(ResultRow{alt.name, value, neutral(value),
                                       plumbing_score(value, options.score_radius_weight)});
  }
  assign_ranks(report.results);
  return report;
}

std::string render_report(const Report& report) {
  Json doc = Json::object();
  doc["operator"] = std::string(to_string(report.op));
  doc["radius_rule"] = std::string(to_string(report.radius_rule));
  Json results = Json::array();
  for (const ResultRow& row : report.results) {
    Json entry = Json::object();
    entry["name"] = row.name;
    entry["aggregated"] = to_json(row.aggregated);
    Json neutral_json = Json::object();
    neutral_json["re"] = round_significant(row.neutral.re);
    neutral_json["im"] = round_significant(row.neutral.im);
    entry["neutral"] = std::move(neutral_json);
    entry["score"] = round_significant(row.score);
    entry["rank"] = row.rank;
    entry["tie"] = row.tie;
    results.push_back(std::move(entry));
  }
  doc["results"] = std::move(results);
  doc["score_note"] = std::string(kScoreNote);
  return doc.dump(2) + "\n";
}

}  // namespace ccqrof
