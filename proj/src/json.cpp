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

#include "ccqrof/json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "ccqrof/error.hpp"

namespace ccqrof {

namespace {

double number_field(const nlohmann::json& j, const char* key, const std::string& path) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw Error(Errc::schema_violation, path + ": missing \"" + key + "\"");
  }
  if (!it->is_number()) {
    throw Error(Errc::schema_violation, path + ": \"" + key + "\" must be a number");
  }
  return it->get<double>();
}

UnitComplexPair pair_field(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw Error(Errc::schema_violation, std::string("missing \"") + key + "\"");
  }
  if (!it->is_object()) {
    throw Error(Errc::schema_violation, std::string("\"") + key + "\" must be an object");
  }
  return {number_field(*it, "re", key), number_field(*it, "im", key)};
}

}  // namespace

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*e", digits - 1, x);
  return std::strtod(buffer, nullptr);
}

Json to_json(const FuzzyValue& v, int digits) {
  auto pair = [digits](const UnitComplexPair& p) {
    Json out = Json::object();
    out["re"] = round_significant(p.re, digits);
    out["im"] = round_significant(p.im, digits);
    return out;
  };
  Json out = Json::object();
  out["q"] = round_significant(v.q(), digits);
  out["mu"] = pair(v.mu());
  out["nu"] = pair(v.nu());
  out["r"] = round_significant(v.r(), digits);
  return out;
}

FuzzyValue value_from_json(const nlohmann::json& j, std::optional<double> inherited_q) {
  if (!j.is_object()) {
    throw Error(Errc::schema_violation, "fuzzy value must be a JSON object");
  }
  double q = 0.0;
  if (j.contains("q")) {
    q = number_field(j, "q", "value");
    if (inherited_q && q != *inherited_q) {
      throw Error(Errc::rung_mismatch, "value has q = " + std::to_string(q) +
                                           " but the matrix has q = " +
                                           std::to_string(*inherited_q));
    }
  } else if (inherited_q) {
    q = *inherited_q;
  } else {
    throw Error(Errc::schema_violation, "value: missing \"q\"");
  }
  RawValue raw{q, pair_field(j, "mu"), pair_field(j, "nu"), number_field(j, "r", "value")};
  return FuzzyValue::validate(raw);
}

}  // namespace ccqrof
