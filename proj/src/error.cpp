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

#include "ccqrof/error.hpp"

namespace ccqrof {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::domain: return "domain";
    case Errc::constraint_violation: return "constraint_violation";
    case Errc::rung_mismatch: return "rung_mismatch";
    case Errc::invalid_weights: return "invalid_weights";
    case Errc::internal_consistency: return "internal_consistency";
    case Errc::malformed_json: return "malformed_json";
    case Errc::schema_violation: return "schema_violation";
  }
  return "unknown";
}

int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::malformed_json:
      return 2;
    case Errc::schema_violation:
    case Errc::constraint_violation:
    case Errc::rung_mismatch:
    case Errc::invalid_weights:
      return 3;
    case Errc::domain:
    case Errc::internal_consistency:
      return 4;
  }
  return 4;
}

}  // namespace ccqrof
