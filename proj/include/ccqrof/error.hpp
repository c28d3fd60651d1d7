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

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccqrof {

/// Machine-readable error categories. Every exception thrown by the library
/// is a ccqrof::Error carrying one of these.
enum class Errc {
  domain,                ///< argument outside a function's mathematical domain
  constraint_violation,  ///< rung constraint, grade range or radius range breached
  rung_mismatch,         ///< operands carry different q
  invalid_weights,       ///< weight vector not a probability vector
  internal_consistency,  ///< round-off exceeded the clamp tolerance
  malformed_json,        ///< input document is not JSON
  schema_violation,      ///< JSON is well formed but has the wrong shape
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Process exit status used by the command line front end for an error category.
///   2  parse (malformed JSON)
///   3  validation (schema, constraints, weights, rung)
///   4  computation (domain, internal consistency)
int exit_code(Errc code) noexcept;

}  // namespace ccqrof
