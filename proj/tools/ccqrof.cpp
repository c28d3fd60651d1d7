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

// ccqrof aggregate --input <path> --operator wa|wg --radius-rule <kind>
//                  --score-radius-weight <0..1> [--output <path>]
//
// Exit status: 0 success, 1 usage or I/O, 2 malformed JSON, 3 validation,
// 4 computation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ccqrof/decision_matrix.hpp"
#include "ccqrof/error.hpp"

namespace {

constexpr int kExitUsage = 1;

int aggregate_command(const std::string& input, const std::string& output,
                      const std::string& op_name, const std::string& rule_name,
                      double radius_weight) {
  std::ifstream in(input, std::ios::binary);
  if (!in) {
    std::cerr << "error[io]: cannot open " << input << "\n";
    return kExitUsage;
  }
  std::ostringstream text;
  text << in.rdbuf();

  try {
    const ccqrof::DecisionMatrix matrix = ccqrof::parse_matrix(text.str());
    ccqrof::RunOptions options;
    options.op = *ccqrof::parse_aggregator(op_name);
    options.radius_rule.generator = ccqrof::GeneratorSpec(*ccqrof::parse_generator_kind(rule_name));
    options.score_radius_weight = radius_weight;
    const std::string report = ccqrof::render_report(ccqrof::run(matrix, options));
    if (output.empty()) {
      std::cout << report;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!(out << report)) {
        std::cerr << "error[io]: cannot write " << output << "\n";
        return kExitUsage;
      }
    }
  } catch (const ccqrof::Error& e) {
    std::cerr << "error[" << ccqrof::to_string(e.code()) << "]: " << e.what() << "\n";
    return ccqrof::exit_code(e.code());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian aggregation of circular complex q-rung orthopair fuzzy decision matrices"};
  app.require_subcommand(1);

  auto* aggregate = app.add_subcommand("aggregate", "aggregate each alternative across criteria");
  std::string input;
  std::string output;
  std::string op_name;
  std::string rule_name = "algebraic-tnorm";
  double radius_weight = 0.0;
  aggregate->add_option("--input", input, "decision matrix JSON")->required();
  aggregate->add_option("--operator", op_name, "wa (weighted arithmetic) or wg (weighted geometric)")
      ->required()
      ->check(CLI::IsMember({"wa", "wg"}));
  aggregate->add_option("--radius-rule", rule_name, "additive generator combining radii")
      ->check(CLI::IsMember(
          {"algebraic-tnorm", "algebraic-tconorm", "gaussian-tnorm", "gaussian-tconorm"}))
      ->capture_default_str();
  aggregate->add_option("--score-radius-weight", radius_weight,
                        "weight of the radius in the ranking score, in [0, 1]")
      ->capture_default_str();
  aggregate->add_option("--output", output, "report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : kExitUsage;
  }
  return aggregate_command(input, output, op_name, rule_name, radius_weight);
}
