// Copyright 2026 The fbsim Authors
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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fbsim/document.hpp"
#include "fbsim/scenarios.hpp"

namespace {

// Exit codes: 0 success, 1 scenario failures, 2 parse/input errors,
// 3 evaluation errors.
constexpr int kExitParseError = 2;
constexpr int kExitEvaluationError = 3;

int read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kExitParseError;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return 0;
}

int run_command(const std::string& path, const std::string& format,
                const std::string& out_path) {
  std::string text;
  if (int rc = read_file(path, text); rc != 0) return rc;

  fbsim::CircuitDocument doc;
  try {
    doc = fbsim::parse_document(text);
  } catch (const fbsim::ParseError& e) {
    std::cerr << path << ": parse error: " << e.what() << "\n";
    return kExitParseError;
  }

  std::string rendered;
  try {
    const fbsim::ResultTable table = fbsim::run_document(doc);
    rendered = format == "json" ? fbsim::to_json(table) : fbsim::to_csv(table);
  } catch (const std::exception& e) {
    std::cerr << path << ": evaluation error: " << e.what() << "\n";
    return kExitEvaluationError;
  }

  if (out_path.empty()) {
    std::cout << rendered;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitEvaluationError;
  }
  out << rendered;
  return 0;
}

int check_command(const std::string& path) {
  std::string text;
  if (int rc = read_file(path, text); rc != 0) return rc;
  try {
    fbsim::parse_document(text);
  } catch (const fbsim::ParseError& e) {
    std::cerr << path << ": parse error: " << e.what() << "\n";
    return kExitParseError;
  }
  std::cout << path << ": OK\n";
  return 0;
}

int scenarios_command() {
  bool all_passed = true;
  for (const fbsim::ScenarioResult& result : fbsim::run_all_scenarios()) {
    if (result.passed) {
      std::cout << "PASS " << result.name << "\n";
    } else {
      std::cout << "FAIL " << result.name << ": " << result.detail << "\n";
      all_passed = false;
    }
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact few-particle simulator for bosons and fermions in "
               "linear mode networks"};
  app.require_subcommand(1);

  std::string run_path;
  std::string format = "csv";
  std::string out_path;
  CLI::App* run = app.add_subcommand(
      "run", "Evaluate a circuit document and print the result table");
  run->add_option("file", run_path, "circuit document")->required();
  run->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--out", out_path, "write the table to a file");

  std::string check_path;
  CLI::App* check =
      app.add_subcommand("check", "Parse a circuit document without running");
  check->add_option("file", check_path, "circuit document")->required();

  CLI::App* scenarios = app.add_subcommand(
      "scenarios", "Run the built-in scenario catalog against its expected "
                   "distributions");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return run_command(run_path, format, out_path);
  if (check->parsed()) return check_command(check_path);
  if (scenarios->parsed()) return scenarios_command();
  return 0;
}
