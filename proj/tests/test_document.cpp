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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "fbsim/document.hpp"

using namespace fbsim;

namespace {

const char* kMziSweep =
    "stats boson\n"
    "paths 2\n"
    "bs 0 1\n"
    "phase 1 $phi\n"
    "bs 0 1\n"
    "input fock 1 1\n"
    "sweep phi 0 6.2832 64\n";

ParseError parse_failure(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("unreachable", 0, 0);
}

}  // namespace

TEST_CASE("the interferometer sweep document parses") {
  const CircuitDocument doc = parse_document(kMziSweep);
  REQUIRE(doc.statistics == Statistics::Boson);
  REQUIRE(doc.n_paths == 2);
  REQUIRE(doc.elements.size() == 3);
  const auto& phase = std::get<PhaseStatement>(doc.elements[1]);
  REQUIRE(phase.path == 1);
  REQUIRE(phase.phi == Expr::make_var("phi"));
  const auto& fock = std::get<FockInput>(doc.input);
  REQUIRE(fock.counts == std::vector<int>{1, 1});
  REQUIRE(doc.sweep.has_value());
  REQUIRE(doc.sweep->name == "phi");
  REQUIRE(doc.sweep->points == 64);
}

TEST_CASE("comments and blank lines are ignored") {
  const CircuitDocument doc = parse_document(
      "# a Hong-Ou-Mandel run\n\nstats boson\npaths 2\n"
      "bs 0 1 # the only element\n\ninput fock 1 1\n");
  REQUIRE(doc.elements.size() == 1);
  REQUIRE_FALSE(doc.sweep.has_value());
}

TEST_CASE("pi expressions evaluate literally") {
  const CircuitDocument doc = parse_document(
      "stats boson\npaths 2\nbs 0 1 theta=pi/4\nphase 1 pi\ninput fock 1 1\n");
  const auto& bs = std::get<BsStatement>(doc.elements[0]);
  REQUIRE(bs.theta == Expr::make_pi(4));
  REQUIRE(std::abs(bs.theta->eval("", 0.0) - std::numbers::pi / 4.0) < 1e-15);
  const auto& phase = std::get<PhaseStatement>(doc.elements[1]);
  REQUIRE(std::abs(phase.phi.eval("", 0.0) - std::numbers::pi) < 1e-15);
}

TEST_CASE("parse errors carry position and cause") {
  const ParseError equal_paths =
      parse_failure("stats boson\npaths 2\nbs 0 0\ninput fock 1 1\n");
  REQUIRE(equal_paths.line() == 3);
  REQUIRE(std::string(equal_paths.what()).find("differ") !=
          std::string::npos);

  REQUIRE_THROWS_AS(parse_document("stats boson\npaths 2\nbs 0 1\n"),
                    ParseError);  // no input statement
  REQUIRE_THROWS_AS(
      parse_document("paths 2\nstats boson\nbs 0 1\ninput fock 1 1\n"),
      ParseError);  // wrong order
  REQUIRE_THROWS_AS(
      parse_document("stats boson\npaths 2\nsplitter 0 1\ninput fock 1 1\n"),
      ParseError);  // unknown keyword
  REQUIRE_THROWS_AS(
      parse_document("stats boson\npaths 2\nbs 0 1\ninput fock 1\n"),
      ParseError);  // count/path mismatch
  REQUIRE_THROWS_AS(
      parse_document("stats boson\npaths 2\nbs 0 2\ninput fock 1 1\n"),
      ParseError);  // out-of-range path
  REQUIRE_THROWS_AS(
      parse_document(
          "stats boson\npaths 2\nbs 0 1\ninput pair 0 1 r=1.5\n"),
      ParseError);  // r outside [0, 1]
  REQUIRE_THROWS_AS(
      parse_document(
          "stats boson\npaths 2\nphase 1 $phi\ninput fock 1 1\n"),
      ParseError);  // parameter without a sweep
  REQUIRE_THROWS_AS(
      parse_document("stats boson\npaths 2\nphase 1 $x\ninput fock 1 1\n"
                     "sweep phi 0 1 4\n"),
      ParseError);  // parameter not the swept one
  REQUIRE_THROWS_AS(
      parse_document("stats boson\npaths 2\nbs 0 1 theta=pi/0\n"
                     "input fock 1 1\n"),
      ParseError);  // pi divisor
  REQUIRE_THROWS_AS(
      parse_document("stats muon\npaths 2\nbs 0 1\ninput fock 1 1\n"),
      ParseError);  // unknown statistics
  REQUIRE_THROWS_AS(parse_document(kMziSweep + std::string("bs 0 1\n")),
                    ParseError);  // statements after the sweep
}

TEST_CASE("fermionic pair on one path parses but fails at evaluation") {
  const CircuitDocument doc = parse_document(
      "stats fermion\npaths 2\nbs 0 1\ninput pair 0 0 r=1.0\n");
  REQUIRE_THROWS_AS(run_document(doc), PauliExclusionError);
  try {
    run_document(doc);
  } catch (const PauliExclusionError& e) {
    REQUIRE(std::string(e.what()).find("fermions") != std::string::npos);
  }
}

TEST_CASE("print and parse round-trip") {
  for (const char* text :
       {kMziSweep,
        "stats fermion\npaths 2\nbs 0 1\ninput pair 0 1 r=0.25\n",
        "stats boson\npaths 3\nbs 0 2 theta=pi/6\nphase 2 -1.25\n"
        "input fock 0 2 1\n",
        "stats boson\npaths 2\nbs 0 1 theta=$t\ninput fock 1 1\n"
        "sweep t 0 pi/2 9\n"}) {
    const CircuitDocument doc = parse_document(text);
    const std::string printed = print_document(doc);
    REQUIRE(parse_document(printed) == doc);
  }
}

TEST_CASE("random documents round-trip through print") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> paths(2, 4);
  std::uniform_int_distribution<int> n_elements(0, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_real_distribution<double> value(-4.0, 4.0);
  std::uniform_int_distribution<int> divisor(1, 8);

  for (int i = 0; i < 100; ++i) {
    CircuitDocument doc;
    doc.statistics = coin(rng) == 0 ? Statistics::Boson : Statistics::Fermion;
    doc.n_paths = paths(rng);
    std::uniform_int_distribution<int> path(0, doc.n_paths - 1);
    const bool swept = coin(rng) == 1;

    auto random_expr = [&]() -> Expr {
      switch (swept ? rng() % 3 : rng() % 2) {
        case 0:
          return Expr::make_number(value(rng));
        case 1:
          return Expr::make_pi(divisor(rng));
        default:
          return Expr::make_var("x");
      }
    };

    const int count = n_elements(rng);
    for (int e = 0; e < count; ++e) {
      if (coin(rng) == 0) {
        BsStatement bs;
        bs.path_a = path(rng);
        bs.path_b = (bs.path_a + 1 + path(rng)) % doc.n_paths;
        if (bs.path_b == bs.path_a) bs.path_b = (bs.path_a + 1) % doc.n_paths;
        if (coin(rng) == 1) bs.theta = random_expr();
        doc.elements.push_back(bs);
      } else {
        doc.elements.push_back(PhaseStatement{path(rng), random_expr()});
      }
    }
    if (coin(rng) == 0) {
      FockInput fock;
      for (int p = 0; p < doc.n_paths; ++p) {
        fock.counts.push_back(static_cast<int>(rng() % 3));
      }
      doc.input = fock;
    } else {
      PairInputStatement pair;
      pair.path_1 = path(rng);
      pair.path_2 = path(rng);
      pair.r = Expr::make_number(0.5);
      doc.input = pair;
    }
    if (swept) {
      doc.sweep = SweepStatement{"x", Expr::make_number(value(rng)),
                                 Expr::make_pi(divisor(rng)),
                                 1 + static_cast<int>(rng() % 16)};
    }

    const std::string printed = print_document(doc);
    INFO(printed);
    REQUIRE(parse_document(printed) == doc);
  }
}

TEST_CASE("balanced interferometer sweep rows follow cos^2") {
  const ResultTable table = run_document(parse_document(kMziSweep));
  REQUIRE(table.params.size() == 64);
  REQUIRE(table.rows.size() == 64);
  REQUIRE(std::abs(table.params[0]) < 1e-15);

  // Column order is lexicographic in the pattern.
  REQUIRE(table.patterns ==
          std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});

  size_t coincidence = 1;
  REQUIRE(std::abs(table.rows[0][coincidence] - 1.0) < kAmplitudeTolerance);
  for (size_t row = 0; row < table.rows.size(); ++row) {
    const double phi = table.params[row];
    const double expected = std::cos(phi) * std::cos(phi);
    REQUIRE(std::abs(table.rows[row][coincidence] - expected) < 1e-9);
  }

  // Point 16 of 64 over [0, 6.2832) sits at ~pi/2: the pair bunches.
  REQUIRE(std::abs(table.rows[16][0] - 0.5) < 1e-6);
  REQUIRE(std::abs(table.rows[16][1]) < 1e-6);
  REQUIRE(std::abs(table.rows[16][2] - 0.5) < 1e-6);
}

TEST_CASE("a sweep-free fermion interferometer yields one row") {
  const ResultTable table = run_document(parse_document(
      "stats fermion\npaths 2\nbs 0 1\nphase 1 0\nbs 0 1\ninput fock 1 1\n"));
  REQUIRE(table.rows.size() == 1);
  REQUIRE(table.patterns == std::vector<std::vector<int>>{{1, 1}});
  REQUIRE(std::abs(table.rows[0][0] - 1.0) < kAmplitudeTolerance);
}

TEST_CASE("declared fock patterns appear even with zero probability") {
  // HOM: the (1,1) input pattern never fires but stays a column.
  const ResultTable table = run_document(parse_document(
      "stats boson\npaths 2\nbs 0 1\ninput fock 1 1\n"));
  REQUIRE(table.patterns ==
          std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
  REQUIRE(table.rows[0][1] == 0.0);
}

TEST_CASE("sweeping the overlap parameter is allowed") {
  const ResultTable table = run_document(parse_document(
      "stats boson\npaths 2\nbs 0 1\ninput pair 0 1 r=$r\n"
      "sweep r 0 1 5\n"));
  REQUIRE(table.rows.size() == 5);
  for (size_t row = 0; row < table.rows.size(); ++row) {
    const double r = table.params[row];
    size_t coincidence = 1;
    REQUIRE(std::abs(table.rows[row][coincidence] - (1.0 - r) / 2.0) <
            kAmplitudeTolerance);
  }
}

TEST_CASE("csv output has the stated shape") {
  const ResultTable table = run_document(parse_document(
      "stats boson\npaths 2\nbs 0 1\ninput fock 1 1\n"));
  const std::string csv = to_csv(table);
  REQUIRE(csv.starts_with("param,0|2,1|1,2|0\n"));
  REQUIRE(csv.find("\r") == std::string::npos);
  std::istringstream lines(csv);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  REQUIRE(row == "0,0.5,0,0.5");
}

TEST_CASE("json output mirrors the csv table") {
  const ResultTable table = run_document(parse_document(
      "stats fermion\npaths 2\nbs 0 1\ninput fock 1 1\n"));
  const nlohmann::json parsed = nlohmann::json::parse(to_json(table));
  REQUIRE(parsed["columns"] ==
          nlohmann::json::array({"param", "1|1"}));
  REQUIRE(parsed["rows"].size() == 1);
  REQUIRE(std::abs(parsed["rows"][0][1].get<double>() - 1.0) < 1e-12);
}

TEST_CASE("evaluation errors carry the offending sweep value") {
  // theta is fine; r leaves [0, 1] as the sweep passes 1.
  const CircuitDocument doc = parse_document(
      "stats boson\npaths 2\nbs 0 1\ninput pair 0 1 r=$r\n"
      "sweep r 1 3 4\n");
  try {
    run_document(doc);
    FAIL("expected an evaluation error");
  } catch (const Error& e) {
    REQUIRE(std::string(e.what()).find("at r = 1.5") != std::string::npos);
  }
}

TEST_CASE("probabilities are rounded to 12 significant digits") {
  const ResultTable table = run_document(parse_document(
      "stats boson\npaths 2\nbs 0 1 theta=0.3\ninput fock 1 0\n"));
  for (double p : table.rows[0]) {
    std::ostringstream os;
    os.precision(12);
    os << p;
    REQUIRE(std::abs(std::stod(os.str()) - p) == 0.0);
  }
}
