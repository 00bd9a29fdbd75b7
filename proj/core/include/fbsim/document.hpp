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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fbsim/circuit.hpp"

namespace fbsim {

// Line-oriented circuit-description language, one statement per line,
// `#` comments, a single sweep variable spelled `$name`:
//
//   doc     := stats paths element* input sweep? ;
//   stats   := "stats" ("boson"|"fermion") NL ;
//   paths   := "paths" INT NL ;
//   element := ("bs" INT INT ["theta=" EXPR] | "phase" INT EXPR) NL ;
//   input   := "input" ("fock" INT+ | "pair" INT INT "r=" EXPR) NL ;
//   sweep   := "sweep" IDENT EXPR EXPR INT NL ;
//   EXPR    := decimal | "pi" ["/" INT] | "$" IDENT ;
//
// Angles are radians; `bs` without theta defaults to FIFTY_FIFTY.

/// An unevaluated numeric expression from a document.
struct Expr {
  enum class Kind { Number, Pi, Var };

  Kind kind = Kind::Number;
  double number = 0.0;     // Kind::Number
  int pi_divisor = 1;      // Kind::Pi: the value is pi / pi_divisor
  std::string var;         // Kind::Var

  static Expr make_number(double value);
  static Expr make_pi(int divisor);
  static Expr make_var(std::string name);

  /// Evaluates with at most one bound variable.
  double eval(const std::string& bound_name, double bound_value) const;
  bool references(const std::string& name) const {
    return kind == Kind::Var && var == name;
  }

  friend bool operator==(const Expr&, const Expr&) = default;
};

struct BsStatement {
  int path_a = 0;
  int path_b = 1;
  std::optional<Expr> theta;  // absent = FIFTY_FIFTY

  friend bool operator==(const BsStatement&, const BsStatement&) = default;
};

struct PhaseStatement {
  int path = 0;
  Expr phi;

  friend bool operator==(const PhaseStatement&, const PhaseStatement&) =
      default;
};

using ElementStatement = std::variant<BsStatement, PhaseStatement>;

struct FockInput {
  std::vector<int> counts;  // one per path

  friend bool operator==(const FockInput&, const FockInput&) = default;
};

struct PairInputStatement {
  int path_1 = 0;
  int path_2 = 1;
  Expr r;

  friend bool operator==(const PairInputStatement&,
                         const PairInputStatement&) = default;
};

using InputStatement = std::variant<FockInput, PairInputStatement>;

struct SweepStatement {
  std::string name;
  Expr start;
  Expr stop;
  int points = 1;

  friend bool operator==(const SweepStatement&, const SweepStatement&) =
      default;
};

struct CircuitDocument {
  Statistics statistics = Statistics::Boson;
  int n_paths = 2;
  std::vector<ElementStatement> elements;
  InputStatement input;
  std::optional<SweepStatement> sweep;

  friend bool operator==(const CircuitDocument&, const CircuitDocument&) =
      default;
};

/// Parses a complete document, reporting the first error with its 1-based
/// line and column. Statement order, path ranges, literal r bounds, and
/// sweep-variable references are all validated here.
CircuitDocument parse_document(std::string_view text);

/// Canonical rendering; parsing it back yields an equal document.
std::string print_document(const CircuitDocument& doc);

/// One probability table: a row per sweep point (a single row when there is
/// no sweep), columns for every path pattern that is declared or ever
/// detected, in lexicographic pattern order. Probabilities are rounded to
/// 12 significant digits.
struct ResultTable {
  std::vector<std::vector<int>> patterns;
  std::vector<double> params;
  std::vector<std::vector<double>> rows;
};

/// Evaluates the document over its sweep grid. The grid is half-open:
/// point k of n is start + k * (stop - start) / n. Evaluation failures
/// carry the offending sweep value in their message.
ResultTable run_document(const CircuitDocument& doc);

/// CSV with header `param,<pattern>,...`, LF line endings.
std::string to_csv(const ResultTable& table);

/// The same table as a JSON object with "columns" and "rows".
std::string to_json(const ResultTable& table);

}  // namespace fbsim
