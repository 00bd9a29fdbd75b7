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

#include "fbsim/document.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <set>

#include <json.hpp>

namespace fbsim {

Expr Expr::make_number(double value) {
  Expr e;
  e.kind = Kind::Number;
  e.number = value;
  return e;
}

Expr Expr::make_pi(int divisor) {
  Expr e;
  e.kind = Kind::Pi;
  e.pi_divisor = divisor;
  return e;
}

Expr Expr::make_var(std::string name) {
  Expr e;
  e.kind = Kind::Var;
  e.var = std::move(name);
  return e;
}

double Expr::eval(const std::string& bound_name, double bound_value) const {
  switch (kind) {
    case Kind::Number:
      return number;
    case Kind::Pi:
      return std::numbers::pi / static_cast<double>(pi_divisor);
    case Kind::Var:
      if (var != bound_name) {
        throw Error("unbound parameter '$" + var + "'");
      }
      return bound_value;
  }
  throw Error("invalid expression");
}

namespace {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

struct StatementLine {
  std::vector<Token> tokens;
};

std::vector<StatementLine> tokenize(std::string_view text) {
  std::vector<StatementLine> lines;
  int line_number = 1;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                       : eol - pos);
    StatementLine statement;
    size_t i = 0;
    while (i < line.size()) {
      if (line[i] == '#') break;
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      const size_t start = i;
      while (i < line.size() && line[i] != '#' &&
             !std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
      }
      statement.tokens.push_back(Token{std::string(line.substr(start, i - start)),
                                       line_number,
                                       static_cast<int>(start) + 1});
    }
    if (!statement.tokens.empty()) lines.push_back(std::move(statement));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++line_number;
  }
  return lines;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text)
      : lines_(tokenize(text)),
        end_line_(lines_.empty() ? 1 : lines_.back().tokens[0].line + 1) {}

  CircuitDocument parse() {
    CircuitDocument doc;
    doc.statistics = parse_stats();
    doc.n_paths = parse_paths();

    while (true) {
      const Token& keyword = peek_keyword("an element or the input statement");
      if (keyword.text == "bs") {
        doc.elements.push_back(parse_bs(doc.n_paths));
      } else if (keyword.text == "phase") {
        doc.elements.push_back(parse_phase(doc.n_paths));
      } else if (keyword.text == "input") {
        doc.input = parse_input(doc.n_paths);
        break;
      } else {
        fail(keyword, known_keyword(keyword.text)
                          ? "expected an element or the input statement, got '" +
                                keyword.text + "'"
                          : "unknown keyword '" + keyword.text + "'");
      }
    }

    if (index_ < lines_.size()) {
      const Token& keyword = lines_[index_].tokens[0];
      if (keyword.text != "sweep") {
        fail(keyword, known_keyword(keyword.text)
                          ? "expected a sweep statement or the end of the "
                            "document, got '" +
                                keyword.text + "'"
                          : "unknown keyword '" + keyword.text + "'");
      }
      doc.sweep = parse_sweep();
    }
    if (index_ < lines_.size()) {
      fail(lines_[index_].tokens[0], "statements after the sweep");
    }

    // Every $reference must name the swept parameter.
    for (const Token& ref : var_references_) {
      const std::string name = ref.text.substr(1);
      if (!doc.sweep) {
        fail(ref, "parameter '$" + name + "' used without a sweep");
      }
      if (doc.sweep->name != name) {
        fail(ref, "unknown parameter '$" + name + "'; the sweep declares '$" +
                      doc.sweep->name + "'");
      }
    }
    return doc;
  }

 private:
  static bool known_keyword(const std::string& word) {
    return word == "stats" || word == "paths" || word == "bs" ||
           word == "phase" || word == "input" || word == "sweep";
  }

  [[noreturn]] void fail(const Token& token, const std::string& message) const {
    throw ParseError(message, token.line, token.column);
  }

  [[noreturn]] void fail_at_end(const std::string& message) const {
    throw ParseError(message, end_line_, 1);
  }

  const StatementLine& expect_line(const std::string& what) {
    if (index_ >= lines_.size()) {
      fail_at_end("document ended before " + what);
    }
    return lines_[index_];
  }

  const Token& peek_keyword(const std::string& what) {
    return expect_line(what).tokens[0];
  }

  // Consumes the current line, checking keyword and argument count.
  const std::vector<Token>& take(const std::string& keyword, size_t min_args,
                                 size_t max_args) {
    const StatementLine& line = expect_line("the '" + keyword + "' statement");
    const std::vector<Token>& tokens = line.tokens;
    if (tokens[0].text != keyword) {
      fail(tokens[0], known_keyword(tokens[0].text)
                          ? "expected '" + keyword + "', got '" +
                                tokens[0].text + "'"
                          : "unknown keyword '" + tokens[0].text + "'");
    }
    const size_t args = tokens.size() - 1;
    if (args < min_args) {
      fail(tokens[0], "'" + keyword + "' needs more arguments");
    }
    if (args > max_args) {
      fail(tokens[max_args + 1], "unexpected argument to '" + keyword + "'");
    }
    ++index_;
    return tokens;
  }

  int parse_int(const Token& token, int min_value) const {
    int value = 0;
    const char* begin = token.text.data();
    const char* end = begin + token.text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
      fail(token, "expected an integer, got '" + token.text + "'");
    }
    if (value < min_value) {
      fail(token, "integer " + token.text + " must be at least " +
                      std::to_string(min_value));
    }
    return value;
  }

  int parse_path(const Token& token, int n_paths) const {
    const int path = parse_int(token, 0);
    if (path >= n_paths) {
      fail(token, "path " + token.text + " is outside the " +
                      std::to_string(n_paths) + "-path network");
    }
    return path;
  }

  Expr parse_expr(const Token& token) {
    const std::string& s = token.text;
    if (s.starts_with("$")) {
      const std::string name = s.substr(1);
      if (!is_identifier(name)) {
        fail(token, "invalid parameter reference '" + s + "'");
      }
      var_references_.push_back(token);
      return Expr::make_var(name);
    }
    if (s == "pi") return Expr::make_pi(1);
    if (s.starts_with("pi/")) {
      Token divisor_token = token;
      divisor_token.text = s.substr(3);
      divisor_token.column += 3;
      const int divisor = parse_int(divisor_token, 1);
      return Expr::make_pi(divisor);
    }
    double value = 0.0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
      fail(token, "expected a number, 'pi[/n]' or '$name', got '" + s + "'");
    }
    return Expr::make_number(value);
  }

  // "key=EXPR" arguments such as theta=pi/4 or r=0.5.
  Expr parse_keyed_expr(const Token& token, const std::string& key) {
    const std::string prefix = key + "=";
    if (!token.text.starts_with(prefix)) {
      fail(token, "expected '" + prefix + "...', got '" + token.text + "'");
    }
    Token value = token;
    value.text = token.text.substr(prefix.size());
    value.column += static_cast<int>(prefix.size());
    if (value.text.empty()) fail(value, "missing value after '" + prefix + "'");
    return parse_expr(value);
  }

  Statistics parse_stats() {
    const auto& tokens = take("stats", 1, 1);
    if (tokens[1].text == "boson") return Statistics::Boson;
    if (tokens[1].text == "fermion") return Statistics::Fermion;
    fail(tokens[1],
         "statistics must be 'boson' or 'fermion', got '" + tokens[1].text +
             "'");
  }

  int parse_paths() {
    const auto& tokens = take("paths", 1, 1);
    return parse_int(tokens[1], 1);
  }

  ElementStatement parse_bs(int n_paths) {
    const auto& tokens = take("bs", 2, 3);
    BsStatement bs;
    bs.path_a = parse_path(tokens[1], n_paths);
    bs.path_b = parse_path(tokens[2], n_paths);
    if (bs.path_a == bs.path_b) {
      fail(tokens[2], "beamsplitter paths must differ");
    }
    if (tokens.size() == 4) bs.theta = parse_keyed_expr(tokens[3], "theta");
    return bs;
  }

  ElementStatement parse_phase(int n_paths) {
    const auto& tokens = take("phase", 2, 2);
    PhaseStatement phase;
    phase.path = parse_path(tokens[1], n_paths);
    phase.phi = parse_expr(tokens[2]);
    return phase;
  }

  InputStatement parse_input(int n_paths) {
    const auto& tokens = take("input", 1, std::string::npos);
    if (tokens[1].text == "fock") {
      FockInput fock;
      if (tokens.size() - 2 != static_cast<size_t>(n_paths)) {
        fail(tokens[1], "'input fock' needs one count per path (" +
                            std::to_string(n_paths) + ")");
      }
      for (size_t i = 2; i < tokens.size(); ++i) {
        fock.counts.push_back(parse_int(tokens[i], 0));
      }
      return fock;
    }
    if (tokens[1].text == "pair") {
      if (tokens.size() != 5) {
        fail(tokens[1], "'input pair' needs two paths and r=...");
      }
      PairInputStatement pair;
      pair.path_1 = parse_path(tokens[2], n_paths);
      pair.path_2 = parse_path(tokens[3], n_paths);
      pair.r = parse_keyed_expr(tokens[4], "r");
      if (pair.r.kind == Expr::Kind::Number &&
          !(pair.r.number >= 0.0 && pair.r.number <= 1.0)) {
        fail(tokens[4], "r must lie in [0, 1]");
      }
      return pair;
    }
    fail(tokens[1], "input must be 'fock' or 'pair', got '" + tokens[1].text +
                        "'");
  }

  SweepStatement parse_sweep() {
    const auto& tokens = take("sweep", 4, 4);
    SweepStatement sweep;
    if (!is_identifier(tokens[1].text)) {
      fail(tokens[1], "invalid sweep parameter name '" + tokens[1].text + "'");
    }
    sweep.name = tokens[1].text;
    sweep.start = parse_expr(tokens[2]);
    sweep.stop = parse_expr(tokens[3]);
    for (const Token* bound : {&tokens[2], &tokens[3]}) {
      if (bound->text.starts_with("$")) {
        fail(*bound, "sweep bounds cannot reference a parameter");
      }
    }
    sweep.points = parse_int(tokens[4], 1);
    return sweep;
  }

  std::vector<StatementLine> lines_;
  size_t index_ = 0;
  int end_line_;
  std::vector<Token> var_references_;
};

std::string format_double(double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string print_expr(const Expr& expr) {
  switch (expr.kind) {
    case Expr::Kind::Number:
      return format_double(expr.number);
    case Expr::Kind::Pi:
      return expr.pi_divisor == 1 ? "pi"
                                  : "pi/" + std::to_string(expr.pi_divisor);
    case Expr::Kind::Var:
      return "$" + expr.var;
  }
  return {};
}

double round_significant(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
  return std::strtod(buffer, nullptr);
}

}  // namespace

CircuitDocument parse_document(std::string_view text) {
  return Parser(text).parse();
}

std::string print_document(const CircuitDocument& doc) {
  std::string out = "stats " + to_string(doc.statistics) + "\n";
  out += "paths " + std::to_string(doc.n_paths) + "\n";
  for (const ElementStatement& element : doc.elements) {
    if (const auto* bs = std::get_if<BsStatement>(&element)) {
      out += "bs " + std::to_string(bs->path_a) + " " +
             std::to_string(bs->path_b);
      if (bs->theta) out += " theta=" + print_expr(*bs->theta);
      out += "\n";
    } else {
      const auto& phase = std::get<PhaseStatement>(element);
      out += "phase " + std::to_string(phase.path) + " " +
             print_expr(phase.phi) + "\n";
    }
  }
  if (const auto* fock = std::get_if<FockInput>(&doc.input)) {
    out += "input fock";
    for (int count : fock->counts) out += " " + std::to_string(count);
    out += "\n";
  } else {
    const auto& pair = std::get<PairInputStatement>(doc.input);
    out += "input pair " + std::to_string(pair.path_1) + " " +
           std::to_string(pair.path_2) + " r=" + print_expr(pair.r) + "\n";
  }
  if (doc.sweep) {
    out += "sweep " + doc.sweep->name + " " + print_expr(doc.sweep->start) +
           " " + print_expr(doc.sweep->stop) + " " +
           std::to_string(doc.sweep->points) + "\n";
  }
  return out;
}

namespace {

Circuit document_circuit(const CircuitDocument& doc, const std::string& name,
                         double value) {
  Circuit circuit;
  circuit.n_paths = doc.n_paths;
  circuit.statistics = doc.statistics;
  for (const ElementStatement& element : doc.elements) {
    if (const auto* bs = std::get_if<BsStatement>(&element)) {
      const double theta =
          bs->theta ? bs->theta->eval(name, value) : FIFTY_FIFTY;
      circuit.elements.push_back(Beamsplitter{theta, bs->path_a, bs->path_b});
    } else {
      const auto& phase = std::get<PhaseStatement>(element);
      circuit.elements.push_back(
          PhaseShift{phase.phi.eval(name, value), phase.path});
    }
  }
  return circuit;
}

State document_input(const CircuitDocument& doc, const std::string& name,
                     double value) {
  if (const auto* fock = std::get_if<FockInput>(&doc.input)) {
    return fock_state(fock->counts, doc.statistics);
  }
  const auto& pair = std::get<PairInputStatement>(doc.input);
  return inject_pair(pair.path_1, pair.path_2,
                     Distinguishability(pair.r.eval(name, value)),
                     doc.statistics, doc.n_paths)
      .state;
}

}  // namespace

ResultTable run_document(const CircuitDocument& doc) {
  std::string name;
  std::vector<double> params;
  if (doc.sweep) {
    name = doc.sweep->name;
    const double start = doc.sweep->start.eval("", 0.0);
    const double stop = doc.sweep->stop.eval("", 0.0);
    const int points = doc.sweep->points;
    for (int k = 0; k < points; ++k) {
      params.push_back(start + static_cast<double>(k) * (stop - start) /
                                   static_cast<double>(points));
    }
  } else {
    params.push_back(0.0);
  }

  std::vector<DetectionDistribution> distributions;
  distributions.reserve(params.size());
  for (double value : params) {
    try {
      const Circuit circuit = document_circuit(doc, name, value);
      const State input = document_input(doc, name, value);
      distributions.push_back(detect(evaluate(circuit, input), doc.n_paths));
    } catch (const Error& e) {
      const std::string context =
          doc.sweep ? "at " + name + " = " + format_double(value) + ": " : "";
      if (dynamic_cast<const PauliExclusionError*>(&e) != nullptr) {
        throw PauliExclusionError(context + e.what());
      }
      throw Error(context + e.what());
    }
  }

  // Column set: every pattern ever detected, plus the declared fock pattern.
  std::set<std::vector<int>> patterns;
  for (const DetectionDistribution& dist : distributions) {
    for (const auto& [pattern, p] : dist.outcomes()) patterns.insert(pattern);
  }
  if (const auto* fock = std::get_if<FockInput>(&doc.input)) {
    patterns.insert(fock->counts);
  }

  ResultTable table;
  table.patterns.assign(patterns.begin(), patterns.end());
  table.params = params;
  for (const DetectionDistribution& dist : distributions) {
    std::vector<double> row;
    row.reserve(table.patterns.size());
    for (const auto& pattern : table.patterns) {
      row.push_back(round_significant(dist.probability(pattern), 12));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string to_csv(const ResultTable& table) {
  std::string out = "param";
  for (const auto& pattern : table.patterns) {
    out += "," + pattern_string(pattern);
  }
  out += "\n";
  for (size_t row = 0; row < table.rows.size(); ++row) {
    out += format_double(table.params[row]);
    for (double p : table.rows[row]) out += "," + format_double(p);
    out += "\n";
  }
  return out;
}

std::string to_json(const ResultTable& table) {
  nlohmann::json columns = nlohmann::json::array();
  columns.push_back("param");
  for (const auto& pattern : table.patterns) {
    columns.push_back(pattern_string(pattern));
  }
  nlohmann::json rows = nlohmann::json::array();
  for (size_t row = 0; row < table.rows.size(); ++row) {
    nlohmann::json values = nlohmann::json::array();
    values.push_back(table.params[row]);
    for (double p : table.rows[row]) values.push_back(p);
    rows.push_back(std::move(values));
  }
  nlohmann::json doc;
  doc["columns"] = std::move(columns);
  doc["rows"] = std::move(rows);
  return doc.dump() + "\n";
}

}  // namespace fbsim
