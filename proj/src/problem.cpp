// Copyright 2026 The Parity Compiler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "parity/problem.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace parity {

namespace {

void canonicalize_support(std::vector<std::size_t>& support, std::size_t num_qubits, const char* what) {
  if (support.empty()) {
    throw ProblemError(std::string(what) + " support must not be empty");
  }
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw ProblemError(std::string(what) + " support repeats qubit " + std::to_string(*std::adjacent_find(support.begin(), support.end()) + 1));
  }
  if (support.back() >= num_qubits) {
    throw ProblemError(std::string(what) + " index " + std::to_string(support.back() + 1) +
                       " out of range [1, " + std::to_string(num_qubits) + "]");
  }
}

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    if (i >= line.size()) {
      break;
    }
    if (line[i] == ':') {
      out.push_back({line.substr(i, 1), i + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != ':') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

class LineParser {
 public:
  explicit LineParser(std::size_t line_no) : line_no_(line_no) {}

  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw ParseError(line_no_, column, message);
  }

  std::size_t parse_count(const Token& t) const {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      fail(t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
    }
    return value;
  }

  double parse_real(const Token& t) const {
    std::string s(t.text);
    if (!s.empty() && s.front() == '+') {
      s.erase(0, 1);
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      fail(t.column, "expected a real number, got '" + std::string(t.text) + "'");
    }
    return value;
  }

  /// Indices (1-based in the file) up to the ':' separator.
  std::vector<std::size_t> parse_support(const std::vector<Token>& tokens, std::size_t& pos, std::size_t n) const {
    std::vector<std::size_t> support;
    while (pos < tokens.size() && tokens[pos].text != ":") {
      const std::size_t idx = parse_count(tokens[pos]);
      if (idx < 1 || idx > n) {
        fail(tokens[pos].column, "qubit index " + std::string(tokens[pos].text) + " out of range [1, " +
                                     std::to_string(n) + "]");
      }
      support.push_back(idx - 1);
      ++pos;
    }
    if (pos == tokens.size()) {
      fail(tokens.back().column, "missing ':' separator");
    }
    if (support.empty()) {
      fail(tokens[pos].column, "empty support");
    }
    ++pos;
    return support;
  }

 private:
  std::size_t line_no_;
};

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : ProblemError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

LogicalProblem::LogicalProblem(std::size_t num_qubits, std::vector<Term> terms,
                               std::vector<ProductConstraint> constraints)
    : num_qubits_(num_qubits), terms_(std::move(terms)), constraints_(std::move(constraints)) {
  if (num_qubits_ < 1) {
    throw ProblemError("number of qubits must be at least 1");
  }
  std::set<std::vector<std::size_t>> seen;
  for (auto& t : terms_) {
    canonicalize_support(t.support, num_qubits_, "term");
    if (!std::isfinite(t.coefficient)) {
      throw ProblemError("term " + support_label(t.support) + " has a non-finite coefficient");
    }
    if (t.coefficient == 0.0) {
      throw ProblemError("term " + support_label(t.support) + " has a zero coefficient");
    }
    if (!seen.insert(t.support).second) {
      throw ProblemError("duplicate term support " + support_label(t.support));
    }
  }
  for (auto& c : constraints_) {
    canonicalize_support(c.support, num_qubits_, "constraint");
    if (c.parity != 1 && c.parity != -1) {
      throw ProblemError("constraint parity must be +1 or -1");
    }
  }
}

LogicalProblem parse_problem(std::string_view text) {
  std::size_t num_qubits = 0;
  bool have_header = false;
  std::vector<Term> terms;
  std::vector<ProductConstraint> constraints;
  std::set<std::vector<std::size_t>> seen;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      continue;
    }
    LineParser lp(line_no);
    const auto& keyword = tokens[0];
    if (keyword.text == "qubits") {
      if (have_header) {
        lp.fail(keyword.column, "duplicate 'qubits' header");
      }
      if (tokens.size() != 2) {
        lp.fail(keyword.column, "expected 'qubits N'");
      }
      num_qubits = lp.parse_count(tokens[1]);
      if (num_qubits < 1) {
        lp.fail(tokens[1].column, "number of qubits must be at least 1");
      }
      have_header = true;
    } else if (keyword.text == "term" || keyword.text == "constraint") {
      if (!have_header) {
        lp.fail(keyword.column, "'qubits N' header must come first");
      }
      std::size_t pos = 1;
      if (pos == tokens.size()) {
        lp.fail(keyword.column, "missing support");
      }
      auto support = lp.parse_support(tokens, pos, num_qubits);
      const std::size_t support_column = tokens[1].column;
      if (pos + 1 != tokens.size()) {
        lp.fail(pos < tokens.size() ? tokens[pos].column : tokens.back().column,
                "expected exactly one value after ':'");
      }
      std::sort(support.begin(), support.end());
      if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
        lp.fail(support_column, "support repeats a qubit index");
      }
      if (keyword.text == "term") {
        const double coeff = lp.parse_real(tokens[pos]);
        if (!std::isfinite(coeff)) {
          lp.fail(tokens[pos].column, "coefficient must be finite");
        }
        if (coeff == 0.0) {
          lp.fail(tokens[pos].column, "zero coefficient (remove the term instead)");
        }
        if (!seen.insert(support).second) {
          lp.fail(support_column, "duplicate term support " + support_label(support));
        }
        terms.push_back({std::move(support), coeff});
      } else {
        const auto v = tokens[pos].text;
        int parity = 0;
        if (v == "+1" || v == "1") {
          parity = 1;
        } else if (v == "-1") {
          parity = -1;
        } else {
          lp.fail(tokens[pos].column, "constraint value must be +1 or -1");
        }
        constraints.push_back({std::move(support), parity});
      }
    } else {
      lp.fail(keyword.column, "unknown keyword '" + std::string(keyword.text) + "'");
    }
  }
  if (!have_header) {
    throw ParseError(line_no, 1, "missing 'qubits N' header");
  }
  if (terms.empty()) {
    throw ParseError(line_no, 1, "problem declares no terms");
  }
  return LogicalProblem(num_qubits, std::move(terms), std::move(constraints));
}

LogicalProblem parse_problem_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ProblemError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("num_qubits").get<std::int64_t>();
    if (n < 1) {
      throw ProblemError("num_qubits must be at least 1");
    }
    auto to_support = [n](const nlohmann::json& arr) {
      std::vector<std::size_t> support;
      for (const auto& idx : arr) {
        const auto i = idx.get<std::int64_t>();
        if (i < 1 || i > n) {
          throw ProblemError("qubit index " + std::to_string(i) + " out of range [1, " + std::to_string(n) + "]");
        }
        support.push_back(static_cast<std::size_t>(i - 1));
      }
      return support;
    };
    std::vector<Term> terms;
    for (const auto& t : doc.at("terms")) {
      terms.push_back({to_support(t.at("support")), t.at("coefficient").get<double>()});
    }
    std::vector<ProductConstraint> constraints;
    if (doc.contains("constraints")) {
      for (const auto& c : doc.at("constraints")) {
        constraints.push_back({to_support(c.at("support")), c.at("parity").get<int>()});
      }
    }
    if (terms.empty()) {
      throw ProblemError("problem declares no terms");
    }
    return LogicalProblem(static_cast<std::size_t>(n), std::move(terms), std::move(constraints));
  } catch (const nlohmann::json::exception& e) {
    throw ProblemError(std::string("malformed problem JSON: ") + e.what());
  }
}

LogicalProblem read_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ProblemError("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (path.extension() == ".json") {
    return parse_problem_json(buf.str());
  }
  return parse_problem(buf.str());
}

std::string serialize_problem(const LogicalProblem& problem) {
  std::string out = "qubits " + std::to_string(problem.num_qubits()) + "\n";
  auto indices = [](const std::vector<std::size_t>& support) {
    std::string s;
    for (auto i : support) {
      s += ' ';
      s += std::to_string(i + 1);
    }
    return s;
  };
  for (const auto& t : problem.terms()) {
    out += "term" + indices(t.support) + " : " + format_double(t.coefficient) + "\n";
  }
  for (const auto& c : problem.constraints()) {
    out += "constraint" + indices(c.support) + (c.parity > 0 ? " : +1\n" : " : -1\n");
  }
  return out;
}

int spin_product(const gf2::BitVector& assignment, const std::vector<std::size_t>& support) {
  bool odd = false;
  for (auto i : support) {
    odd ^= assignment.get(i);
  }
  return odd ? -1 : 1;
}

double logical_energy(const LogicalProblem& problem, const gf2::BitVector& assignment) {
  if (assignment.size() != problem.num_qubits()) {
    throw std::invalid_argument("assignment length does not match the number of qubits");
  }
  double energy = 0.0;
  for (const auto& t : problem.terms()) {
    energy += t.coefficient * spin_product(assignment, t.support);
  }
  return energy;
}

bool check_constraints(const LogicalProblem& problem, const gf2::BitVector& assignment) {
  if (assignment.size() != problem.num_qubits()) {
    throw std::invalid_argument("assignment length does not match the number of qubits");
  }
  return std::all_of(problem.constraints().begin(), problem.constraints().end(), [&](const auto& c) {
    return spin_product(assignment, c.support) == c.parity;
  });
}

std::string support_label(const std::vector<std::size_t>& support) {
  std::string s;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (k > 0) {
      s += ',';
    }
    s += std::to_string(support[k] + 1);
  }
  return s;
}

}  // namespace parity
