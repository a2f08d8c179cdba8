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

#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parity/gf2.hpp"

namespace parity {

/// A k-body interaction coefficient * s_{i1} * ... * s_{ik}.
///
/// Indices are 0-based; files use 1-based indices and are converted on I/O.
struct Term {
  std::vector<std::size_t> support;
  double coefficient = 0.0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Side condition s_{i1} * ... * s_{ik} = parity, with parity in {+1, -1}.
struct ProductConstraint {
  std::vector<std::size_t> support;
  int parity = 1;

  /// GF(2) right-hand side: 0 for +1, 1 for -1.
  [[nodiscard]] bool odd() const { return parity < 0; }

  friend bool operator==(const ProductConstraint&, const ProductConstraint&) = default;
};

class ProblemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the parser; carries the 1-based position of the offending token.
class ParseError : public ProblemError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class LogicalProblem {
 public:
  /// Validates and canonicalizes (sorts supports). Throws ProblemError when
  /// an index is out of range, a support is empty or repeats an index, two
  /// terms share a support, or a coefficient is zero or not finite.
  LogicalProblem(std::size_t num_qubits, std::vector<Term> terms,
                 std::vector<ProductConstraint> constraints = {});

  [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] const std::vector<ProductConstraint>& constraints() const { return constraints_; }

  friend bool operator==(const LogicalProblem&, const LogicalProblem&) = default;

 private:
  std::size_t num_qubits_;
  std::vector<Term> terms_;
  std::vector<ProductConstraint> constraints_;
};

/// Parses the line-oriented text format:
///
///   # comment
///   qubits 5
///   term 1 2 : 1.0
///   constraint 1 2 4 : +1
///
/// A problem file must declare at least one term.
LogicalProblem parse_problem(std::string_view text);

/// JSON form with fields num_qubits, terms [{support, coefficient}] and
/// constraints [{support, parity}], using 1-based indices.
LogicalProblem parse_problem_json(std::string_view text);

/// Dispatches on the file extension (.json selects the JSON reader).
LogicalProblem read_problem_file(const std::filesystem::path& path);

/// Canonical text form; parse_problem(serialize_problem(p)) == p.
std::string serialize_problem(const LogicalProblem& problem);

/// Spin value of a bit: +1 for 0, -1 for 1.
inline int spin(bool bit) { return bit ? -1 : 1; }

/// Sign of the product of spins over `support`.
int spin_product(const gf2::BitVector& assignment, const std::vector<std::size_t>& support);

/// Sum over terms of coefficient * product of spins, accumulated in term order.
double logical_energy(const LogicalProblem& problem, const gf2::BitVector& assignment);

bool check_constraints(const LogicalProblem& problem, const gf2::BitVector& assignment);

/// The 1-based label of a support, e.g. "1,2,3".
std::string support_label(const std::vector<std::size_t>& support);

}  // namespace parity
