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

#include "parity/parity_code.hpp"

#include <stdexcept>

namespace parity {

using gf2::BitMatrix;
using gf2::BitVector;

namespace {

// Rows form a basis of the homogeneous constrained logical space {v : v C^T = 0}.
BitMatrix constrained_basis(std::size_t num_logical, const BitMatrix& constraint) {
  if (constraint.rows() == 0) {
    return BitMatrix::identity(num_logical);
  }
  return gf2::null_space(constraint);
}

}  // namespace

BitMatrix build_generator(const LogicalProblem& problem) {
  BitMatrix g(problem.num_qubits(), problem.terms().size());
  for (std::size_t a = 0; a < problem.terms().size(); ++a) {
    for (auto i : problem.terms()[a].support) {
      g.set(i, a);
    }
  }
  return g;
}

std::pair<BitMatrix, BitVector> build_constraint(const LogicalProblem& problem) {
  BitMatrix c(0, problem.num_qubits());
  BitVector rhs(problem.constraints().size());
  for (std::size_t r = 0; r < problem.constraints().size(); ++r) {
    const auto& pc = problem.constraints()[r];
    c.append_row(BitVector::from_indices(problem.num_qubits(), pc.support));
    rhs.set(r, pc.odd());
  }
  return {std::move(c), std::move(rhs)};
}

std::size_t degeneracy_count(const BitMatrix& generator, const BitMatrix& constraint) {
  if (constraint.rows() > 0 && constraint.cols() != generator.rows()) {
    throw std::invalid_argument("constraint width must equal the number of logical qubits");
  }
  BitMatrix relations = generator.transposed();
  if (constraint.rows() > 0) {
    relations = relations.stacked(constraint);
  }
  return generator.rows() - gf2::rank(relations);
}

BitMatrix build_check(const BitMatrix& generator, const BitMatrix& constraint) {
  const BitMatrix basis = constrained_basis(generator.rows(), constraint);
  return gf2::null_space(basis * generator);
}

BitMatrix build_decode(const BitMatrix& generator, const BitMatrix& check, const BitMatrix& constraint) {
  if (check.rows() > 0 && check.cols() != generator.cols()) {
    throw std::invalid_argument("check width must equal the number of terms");
  }
  const std::size_t n = generator.rows();
  const std::size_t k = generator.cols();
  const BitMatrix basis = constrained_basis(n, constraint);

  // Keep the constrained basis vectors whose codewords are independent; on
  // their span the encoding is injective, so E G X = E has a solution.
  BitMatrix chosen(0, n);
  BitMatrix images(0, k);
  gf2::IncrementalBasis seen(k);
  for (const auto& b : basis.row_data()) {
    BitVector image = generator.left_multiply(b);
    if (seen.insert(image)) {
      chosen.append_row(b);
      images.append_row(std::move(image));
    }
  }
  if (chosen.rows() == 0) {
    return BitMatrix(n, k);
  }
  auto x = gf2::solve_right(images, chosen);
  if (!x) {
    throw std::logic_error("independent codeword rows must admit a pseudoinverse");
  }
  return x->transposed();
}

ParityCode build_parity_code(const LogicalProblem& problem) {
  ParityCode code;
  code.num_logical = problem.num_qubits();
  code.generator = build_generator(problem);
  std::tie(code.constraint, code.constraint_offset) = build_constraint(problem);
  for (const auto& t : problem.terms()) {
    code.term_labels.push_back(t.support);
  }

  BitVector particular(code.num_logical);
  if (code.constraint.rows() > 0) {
    BitMatrix rhs(code.constraint.rows(), 1);
    for (std::size_t r = 0; r < rhs.rows(); ++r) {
      rhs.set(r, 0, code.constraint_offset.get(r));
    }
    auto solution = gf2::solve_right(code.constraint, rhs);
    if (!solution) {
      throw InfeasibleConstraints("product constraints are contradictory");
    }
    particular = solution->column(0);
  }

  code.check = build_check(code.generator, code.constraint);
  code.decode = build_decode(code.generator, code.check, code.constraint);
  code.degeneracy = degeneracy_count(code.generator, code.constraint);

  const BitVector base_word = code.generator.left_multiply(particular);
  code.check_offset = code.check.right_multiply(base_word);
  code.decode_offset = particular ^ code.decode.right_multiply(base_word);
  return code;
}

bool validate_decode(const ParityCode& code, const BitMatrix& candidate) {
  if (candidate.rows() != code.num_logical || candidate.cols() != code.num_terms()) {
    return false;
  }
  const BitMatrix basis = constrained_basis(code.num_logical, code.constraint);
  const BitMatrix words = basis * code.generator;
  const BitMatrix decoded = words * candidate.transposed();
  if (!(decoded * code.generator == words)) {
    return false;
  }
  if (code.constraint.rows() > 0 && !(decoded * code.constraint.transposed()).is_zero()) {
    return false;
  }
  return true;
}

BitVector encode(const ParityCode& code, const BitVector& logical) {
  if (logical.size() != code.num_logical) {
    throw std::invalid_argument("logical bit-string length mismatch");
  }
  return code.generator.left_multiply(logical);
}

BitVector decode(const ParityCode& code, const BitVector& parity_bits) {
  if (parity_bits.size() < code.num_terms()) {
    throw std::invalid_argument("parity bit-string too short");
  }
  const BitVector w = parity_bits.size() == code.num_terms() ? parity_bits : parity_bits.slice(0, code.num_terms());
  return code.decode.right_multiply(w) ^ code.decode_offset;
}

BitVector syndrome(const ParityCode& code, const BitVector& parity_bits) {
  if (parity_bits.size() < code.num_terms()) {
    throw std::invalid_argument("parity bit-string too short");
  }
  const BitVector w = parity_bits.size() == code.num_terms() ? parity_bits : parity_bits.slice(0, code.num_terms());
  return code.check.right_multiply(w) ^ code.check_offset;
}

BitMatrix degeneracy_basis(const ParityCode& code) {
  BitMatrix relations = code.generator.transposed();
  if (code.constraint.rows() > 0) {
    relations = relations.stacked(code.constraint);
  }
  return gf2::null_space(relations);
}

BitVector orbit_representative(const BitMatrix& degeneracy_rref, BitVector logical) {
  for (const auto& row : degeneracy_rref.row_data()) {
    const std::size_t pivot = row.find_next(0);
    if (pivot < row.size() && logical.get(pivot)) {
      logical ^= row;
    }
  }
  return logical;
}

std::optional<std::vector<std::size_t>> lift_constraint(const ParityCode& code,
                                                        const std::vector<std::size_t>& support) {
  BitMatrix target(code.num_logical, 1);
  for (auto i : support) {
    if (i >= code.num_logical) {
      throw std::invalid_argument("constraint index out of range");
    }
    target.set(i, 0, !target.get(i, 0));
  }
  auto solution = gf2::solve_right(code.generator, target);
  if (!solution) {
    return std::nullopt;
  }
  BitVector lift = solution->column(0);
  const BitMatrix cycles = gf2::null_space(code.generator);

  // Greedy descent: apply any closed cycle (or pair of cycles) that shortens
  // the open cycle, until none does.
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < cycles.rows() && !improved; ++i) {
      BitVector single = lift ^ cycles.row(i);
      if (single.popcount() < lift.popcount()) {
        lift = std::move(single);
        improved = true;
        break;
      }
      for (std::size_t j = i + 1; j < cycles.rows(); ++j) {
        BitVector pair = single ^ cycles.row(j);
        if (pair.popcount() < lift.popcount()) {
          lift = std::move(pair);
          improved = true;
          break;
        }
      }
    }
  }
  return lift.ones();
}

}  // namespace parity
