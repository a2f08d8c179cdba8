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
#include <optional>
#include <stdexcept>
#include <vector>

#include "parity/gf2.hpp"
#include "parity/problem.hpp"

namespace parity {

/// The product constraints have no common solution.
class InfeasibleConstraints : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The embedding of a logical problem into parity space.
///
/// Logical bit-strings v (length N) encode as w = v G (length K, one parity
/// qubit per term). With product constraints the logical space is the affine
/// subspace {v : v C^T = b}; codewords then satisfy w P^T = check_offset.
struct ParityCode {
  std::size_t num_logical = 0;
  gf2::BitMatrix generator;         // N x K
  gf2::BitMatrix check;             // rows x K
  gf2::BitVector check_offset;      // one bit per check row (1: product must be -1)
  gf2::BitMatrix decode;            // N x K
  gf2::BitVector decode_offset;     // length N, added after w D^T
  gf2::BitMatrix constraint;        // rows x N
  gf2::BitVector constraint_offset; // one bit per constraint row
  std::vector<std::vector<std::size_t>> term_labels;
  std::size_t degeneracy = 0;

  [[nodiscard]] std::size_t num_terms() const { return generator.cols(); }
};

/// Column a has ones at the support of term a; columns follow term order.
gf2::BitMatrix build_generator(const LogicalProblem& problem);

/// Constraint matrix C and its affine right-hand side (1 for parity -1).
std::pair<gf2::BitMatrix, gf2::BitVector> build_constraint(const LogicalProblem& problem);

/// Dimension of the spin-flip symmetry group: N - rank([G^T; C]).
std::size_t degeneracy_count(const gf2::BitMatrix& generator, const gf2::BitMatrix& constraint);

/// Basis of the parity checks valid on every codeword of the (homogeneous)
/// constrained subspace. With no constraint rows this is null_space(G).
gf2::BitMatrix build_check(const gf2::BitMatrix& generator, const gf2::BitMatrix& constraint);

/// A decoding matrix D: for every constrained v, (v G D^T) G = v G and
/// v G D^T C^T = 0.
gf2::BitMatrix build_decode(const gf2::BitMatrix& generator, const gf2::BitMatrix& check,
                            const gf2::BitMatrix& constraint);

/// Full construction. Throws InfeasibleConstraints when the constraints
/// contradict each other.
ParityCode build_parity_code(const LogicalProblem& problem);

/// Accepts any member of the decoding-matrix equivalence class.
bool validate_decode(const ParityCode& code, const gf2::BitMatrix& candidate);

/// w = v G.
gf2::BitVector encode(const ParityCode& code, const gf2::BitVector& logical);

/// v = w D^T + decode_offset, for the first K bits of `parity_bits`.
gf2::BitVector decode(const ParityCode& code, const gf2::BitVector& parity_bits);

/// w P^T + check_offset: zero iff w is a codeword.
gf2::BitVector syndrome(const ParityCode& code, const gf2::BitVector& parity_bits);

/// Rows span every logical flip that leaves all terms and constraints
/// unchanged (null space of [G^T; C]).
gf2::BitMatrix degeneracy_basis(const ParityCode& code);

/// Canonical representative of the degeneracy orbit of `logical`.
gf2::BitVector orbit_representative(const gf2::BitMatrix& degeneracy_rref, gf2::BitVector logical);

/// A set of terms (columns of G) whose supports XOR to `support`: an open
/// cycle through the interaction hypergraph. Among the lifts reachable by
/// adding null-space vectors of G, a greedily minimized one is returned.
std::optional<std::vector<std::size_t>> lift_constraint(const ParityCode& code,
                                                        const std::vector<std::size_t>& support);

}  // namespace parity
