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
#include <span>
#include <vector>

#include "parity/gf2.hpp"
#include "parity/layout.hpp"
#include "parity/problem.hpp"

namespace parity {

/// coefficient * prod_{q in qubits} s_q.
struct CouplingTerm {
  std::vector<std::size_t> qubits;
  double coefficient = 0.0;

  friend bool operator==(const CouplingTerm&, const CouplingTerm&) = default;
};

/// E(w) = constant + sum_q fields[q] s_q + sum_c coefficient_c prod s, with
/// s_q = (-1)^{w_q}. Pinned qubits carry no field; their contribution is in
/// `constant`.
struct PhysicalHamiltonian {
  std::size_t num_physical = 0;
  std::vector<double> fields;
  std::vector<CouplingTerm> couplings;
  double constant = 0.0;
  std::vector<PinnedQubit> pinned;
  double strength = 0.0;

  friend bool operator==(const PhysicalHamiltonian&, const PhysicalHamiltonian&) = default;
};

/// 1 + 2 * sum |J|: any violated coupler costs more than the fields can gain.
double default_strength(const LogicalProblem& problem);

/// Fields J_a on the term qubits, zero on ancillas, and -strength * (-1)^odd
/// on the product of each coupler.
PhysicalHamiltonian emit_physical_hamiltonian(std::span<const Projector> couplers, std::size_t num_physical,
                                              std::span<const PinnedQubit> pinned, const LogicalProblem& problem,
                                              double strength);
PhysicalHamiltonian emit_physical_hamiltonian(const Layout& layout, const LogicalProblem& problem, double strength);

/// Energy of the physical bit-string `w` (length num_physical). Bits of
/// pinned qubits are ignored.
double physical_energy(const PhysicalHamiltonian& ham, const gf2::BitVector& w);

/// sum_a J_a (-1)^{w_a} over the term qubits, in term order.
double field_energy(const LogicalProblem& problem, const gf2::BitVector& w);

}  // namespace parity
