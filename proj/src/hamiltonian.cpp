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

#include "parity/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace parity {

double default_strength(const LogicalProblem& problem) {
  double total = 0.0;
  for (const auto& t : problem.terms()) {
    total += std::abs(t.coefficient);
  }
  return 1.0 + 2.0 * total;
}

PhysicalHamiltonian emit_physical_hamiltonian(std::span<const Projector> couplers, std::size_t num_physical,
                                              std::span<const PinnedQubit> pinned, const LogicalProblem& problem,
                                              double strength) {
  if (!(strength >= 0.0) || !std::isfinite(strength)) {
    throw std::invalid_argument("coupling strength must be finite and non-negative");
  }
  const auto& terms = problem.terms();
  if (num_physical < terms.size()) {
    throw std::invalid_argument("fewer physical qubits than terms");
  }
  PhysicalHamiltonian ham;
  ham.num_physical = num_physical;
  ham.strength = strength;
  ham.fields.assign(num_physical, 0.0);
  for (std::size_t a = 0; a < terms.size(); ++a) {
    ham.fields[a] = terms[a].coefficient;
  }
  ham.pinned.assign(pinned.begin(), pinned.end());
  for (const auto& pin : pinned) {
    ham.constant += ham.fields[pin.qubit] * spin(pin.value);
    ham.fields[pin.qubit] = 0.0;
  }
  for (const auto& c : couplers) {
    ham.couplings.push_back({c.qubits, c.odd ? strength : -strength});
  }
  return ham;
}

PhysicalHamiltonian emit_physical_hamiltonian(const Layout& layout, const LogicalProblem& problem, double strength) {
  const auto couplers = coupling_projectors(layout);
  return emit_physical_hamiltonian(couplers, layout.num_physical(), layout.pinned, problem, strength);
}

double physical_energy(const PhysicalHamiltonian& ham, const gf2::BitVector& w) {
  if (w.size() != ham.num_physical) {
    throw std::invalid_argument("bit-string length does not match the physical qubit count");
  }
  double energy = ham.constant;
  for (std::size_t q = 0; q < ham.num_physical; ++q) {
    if (ham.fields[q] != 0.0) {
      energy += ham.fields[q] * spin(w.get(q));
    }
  }
  for (const auto& c : ham.couplings) {
    energy += c.coefficient * spin_product(w, c.qubits);
  }
  return energy;
}

double field_energy(const LogicalProblem& problem, const gf2::BitVector& w) {
  const auto& terms = problem.terms();
  if (w.size() < terms.size()) {
    throw std::invalid_argument("bit-string shorter than the term count");
  }
  double energy = 0.0;
  for (std::size_t a = 0; a < terms.size(); ++a) {
    energy += terms[a].coefficient * spin(w.get(a));
  }
  return energy;
}

}  // namespace parity
