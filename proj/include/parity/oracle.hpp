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
#include <stdexcept>
#include <vector>

#include "parity/decoder.hpp"
#include "parity/gf2.hpp"
#include "parity/hamiltonian.hpp"
#include "parity/parity_code.hpp"
#include "parity/problem.hpp"

namespace parity {

inline constexpr std::size_t kMaxEnumeratedBits = 20;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No assignment satisfies the constraints.
class EmptyFeasibleSet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Optimum {
  double energy = 0.0;
  std::vector<gf2::BitVector> states;  // ascending as integers, bit 0 least significant
};

struct PhysicalOptimum : Optimum {
  std::size_t non_codewords = 0;  // optimal states with a violated coupler or pin
};

struct SpectrumReport {
  Optimum logical;
  PhysicalOptimum physical;
  bool decoded_match = false;
  bool energy_match = false;
  std::size_t constraint_violations_in_gs = 0;
  std::size_t num_couplers = 0;
  double strength = 0.0;
};

/// Two energies are degenerate when they differ by at most this much
/// relative to their scale.
bool energies_equal(double a, double b);

/// All constraint-satisfying minima over the 2^N assignments. `threads`
/// splits the enumeration; the result does not depend on it.
Optimum logical_spectrum(const LogicalProblem& problem, std::size_t threads = 1);

/// All minima over the free (unpinned) physical qubits; pinned bits take
/// their pinned values.
PhysicalOptimum physical_spectrum(const PhysicalHamiltonian& ham, const PhysicalConstraints& constraints,
                                  std::size_t threads = 1);

/// Compares decoded physical ground states with the logical optima modulo
/// degeneracy, and checks E_phys = E_log - strength * #couplers.
SpectrumReport verify_pipeline(const LogicalProblem& problem, const ParityCode& code,
                               const PhysicalConstraints& constraints, const PhysicalHamiltonian& ham,
                               std::size_t threads = 1);

}  // namespace parity
