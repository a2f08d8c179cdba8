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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "parity/cnot.hpp"
#include "parity/gf2.hpp"
#include "parity/layout.hpp"
#include "parity/parity_code.hpp"
#include "parity/projector.hpp"

namespace parity {

/// The physical constraints a decoder works against: couplers (plaquettes or
/// projectors) over `num_physical` qubits plus pinned qubits.
struct PhysicalConstraints {
  std::size_t num_physical = 0;
  std::vector<Projector> couplers;
  std::vector<PinnedQubit> pinned;
};

PhysicalConstraints physical_constraints(const Layout& layout);
PhysicalConstraints physical_constraints(const ContiguousLayout& layout);

struct Determination {
  std::size_t qubit = 0;
  std::optional<std::size_t> coupler;  // absent for pinned qubits

  friend bool operator==(const Determination&, const Determination&) = default;
};

/// Qubits to measure and, in order, qubits deduced from one coupler each.
struct ReadoutSet {
  std::vector<std::size_t> read_out;
  std::vector<Determination> determined;

  [[nodiscard]] std::size_t couplers_used() const;
  friend bool operator==(const ReadoutSet&, const ReadoutSet&) = default;
};

/// Number of couplers violated by `w` plus pinned qubits that disagree.
std::size_t physical_syndrome_weight(const PhysicalConstraints& constraints, const gf2::BitVector& w);

/// Traverses couplers that share a qubit, beginning at `start`: each visited
/// coupler puts all but its highest-index unmarked qubit into `read_out` and
/// determines that last one. The seed shuffles ties between candidates.
ReadoutSet build_readout_set(const PhysicalConstraints& constraints, std::size_t start, std::uint64_t seed);

/// Checks the ReadoutSet invariants.
bool readout_set_valid(const ReadoutSet& set, const PhysicalConstraints& constraints);

/// Fills in the determined qubits of `w` from its read-out qubits.
gf2::BitVector reconstruct(const ReadoutSet& set, const PhysicalConstraints& constraints, const gf2::BitVector& w);

struct DecodeResult {
  gf2::BitVector logical;
  std::vector<bool> tied;  // per logical bit; ties resolve to 0
  std::size_t syndrome_weight = 0;
  std::size_t num_sets = 0;

  [[nodiscard]] bool any_tie() const;
};

/// Majority vote over `num_sets` sampled readout sets, each reconstructed
/// and decoded with the code's decode matrix.
DecodeResult correct_and_decode(const ParityCode& code, const PhysicalConstraints& constraints,
                                const gf2::BitVector& w, std::size_t num_sets, std::uint64_t seed);

}  // namespace parity
