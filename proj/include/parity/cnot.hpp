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
#include <string>
#include <utility>
#include <vector>

#include "parity/layout.hpp"
#include "parity/projector.hpp"

namespace parity {

/// Spanning tree of one projector over grid-adjacent qubit pairs.
struct ProjectorTree {
  std::size_t projector = 0;
  std::size_t root = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (child, parent), in BFS order
  std::vector<std::size_t> depths;                         // per edge child

  friend bool operator==(const ProjectorTree&, const ProjectorTree&) = default;
};

/// Placement in which every projector's qubits induce a connected subgraph
/// of the grid. `layout.plaquettes` is empty.
struct ContiguousLayout {
  Layout layout;
  std::vector<Projector> projectors;
  std::vector<ProjectorTree> trees;

  friend bool operator==(const ContiguousLayout&, const ContiguousLayout&) = default;
};

struct ContiguousOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 1000000;
  std::size_t max_grid_growth = 4;
  std::size_t max_candidates = 2000;  // per projector and search node
};

struct ContiguousResult {
  std::optional<ContiguousLayout> layout;
  LayoutDiagnostics diagnostics;
};

/// All fixed polyominoes with `size` cells (translations normalized to the
/// origin), in lexicographic order. Sizes above 4 are not tabulated.
const std::vector<std::vector<Site>>& polyomino_shapes(std::size_t size);

/// True iff the sites form one connected piece of the square lattice.
bool sites_connected(std::span<const Site> sites);

/// Places the projectors so that each is contiguous and builds one tree per
/// projector.
ContiguousResult lay_out_contiguous(const ProjectorSet& set, const ContiguousOptions& options = {});

/// BFS tree rooted at the qubit with the most in-projector grid neighbours.
/// Returns nothing when the projector is not contiguous under `positions`.
std::optional<ProjectorTree> build_tree(const Projector& projector, std::size_t index,
                                        std::span<const std::optional<Site>> positions);

bool verify_contiguous(const ContiguousLayout& layout, const ProjectorSet& set);

enum class GateKind { cnot, rz };

struct Gate {
  GateKind kind = GateKind::cnot;
  std::size_t control = 0;  // the rotated qubit for rz
  std::size_t target = 0;
  double angle = 0.0;

  [[nodiscard]] bool touches(std::size_t q) const { return control == q || (kind == GateKind::cnot && target == q); }
  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> gates;
  std::vector<std::vector<std::size_t>> moments;  // gate indices per layer

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Per tree: CNOT(child, parent) from the deepest level up, RZ(root, angle),
/// then the same CNOTs in reverse. Odd projectors rotate by -angle. The
/// circuit realizes exp(-i angle/2 Z...Z) on each projector's support.
Circuit emit_circuit(std::span<const ProjectorTree> trees, std::span<const Projector> projectors,
                     std::span<const double> angles, std::size_t num_qubits);

/// As-soon-as-possible layering; gates are reordered by (moment, index).
Circuit schedule(const Circuit& circuit);

/// True iff no qubit appears twice in a moment and the gate list is the
/// concatenation of the moments.
bool moments_valid(const Circuit& circuit);

/// OpenQASM 2.0 listing.
std::string to_qasm(const Circuit& circuit);

}  // namespace parity
