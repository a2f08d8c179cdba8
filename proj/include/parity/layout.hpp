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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "parity/projector.hpp"

namespace parity {

struct Site {
  std::size_t row = 0;
  std::size_t col = 0;

  friend auto operator<=>(const Site&, const Site&) = default;
};

/// True iff the two sites are nearest neighbours on the square lattice.
bool sites_adjacent(Site a, Site b);

enum class PlaquetteKind { square, triangle, edge };

const char* to_string(PlaquetteKind kind);

/// A realized coupler. Squares and triangles sit on the corners of the unit
/// cell whose top-left site is `cell`; edges join two adjacent sites and
/// occupy no cell (`cell` is then the smaller endpoint).
struct Plaquette {
  Site cell;
  std::vector<std::size_t> qubits;  // sorted
  PlaquetteKind kind = PlaquetteKind::square;
  bool odd = false;

  [[nodiscard]] Projector projector() const { return {qubits, odd}; }
  friend bool operator==(const Plaquette&, const Plaquette&) = default;
};

struct Layout {
  std::size_t height = 0;
  std::size_t width = 0;
  std::size_t num_terms = 0;
  std::vector<std::optional<Site>> positions;  // per physical qubit; pinned qubits are unplaced
  std::vector<Plaquette> plaquettes;
  std::vector<AncillaRecord> ancillas;             // from the projector set
  std::vector<AncillaRecord> dynamical_ancillas;   // inserted during the search
  std::vector<PinnedQubit> pinned;

  [[nodiscard]] std::size_t num_physical() const {
    return num_terms + ancillas.size() + dynamical_ancillas.size();
  }
  [[nodiscard]] std::vector<AncillaRecord> all_ancillas() const;
  friend bool operator==(const Layout&, const Layout&) = default;
};

/// Shifts positions and cells so that the occupied bounding box starts at the
/// origin, and shrinks the grid to it.
Layout cropped(Layout layout);

/// The physical parity constraints realized by the layout's plaquettes.
std::vector<Projector> coupling_projectors(const Layout& layout);

struct LayoutOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 1000000;  // search nodes per attempt
  std::size_t max_dynamic_ancillas = 4;
  std::size_t max_grid_growth = 4;
};

struct LayoutDiagnostics {
  std::size_t attempts = 0;
  std::size_t nodes = 0;
  std::size_t dynamic_ancillas = 0;
  std::size_t height = 0;
  std::size_t width = 0;
  std::optional<Projector> hardest;  // projector with most failed placements
  std::size_t hardest_failures = 0;

  [[nodiscard]] std::string summary() const;
};

struct LayoutResult {
  std::optional<Layout> layout;
  LayoutDiagnostics diagnostics;
};

/// Places every projector of `set` on a unit cell (sizes 3 and 4) or an
/// adjacent pair of sites (size 2) by depth-first search, escalating to
/// dynamical ancillas and then to larger grids when the search fails.
LayoutResult lay_out(const ProjectorSet& set, const LayoutOptions& options = {});

/// Replaces a size-4 projector {a, b, c, d} by {a, b, x} and {c, d, x} with a
/// fresh ancilla x = ab drawn from `pool`; the pair {a, b} is the one most
/// shared with `context`.
std::tuple<Projector, Projector, AncillaRecord> split_dynamically(const Projector& projector, AncillaPool& pool,
                                                                  std::span<const Projector> context = {});

/// Checks the layout invariants, including that the plaquette rows are
/// independent and span the projector rows.
bool verify_layout(const Layout& layout, const ProjectorSet& set);

}  // namespace parity
