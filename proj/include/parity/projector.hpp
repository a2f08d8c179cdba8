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
#include <span>
#include <utility>
#include <vector>

#include "parity/gf2.hpp"

namespace parity {

/// One physical parity constraint: the product of Z over `qubits` is +1
/// (`odd == false`) or -1 (`odd == true`).
struct Projector {
  std::vector<std::size_t> qubits;  // sorted physical indices
  bool odd = false;

  [[nodiscard]] std::size_t size() const { return qubits.size(); }
  friend bool operator==(const Projector&, const Projector&) = default;
};

/// A physical qubit that does not correspond to a term. Its value is the
/// product of the listed original parity qubits (indices < K).
struct AncillaRecord {
  std::size_t physical_index = 0;
  std::vector<std::size_t> definition;

  friend bool operator==(const AncillaRecord&, const AncillaRecord&) = default;
};

/// A parity qubit whose value is forced by a weight-1 check row.
struct PinnedQubit {
  std::size_t qubit = 0;
  bool value = false;

  friend bool operator==(const PinnedQubit&, const PinnedQubit&) = default;
};

/// Allocates ancilla indices after the K term qubits and keeps their
/// definitions expanded to original parity qubits.
class AncillaPool {
 public:
  AncillaPool(std::size_t num_terms, std::vector<AncillaRecord> existing = {});

  /// New ancilla carrying the product of `factors` (physical indices, which
  /// may themselves be ancillas). Returns its physical index.
  std::size_t create(std::span<const std::size_t> factors);

  [[nodiscard]] std::vector<std::size_t> expand(std::size_t physical) const;
  [[nodiscard]] const std::vector<AncillaRecord>& records() const { return records_; }
  [[nodiscard]] std::size_t num_physical() const { return num_terms_ + records_.size(); }

 private:
  std::size_t num_terms_;
  std::vector<AncillaRecord> records_;
};

enum class ProjectorMode { plaquette, cnot };

struct ProjectorOptions {
  ProjectorMode mode = ProjectorMode::plaquette;
  std::size_t max_len = 8;  // bound for cnot mode
  std::size_t budget = 100000;
};

struct ProjectorSet {
  std::size_t num_terms = 0;
  std::vector<Projector> projectors;  // weight >= 2, never touching pinned qubits
  std::vector<PinnedQubit> pinned;    // weight-1 rows
  std::vector<AncillaRecord> ancillas;
  std::size_t num_physical = 0;       // num_terms + ancillas.size()
};

/// Searches for a basis of the row space of `check` whose rows all have
/// weight in [min_w, max_w], using combinations of up to three rows (of the
/// input and of its reduced echelon form) within `budget` evaluations.
std::optional<gf2::BitMatrix> reduce_weights(const gf2::BitMatrix& check, std::size_t min_w = 3,
                                             std::size_t max_w = 4, std::size_t budget = 100000);

/// Splits `row` into `head + {anc}` (even parity) and `rest + {anc}` (the
/// row's parity) with a fresh ancilla anc = product of `head`.
std::pair<Projector, Projector> split_with_ancilla(const Projector& row, std::span<const std::size_t> head,
                                                   AncillaPool& pool);

/// Applies split_with_ancilla until every piece has at most `max_w` qubits.
/// In plaquette mode the head is the pair of qubits that co-occur most often
/// in `context`; in cnot mode it is the first max_w - 1 qubits.
std::vector<Projector> split_to_length(const Projector& row, std::size_t max_w, ProjectorMode mode,
                                       std::span<const Projector> context, AncillaPool& pool);

/// Reduces the check rows and splits the remaining long rows; see
/// ProjectorSet. `offset` holds one parity bit per check row.
ProjectorSet build_projector_set(const gf2::BitMatrix& check, const gf2::BitVector& offset,
                                 const ProjectorOptions& options = {});
ProjectorSet build_projector_set(const gf2::BitMatrix& check, const ProjectorOptions& options = {});

/// Values of every physical qubit for the parity bit-string `w` (length K),
/// computing ancillas from their definitions.
gf2::BitVector extend_with_ancillas(const gf2::BitVector& w, std::size_t num_physical,
                                    std::span<const AncillaRecord> ancillas);

/// True iff `bits` satisfies the projector.
bool satisfies(const Projector& projector, const gf2::BitVector& bits);

}  // namespace parity
