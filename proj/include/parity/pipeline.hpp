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
#include <stdexcept>
#include <string>
#include <vector>

#include "parity/cnot.hpp"
#include "parity/decoder.hpp"
#include "parity/hamiltonian.hpp"
#include "parity/layout.hpp"
#include "parity/parity_code.hpp"
#include "parity/problem.hpp"
#include "parity/projector.hpp"

namespace parity {

struct CompileOptions {
  ProjectorMode mode = ProjectorMode::plaquette;
  std::size_t max_len = 8;  // projector length bound in cnot mode
  std::uint64_t seed = 0;
  std::size_t budget = 1000000;  // layout search nodes per attempt
  std::optional<double> strength;  // default_strength when absent
};

/// A compiled problem: the parity code plus its placement on the grid.
struct Compilation {
  ProjectorMode mode = ProjectorMode::plaquette;
  std::uint64_t seed = 0;
  ParityCode code;
  Layout layout;                     // plaquettes are empty in cnot mode
  std::vector<Projector> couplers;   // realized parity constraints
  std::vector<ProjectorTree> trees;  // cnot mode, one per coupler
  PhysicalHamiltonian hamiltonian;
  LayoutDiagnostics diagnostics;
};

/// The layout search gave up; `diagnostics` says where.
class CompileFailure : public std::runtime_error {
 public:
  explicit CompileFailure(LayoutDiagnostics diagnostics);

  [[nodiscard]] const LayoutDiagnostics& diagnostics() const { return diagnostics_; }

 private:
  LayoutDiagnostics diagnostics_;
};

const char* to_string(ProjectorMode mode);
std::optional<ProjectorMode> parse_mode(std::string_view text);

/// Parity code, projector set, layout and Hamiltonian for `problem`. Throws
/// InfeasibleConstraints, std::invalid_argument for bad options and
/// CompileFailure when no layout is found.
Compilation compile(const LogicalProblem& problem, const CompileOptions& options = {});

PhysicalConstraints physical_constraints(const Compilation& compilation);

/// Rebuilds couplings from the couplers for a new strength, keeping fields.
PhysicalHamiltonian with_strength(const Compilation& compilation, double strength);

/// exp(-i H_c) for the coupler part of the Hamiltonian: every projector
/// rotates by twice its coupling coefficient. Requires cnot mode.
Circuit compile_circuit(const Compilation& compilation);

/// Physical qubit label: the 1-based logical support of its product, with
/// ancillas marked by a leading '*'.
std::string qubit_label(const Compilation& compilation, std::size_t physical);

}  // namespace parity
