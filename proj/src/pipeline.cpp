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

#include "parity/pipeline.hpp"

#include <algorithm>
#include <cmath>

namespace parity {

CompileFailure::CompileFailure(LayoutDiagnostics diagnostics)
    : std::runtime_error(diagnostics.summary()), diagnostics_(std::move(diagnostics)) {}

const char* to_string(ProjectorMode mode) { return mode == ProjectorMode::cnot ? "cnot" : "plaquette"; }

std::optional<ProjectorMode> parse_mode(std::string_view text) {
  if (text == "plaquette") {
    return ProjectorMode::plaquette;
  }
  if (text == "cnot") {
    return ProjectorMode::cnot;
  }
  return std::nullopt;
}

Compilation compile(const LogicalProblem& problem, const CompileOptions& options) {
  if (options.budget == 0) {
    throw std::invalid_argument("budget must be at least 1");
  }
  if (options.mode == ProjectorMode::cnot && options.max_len < 3) {
    throw std::invalid_argument("max-len must be at least 3");
  }
  if (options.strength && (!std::isfinite(*options.strength) || *options.strength < 0.0)) {
    throw std::invalid_argument("strength must be a finite non-negative number");
  }
  Compilation out;
  out.mode = options.mode;
  out.seed = options.seed;
  out.code = build_parity_code(problem);
  const auto set =
      build_projector_set(out.code.check, out.code.check_offset, {.mode = options.mode, .max_len = options.max_len});
  if (options.mode == ProjectorMode::plaquette) {
    auto result = lay_out(set, {.seed = options.seed, .budget = options.budget});
    if (!result.layout) {
      throw CompileFailure(result.diagnostics);
    }
    out.layout = std::move(*result.layout);
    out.couplers = coupling_projectors(out.layout);
    out.diagnostics = result.diagnostics;
  } else {
    auto result = lay_out_contiguous(set, {.seed = options.seed, .budget = options.budget});
    if (!result.layout) {
      throw CompileFailure(result.diagnostics);
    }
    out.layout = std::move(result.layout->layout);
    out.couplers = std::move(result.layout->projectors);
    out.trees = std::move(result.layout->trees);
    out.diagnostics = result.diagnostics;
  }
  const double strength = options.strength.value_or(default_strength(problem));
  out.hamiltonian =
      emit_physical_hamiltonian(out.couplers, out.layout.num_physical(), out.layout.pinned, problem, strength);
  return out;
}

PhysicalConstraints physical_constraints(const Compilation& compilation) {
  return {compilation.layout.num_physical(), compilation.couplers, compilation.layout.pinned};
}

PhysicalHamiltonian with_strength(const Compilation& compilation, double strength) {
  if (!std::isfinite(strength) || strength < 0.0) {
    throw std::invalid_argument("strength must be a finite non-negative number");
  }
  auto ham = compilation.hamiltonian;
  ham.strength = strength;
  ham.couplings.clear();
  for (const auto& c : compilation.couplers) {
    ham.couplings.push_back({c.qubits, c.odd ? strength : -strength});
  }
  return ham;
}

Circuit compile_circuit(const Compilation& compilation) {
  if (compilation.mode != ProjectorMode::cnot) {
    throw std::invalid_argument("circuits are emitted in cnot mode only");
  }
  const std::vector<double> angles(compilation.couplers.size(), -2.0 * compilation.hamiltonian.strength);
  return schedule(
      emit_circuit(compilation.trees, compilation.couplers, angles, compilation.layout.num_physical()));
}

std::string qubit_label(const Compilation& compilation, std::size_t physical) {
  const auto& layout = compilation.layout;
  if (physical < layout.num_terms) {
    return support_label(compilation.code.term_labels[physical]);
  }
  const AncillaPool pool(layout.num_terms, layout.all_ancillas());
  std::vector<std::size_t> support;
  for (auto term : pool.expand(physical)) {
    std::vector<std::size_t> merged;
    const auto& t = compilation.code.term_labels[term];
    std::set_symmetric_difference(support.begin(), support.end(), t.begin(), t.end(), std::back_inserter(merged));
    support = std::move(merged);
  }
  return "*" + support_label(support);
}

}  // namespace parity
