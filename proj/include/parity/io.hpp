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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "parity/cnot.hpp"
#include "parity/oracle.hpp"
#include "parity/pipeline.hpp"

namespace parity {

/// A layout or circuit document that cannot be interpreted.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Layout file: grid, qubits (index, label, row, col, is_ancilla),
/// plaquettes, projectors (cnot mode), fields, constraint_strength and the
/// code matrices needed to decode. Keys are written in a fixed order.
std::string layout_to_json(const Compilation& compilation);

/// Inverse of layout_to_json. Trees are rebuilt from the positions.
Compilation layout_from_json(std::string_view text);
Compilation read_layout_file(const std::filesystem::path& path);

/// Circuit with explicit moments.
std::string circuit_to_json(const Circuit& circuit);

std::string report_to_json(const SpectrumReport& report, std::size_t max_states = 64);

/// G, P, D and C, each in the matrix dump format after a comment header.
std::string matrix_dump(const ParityCode& code);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace parity
