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

#include <string>

#include "parity/pipeline.hpp"

namespace parity {

/// Site grid with qubit labels. Cells hold `S<i>` for squares and `T<i>` for
/// triangles; edge plaquettes draw as `-` or `|` between their sites.
std::string render_ascii(const Compilation& compilation);

/// Same picture as SVG: squares blue, triangles red, edges green.
std::string render_svg(const Compilation& compilation);

}  // namespace parity
