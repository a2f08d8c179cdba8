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

#include <iosfwd>

namespace parity {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitCompileFailure = 2,
  kExitCapExceeded = 3,
};

/// Entry point of `parityc`: compile, verify, decode, emit-circuit, render.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace parity
