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

#include "parity/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "parity/decoder.hpp"
#include "parity/io.hpp"
#include "parity/oracle.hpp"
#include "parity/pipeline.hpp"
#include "parity/render.hpp"

namespace parity {

namespace {

namespace fs = std::filesystem;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string problem;
  std::string layout;
  std::string samples;
  std::string mode = "plaquette";
  std::size_t max_len = 8;
  std::uint64_t seed = 0;
  std::size_t budget = 1000000;
  std::optional<double> strength;
  std::size_t threads = 1;
  std::size_t num_sets = 7;
  bool dump_matrices = false;
  std::string out;
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text)) {
    throw InputError("cannot write " + path.string());
  }
}

// "dir/name.layout.json" and "dir/name.json" both give "dir/name".
fs::path artifact_base(const fs::path& path) {
  std::string name = path.filename().string();
  for (const std::string suffix : {".layout.json", ".json"}) {
    if (name.size() > suffix.size() && name.ends_with(suffix)) {
      return path.parent_path() / name.substr(0, name.size() - suffix.size());
    }
  }
  return path.parent_path() / path.stem();
}

void write_circuit(const Compilation& c, const fs::path& base, std::ostream& out) {
  const auto circuit = compile_circuit(c);
  const fs::path qasm = base.string() + ".circuit.qasm";
  const fs::path json = base.string() + ".circuit.json";
  write_file(qasm, to_qasm(circuit));
  write_file(json, circuit_to_json(circuit));
  out << "circuit: " << circuit.gates.size() << " gate(s), depth " << circuit.moments.size() << " -> "
      << qasm.string() << ", " << json.string() << "\n";
}

int cmd_compile(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto problem = read_problem_file(s.problem);
  const auto mode = parse_mode(s.mode);
  if (!mode) {
    throw InputError("unknown mode '" + s.mode + "'");
  }
  CompileOptions options{.mode = *mode, .max_len = s.max_len, .seed = s.seed, .budget = s.budget,
                         .strength = s.strength};
  Compilation c;
  try {
    c = compile(problem, options);
  } catch (const CompileFailure& e) {
    err << "compile failed: " << e.diagnostics().summary() << "\n";
    return kExitCompileFailure;
  }
  if (s.dump_matrices) {
    out << matrix_dump(c.code);
  }
  const fs::path layout_path = s.out.empty() ? artifact_base(s.problem).string() + ".layout.json" : s.out;
  write_file(layout_path, layout_to_json(c));
  const auto& l = c.layout;
  out << "compiled " << l.num_terms << " term(s) into " << l.num_physical() << " physical qubit(s) on a " << l.height
      << "x" << l.width << " grid: " << c.couplers.size() << " coupler(s), " << l.all_ancillas().size()
      << " ancilla(s) (" << l.dynamical_ancillas.size() << " dynamical), " << l.pinned.size() << " pinned\n";
  out << "layout: " << layout_path.string() << "\n";
  if (c.mode == ProjectorMode::cnot) {
    write_circuit(c, artifact_base(layout_path), out);
  }
  return kExitOk;
}

void check_matches(const LogicalProblem& problem, const Compilation& c) {
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& t : problem.terms()) {
    supports.push_back(t.support);
  }
  if (problem.num_qubits() != c.code.num_logical || supports != c.code.term_labels) {
    throw InputError("layout was compiled from a different problem");
  }
  const auto expected = emit_physical_hamiltonian(c.couplers, c.layout.num_physical(), c.layout.pinned, problem,
                                                  c.hamiltonian.strength);
  if (expected.fields != c.hamiltonian.fields || expected.constant != c.hamiltonian.constant) {
    throw InputError("layout fields do not match the problem coefficients");
  }
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto problem = read_problem_file(s.problem);
  const auto c = read_layout_file(s.layout);
  check_matches(problem, c);
  if (problem.num_qubits() > kMaxEnumeratedBits) {
    throw CapExceeded("verify needs N <= " + std::to_string(kMaxEnumeratedBits) + ", got " +
                      std::to_string(problem.num_qubits()));
  }
  const auto ham = s.strength ? with_strength(c, *s.strength) : c.hamiltonian;
  const auto report = verify_pipeline(problem, c.code, physical_constraints(c), ham, s.threads);
  out << report_to_json(report);
  if (!report.decoded_match) {
    err << "decoded physical ground states differ from the logical optima\n";
    return kExitCompileFailure;
  }
  return kExitOk;
}

int cmd_decode(const Settings& s, std::ostream& out, std::ostream&) {
  const auto c = read_layout_file(s.layout);
  if (s.num_sets == 0) {
    throw InputError("num-sets must be at least 1");
  }
  const auto constraints = physical_constraints(c);
  std::istringstream lines(read_text_file(s.samples));
  std::string result = "# logical syndrome_weight tied_bits\n";
  std::string line;
  std::size_t number = 0;
  std::size_t sample = 0;
  while (std::getline(lines, line)) {
    ++number;
    line.erase(line.find_last_not_of(" \t\r") + 1);
    line.erase(0, line.find_first_not_of(" \t"));
    if (line.empty() || line[0] == '#') {
      continue;
    }
    if (line.size() != constraints.num_physical || line.find_first_not_of("01") != std::string::npos) {
      throw InputError("samples line " + std::to_string(number) + ": expected " +
                       std::to_string(constraints.num_physical) + " characters of 0/1");
    }
    const auto decoded = correct_and_decode(c.code, constraints, gf2::BitVector::from_string(line), s.num_sets,
                                            s.seed + sample++);
    std::string tied;
    for (std::size_t i = 0; i < decoded.tied.size(); ++i) {
      if (decoded.tied[i]) {
        tied += (tied.empty() ? "" : ",") + std::to_string(i + 1);
      }
    }
    result += decoded.logical.to_string() + " " + std::to_string(decoded.syndrome_weight) + " " +
              (tied.empty() ? "-" : tied) + "\n";
  }
  if (s.out.empty()) {
    out << result;
  } else {
    write_file(s.out, result);
  }
  return kExitOk;
}

int cmd_emit_circuit(const Settings& s, std::ostream& out, std::ostream&) {
  const auto c = read_layout_file(s.layout);
  if (c.mode != ProjectorMode::cnot) {
    throw InputError("emit-circuit needs a layout compiled with --mode cnot");
  }
  write_circuit(c, s.out.empty() ? artifact_base(s.layout) : fs::path(s.out), out);
  return kExitOk;
}

int cmd_render(const Settings& s, std::ostream& out, std::ostream&) {
  const auto c = read_layout_file(s.layout);
  out << render_ascii(c);
  const fs::path svg = s.out.empty() ? artifact_base(s.layout).string() + ".svg" : s.out;
  write_file(svg, render_svg(c));
  out << "svg: " << svg.string() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parity compiler for higher-order constrained binary optimization", "parityc"};
  app.require_subcommand(1);
  Settings s;

  auto* compile_cmd = app.add_subcommand("compile", "Compile a problem file to a layout");
  compile_cmd->add_option("problem", s.problem, "Problem file (.txt or .json)")->required();
  compile_cmd->add_option("--mode", s.mode, "plaquette or cnot")->check(CLI::IsMember({"plaquette", "cnot"}));
  compile_cmd->add_option("--max-len", s.max_len, "Longest projector in cnot mode")->check(CLI::PositiveNumber);
  compile_cmd->add_option("--seed", s.seed, "Seed for every random choice");
  compile_cmd->add_option("--budget", s.budget, "Search nodes per layout attempt")->check(CLI::PositiveNumber);
  compile_cmd->add_option("--strength", s.strength, "Constraint strength (default 1 + 2 sum |J|)");
  compile_cmd->add_option("--threads", s.threads, "Worker threads")->check(CLI::PositiveNumber);
  compile_cmd->add_flag("--dump-matrices", s.dump_matrices, "Print G, P, D and C");
  compile_cmd->add_option("--out", s.out, "Layout file (default <problem>.layout.json)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a layout against the problem by enumeration");
  verify_cmd->add_option("problem", s.problem, "Problem file")->required();
  verify_cmd->add_option("layout", s.layout, "Layout file")->required();
  verify_cmd->add_option("--strength", s.strength, "Override the constraint strength");
  verify_cmd->add_option("--threads", s.threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* decode_cmd = app.add_subcommand("decode", "Decode measured physical bit-strings");
  decode_cmd->add_option("layout", s.layout, "Layout file")->required();
  decode_cmd->add_option("samples", s.samples, "One physical bit-string per line")->required();
  decode_cmd->add_option("--num-sets", s.num_sets, "Readout sets per majority vote");
  decode_cmd->add_option("--seed", s.seed, "Seed for readout set sampling");
  decode_cmd->add_option("--out", s.out, "Output file (default stdout)");

  auto* circuit_cmd = app.add_subcommand("emit-circuit", "Write the CNOT circuit of a cnot-mode layout");
  circuit_cmd->add_option("layout", s.layout, "Layout file")->required();
  circuit_cmd->add_option("--out", s.out, "Output path without extension");

  auto* render_cmd = app.add_subcommand("render", "Draw a layout as ASCII and SVG");
  render_cmd->add_option("layout", s.layout, "Layout file")->required();
  render_cmd->add_option("--out", s.out, "SVG file (default <layout>.svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (compile_cmd->parsed()) {
      return cmd_compile(s, out, err);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(s, out, err);
    }
    if (decode_cmd->parsed()) {
      return cmd_decode(s, out, err);
    }
    if (circuit_cmd->parsed()) {
      return cmd_emit_circuit(s, out, err);
    }
    return cmd_render(s, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const CompileFailure& e) {
    err << "compile failed: " << e.diagnostics().summary() << "\n";
    return kExitCompileFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace parity
