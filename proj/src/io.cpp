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

#include "parity/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace parity {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kLayoutFormat = "parity-layout";
constexpr int kLayoutVersion = 1;

Json matrix_rows(const gf2::BitMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.row_data()) {
    rows.push_back(r.to_string());
  }
  return rows;
}

gf2::BitMatrix matrix_from(const Json& rows, std::size_t cols) {
  gf2::BitMatrix m(0, cols);
  for (const auto& r : rows) {
    auto v = gf2::BitVector::from_string(r.get<std::string>());
    if (v.size() != cols) {
      throw FormatError("matrix row has " + std::to_string(v.size()) + " columns, expected " + std::to_string(cols));
    }
    m.append_row(std::move(v));
  }
  return m;
}

gf2::BitVector vector_from(const Json& j, std::size_t size) {
  auto v = gf2::BitVector::from_string(j.get<std::string>());
  if (v.size() != size) {
    throw FormatError("bit-string has length " + std::to_string(v.size()) + ", expected " + std::to_string(size));
  }
  return v;
}

Json one_based(const std::vector<std::size_t>& support) {
  Json a = Json::array();
  for (auto i : support) {
    a.push_back(i + 1);
  }
  return a;
}

std::vector<std::size_t> zero_based(const Json& a) {
  std::vector<std::size_t> out;
  for (const auto& i : a) {
    const auto v = i.get<std::size_t>();
    if (v == 0) {
      throw FormatError("logical indices are 1-based");
    }
    out.push_back(v - 1);
  }
  return out;
}

std::vector<std::size_t> qubit_list(const Json& a, std::size_t num_physical) {
  auto qs = a.get<std::vector<std::size_t>>();
  for (auto q : qs) {
    if (q >= num_physical) {
      throw FormatError("qubit index " + std::to_string(q) + " out of range");
    }
  }
  if (!std::is_sorted(qs.begin(), qs.end()) || std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
    throw FormatError("qubit lists must be sorted and distinct");
  }
  return qs;
}

PlaquetteKind kind_from(const std::string& s) {
  if (s == "square") {
    return PlaquetteKind::square;
  }
  if (s == "triangle") {
    return PlaquetteKind::triangle;
  }
  if (s == "edge") {
    return PlaquetteKind::edge;
  }
  throw FormatError("unknown plaquette kind '" + s + "'");
}

Json gate_json(const Gate& g) {
  Json j;
  if (g.kind == GateKind::cnot) {
    j["gate"] = "cx";
    j["control"] = g.control;
    j["target"] = g.target;
  } else {
    j["gate"] = "rz";
    j["qubit"] = g.control;
    j["angle"] = g.angle;
  }
  return j;
}

Compilation parse_layout(const Json& doc) {
  if (doc.value("format", "") != kLayoutFormat) {
    throw FormatError("not a parity layout document");
  }
  if (doc.at("version").get<int>() != kLayoutVersion) {
    throw FormatError("unsupported layout version");
  }
  Compilation c;
  const auto mode = parse_mode(doc.at("mode").get<std::string>());
  if (!mode) {
    throw FormatError("unknown mode");
  }
  c.mode = *mode;
  c.seed = doc.at("seed").get<std::uint64_t>();

  const auto& code = doc.at("code");
  const auto n = code.at("num_logical").get<std::size_t>();
  const auto k = code.at("num_terms").get<std::size_t>();
  c.code.num_logical = n;
  for (const auto& t : code.at("term_labels")) {
    c.code.term_labels.push_back(zero_based(t));
  }
  if (c.code.term_labels.size() != k) {
    throw FormatError("term label count does not match num_terms");
  }
  c.code.generator = matrix_from(code.at("generator"), k);
  c.code.check = matrix_from(code.at("check"), k);
  c.code.check_offset = vector_from(code.at("check_offset"), c.code.check.rows());
  c.code.decode = matrix_from(code.at("decode"), k);
  c.code.decode_offset = vector_from(code.at("decode_offset"), n);
  c.code.constraint = matrix_from(code.at("constraint"), n);
  c.code.constraint_offset = vector_from(code.at("constraint_offset"), c.code.constraint.rows());
  c.code.degeneracy = code.at("degeneracy").get<std::size_t>();
  if (c.code.generator.rows() != n || c.code.decode.rows() != n) {
    throw FormatError("generator and decode need one row per logical qubit");
  }

  auto& layout = c.layout;
  layout.num_terms = k;
  layout.height = doc.at("grid").at("height").get<std::size_t>();
  layout.width = doc.at("grid").at("width").get<std::size_t>();

  const auto& qubits = doc.at("qubits");
  const std::size_t num_physical = qubits.size();
  if (num_physical < k) {
    throw FormatError("fewer qubits than terms");
  }
  layout.positions.resize(num_physical);
  for (std::size_t q = 0; q < num_physical; ++q) {
    const auto& e = qubits[q];
    if (e.at("index").get<std::size_t>() != q) {
      throw FormatError("qubits must be listed in index order");
    }
    if (!e.at("row").is_null()) {
      const Site s{e.at("row").get<std::size_t>(), e.at("col").get<std::size_t>()};
      if (s.row >= layout.height || s.col >= layout.width) {
        throw FormatError("qubit " + std::to_string(q) + " lies outside the grid");
      }
      layout.positions[q] = s;
    }
  }
  for (const auto& a : doc.at("ancillas")) {
    AncillaRecord record{a.at("index").get<std::size_t>(), qubit_list(a.at("definition"), k)};
    if (record.physical_index != k + layout.ancillas.size() + layout.dynamical_ancillas.size() ||
        record.physical_index >= num_physical) {
      throw FormatError("ancillas must be listed in index order");
    }
    (a.at("dynamical").get<bool>() ? layout.dynamical_ancillas : layout.ancillas).push_back(std::move(record));
  }
  if (layout.num_physical() != num_physical) {
    throw FormatError("every qubit beyond the terms must be an ancilla");
  }
  for (const auto& p : doc.at("pinned")) {
    const auto q = p.at("qubit").get<std::size_t>();
    if (q >= num_physical) {
      throw FormatError("pinned qubit out of range");
    }
    layout.pinned.push_back({q, p.at("value").get<bool>()});
  }
  for (const auto& p : doc.at("plaquettes")) {
    Plaquette plaquette;
    plaquette.cell = {p.at("cell").at(0).get<std::size_t>(), p.at("cell").at(1).get<std::size_t>()};
    plaquette.qubits = qubit_list(p.at("qubits"), num_physical);
    plaquette.kind = kind_from(p.at("kind").get<std::string>());
    plaquette.odd = p.at("odd").get<bool>();
    layout.plaquettes.push_back(std::move(plaquette));
  }
  if (c.mode == ProjectorMode::plaquette) {
    c.couplers = coupling_projectors(layout);
  } else {
    if (!layout.plaquettes.empty()) {
      throw FormatError("cnot layouts carry projectors, not plaquettes");
    }
    for (const auto& p : doc.at("projectors")) {
      c.couplers.push_back({qubit_list(p.at("qubits"), num_physical), p.at("odd").get<bool>()});
    }
    for (std::size_t i = 0; i < c.couplers.size(); ++i) {
      auto tree = build_tree(c.couplers[i], i, layout.positions);
      if (!tree) {
        throw FormatError("projector " + std::to_string(i) + " is not contiguous on the grid");
      }
      c.trees.push_back(std::move(*tree));
    }
  }

  auto& ham = c.hamiltonian;
  ham.num_physical = num_physical;
  ham.fields = doc.at("fields").get<std::vector<double>>();
  if (ham.fields.size() != num_physical) {
    throw FormatError("one field per qubit expected");
  }
  ham.constant = doc.at("constant").get<double>();
  ham.pinned = layout.pinned;
  const double strength = doc.at("constraint_strength").get<double>();
  if (!(strength >= 0.0)) {
    throw FormatError("constraint_strength must be non-negative");
  }
  c.hamiltonian = with_strength(c, strength);
  return c;
}

}  // namespace

std::string layout_to_json(const Compilation& c) {
  const auto& layout = c.layout;
  Json doc;
  doc["format"] = kLayoutFormat;
  doc["version"] = kLayoutVersion;
  doc["mode"] = to_string(c.mode);
  doc["seed"] = c.seed;
  doc["grid"] = {{"height", layout.height}, {"width", layout.width}};

  std::vector<bool> is_pinned(layout.num_physical(), false);
  for (const auto& p : layout.pinned) {
    is_pinned[p.qubit] = true;
  }
  Json qubits = Json::array();
  for (std::size_t q = 0; q < layout.num_physical(); ++q) {
    Json e;
    e["index"] = q;
    e["label"] = qubit_label(c, q);
    if (layout.positions[q]) {
      e["row"] = layout.positions[q]->row;
      e["col"] = layout.positions[q]->col;
    } else {
      e["row"] = nullptr;
      e["col"] = nullptr;
    }
    e["is_ancilla"] = q >= layout.num_terms;
    e["pinned"] = is_pinned[q];
    qubits.push_back(std::move(e));
  }
  doc["qubits"] = std::move(qubits);

  Json ancillas = Json::array();
  for (const auto& [records, dynamical] : {std::pair{&layout.ancillas, false}, {&layout.dynamical_ancillas, true}}) {
    for (const auto& a : *records) {
      ancillas.push_back({{"index", a.physical_index}, {"definition", a.definition}, {"dynamical", dynamical}});
    }
  }
  doc["ancillas"] = std::move(ancillas);

  Json pinned = Json::array();
  for (const auto& p : layout.pinned) {
    pinned.push_back({{"qubit", p.qubit}, {"value", p.value}});
  }
  doc["pinned"] = std::move(pinned);

  Json plaquettes = Json::array();
  for (const auto& p : layout.plaquettes) {
    plaquettes.push_back({{"cell", {p.cell.row, p.cell.col}},
                          {"qubits", p.qubits},
                          {"kind", to_string(p.kind)},
                          {"odd", p.odd}});
  }
  doc["plaquettes"] = std::move(plaquettes);

  Json projectors = Json::array();
  if (c.mode == ProjectorMode::cnot) {
    for (std::size_t i = 0; i < c.couplers.size(); ++i) {
      Json e;
      e["qubits"] = c.couplers[i].qubits;
      e["odd"] = c.couplers[i].odd;
      if (i < c.trees.size()) {
        e["root"] = c.trees[i].root;
      }
      projectors.push_back(std::move(e));
    }
  }
  doc["projectors"] = std::move(projectors);

  doc["fields"] = c.hamiltonian.fields;
  doc["constant"] = c.hamiltonian.constant;
  doc["constraint_strength"] = c.hamiltonian.strength;

  Json code;
  code["num_logical"] = c.code.num_logical;
  code["num_terms"] = c.code.num_terms();
  Json labels = Json::array();
  for (const auto& t : c.code.term_labels) {
    labels.push_back(one_based(t));
  }
  code["term_labels"] = std::move(labels);
  code["generator"] = matrix_rows(c.code.generator);
  code["check"] = matrix_rows(c.code.check);
  code["check_offset"] = c.code.check_offset.to_string();
  code["decode"] = matrix_rows(c.code.decode);
  code["decode_offset"] = c.code.decode_offset.to_string();
  code["constraint"] = matrix_rows(c.code.constraint);
  code["constraint_offset"] = c.code.constraint_offset.to_string();
  code["degeneracy"] = c.code.degeneracy;
  doc["code"] = std::move(code);
  return doc.dump(2) + "\n";
}

Compilation layout_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_layout(doc);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed layout: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed layout: ") + e.what());
  }
}

Compilation read_layout_file(const std::filesystem::path& path) { return layout_from_json(read_text_file(path)); }

std::string circuit_to_json(const Circuit& circuit) {
  Json doc;
  doc["num_qubits"] = circuit.num_qubits;
  doc["num_gates"] = circuit.gates.size();
  doc["depth"] = circuit.moments.size();
  Json moments = Json::array();
  for (const auto& m : circuit.moments) {
    Json layer = Json::array();
    for (auto g : m) {
      layer.push_back(gate_json(circuit.gates[g]));
    }
    moments.push_back(std::move(layer));
  }
  doc["moments"] = std::move(moments);
  return doc.dump(2) + "\n";
}

std::string report_to_json(const SpectrumReport& report, std::size_t max_states) {
  const auto states = [&](const std::vector<gf2::BitVector>& list) {
    Json a = Json::array();
    for (std::size_t i = 0; i < list.size() && i < max_states; ++i) {
      a.push_back(list[i].to_string());
    }
    return a;
  };
  Json doc;
  doc["logical_optimum"] = {{"energy", report.logical.energy},
                            {"num_assignments", report.logical.states.size()},
                            {"assignments", states(report.logical.states)}};
  doc["physical_optimum"] = {{"energy", report.physical.energy},
                             {"num_states", report.physical.states.size()},
                             {"states", states(report.physical.states)},
                             {"non_codewords", report.physical.non_codewords}};
  doc["decoded_match"] = report.decoded_match;
  doc["energy_match"] = report.energy_match;
  doc["constraint_violations_in_gs"] = report.constraint_violations_in_gs;
  doc["num_couplers"] = report.num_couplers;
  doc["constraint_strength"] = report.strength;
  return doc.dump(2) + "\n";
}

std::string matrix_dump(const ParityCode& code) {
  std::string labels;
  for (std::size_t a = 0; a < code.term_labels.size(); ++a) {
    labels += (a == 0 ? "" : " ") + std::string("(") + support_label(code.term_labels[a]) + ")";
  }
  std::string out;
  const auto section = [&](const char* name, const gf2::BitMatrix& m, const std::string& header) {
    out += std::string("# ") + name + " " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + "\n";
    if (!header.empty()) {
      out += "# columns: " + header + "\n";
    }
    out += m.to_dump();
  };
  section("G", code.generator, labels);
  section("P", code.check, labels);
  section("D", code.decode, labels);
  section("C", code.constraint, "");
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace parity
