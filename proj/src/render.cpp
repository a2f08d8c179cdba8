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

#include "parity/render.hpp"

#include <algorithm>
#include <map>

namespace parity {

namespace {

constexpr int kPitch = 90;
constexpr int kMargin = 50;

struct Grid {
  std::size_t height;
  std::size_t width;
  std::vector<std::vector<std::string>> labels;  // "." for empty sites
};

Grid site_labels(const Compilation& c) {
  const auto& layout = c.layout;
  Grid g{layout.height, layout.width, std::vector(layout.height, std::vector<std::string>(layout.width, "."))};
  for (std::size_t q = 0; q < layout.positions.size(); ++q) {
    if (const auto& s = layout.positions[q]) {
      g.labels[s->row][s->col] = qubit_label(c, q);
    }
  }
  return g;
}

std::string pad(const std::string& s, std::size_t w) {
  const std::size_t total = w - std::min(w, s.size());
  return std::string(total / 2, ' ') + s + std::string(total - total / 2, ' ');
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    out += ch == '&' ? std::string("&amp;") : ch == '<' ? std::string("&lt;") : std::string(1, ch);
  }
  return out;
}

std::string coord(std::size_t index) { return std::to_string(kMargin + kPitch * static_cast<int>(index)); }

}  // namespace

std::string render_ascii(const Compilation& c) {
  const auto g = site_labels(c);
  std::size_t w = 3;
  for (const auto& row : g.labels) {
    for (const auto& l : row) {
      w = std::max(w, l.size() + 2);
    }
  }
  std::map<Site, std::string> cells;
  std::map<Site, char> right_edges;
  std::map<Site, char> down_edges;
  for (std::size_t i = 0; i < c.layout.plaquettes.size(); ++i) {
    const auto& p = c.layout.plaquettes[i];
    if (p.kind == PlaquetteKind::edge) {
      const auto a = *c.layout.positions[p.qubits[0]];
      const auto b = *c.layout.positions[p.qubits[1]];
      const Site lo = std::min(a, b);
      (a.row == b.row ? right_edges : down_edges)[lo] = a.row == b.row ? '-' : '|';
    } else {
      cells[p.cell] = (p.kind == PlaquetteKind::square ? "S" : "T") + std::to_string(i);
    }
  }
  std::vector<std::string> lines{"grid " + std::to_string(g.height) + "x" + std::to_string(g.width) + ", " +
                                 std::to_string(c.layout.plaquettes.size()) + " plaquette(s)"};
  for (std::size_t r = 0; r < g.height; ++r) {
    std::string sites;
    std::string between;
    for (std::size_t col = 0; col < g.width; ++col) {
      sites += pad(g.labels[r][col], w);
      between += pad(down_edges.count({r, col}) ? "|" : "", w);
      if (col + 1 < g.width) {
        sites += pad(right_edges.count({r, col}) ? "---" : "", w);
        const auto it = cells.find({r, col});
        between += pad(it == cells.end() ? "" : it->second, w);
      }
    }
    lines.push_back(std::move(sites));
    if (r + 1 < g.height) {
      lines.push_back(std::move(between));
    }
  }
  std::string out;
  for (auto& line : lines) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

std::string render_svg(const Compilation& c) {
  const auto g = site_labels(c);
  const int width = 2 * kMargin + kPitch * static_cast<int>(g.width == 0 ? 0 : g.width - 1);
  const int height = 2 * kMargin + kPitch * static_cast<int>(g.height == 0 ? 0 : g.height - 1);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) + "\" height=\"" +
                    std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " +
                    std::to_string(height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& p : c.layout.plaquettes) {
    if (p.kind == PlaquetteKind::edge) {
      const auto a = *c.layout.positions[p.qubits[0]];
      const auto b = *c.layout.positions[p.qubits[1]];
      out += "<line class=\"edge\" x1=\"" + coord(a.col) + "\" y1=\"" + coord(a.row) + "\" x2=\"" + coord(b.col) +
             "\" y2=\"" + coord(b.row) + "\" stroke=\"#59a14f\" stroke-width=\"10\"/>\n";
      continue;
    }
    std::string points;
    for (auto q : p.qubits) {
      const auto s = *c.layout.positions[q];
      points += (points.empty() ? "" : " ") + coord(s.col) + "," + coord(s.row);
    }
    if (p.kind == PlaquetteKind::square) {
      const auto r = p.cell.row;
      const auto col = p.cell.col;
      points = coord(col) + "," + coord(r) + " " + coord(col + 1) + "," + coord(r) + " " + coord(col + 1) + "," +
               coord(r + 1) + " " + coord(col) + "," + coord(r + 1);
      out += "<polygon class=\"square\" points=\"" + points +
             "\" fill=\"#4e79a7\" fill-opacity=\"0.55\" stroke=\"#2f4b7c\"/>\n";
    } else {
      out += "<polygon class=\"triangle\" points=\"" + points +
             "\" fill=\"#e15759\" fill-opacity=\"0.55\" stroke=\"#a1282a\"/>\n";
    }
  }
  for (std::size_t r = 0; r < g.height; ++r) {
    for (std::size_t col = 0; col < g.width; ++col) {
      const auto& label = g.labels[r][col];
      if (label == ".") {
        out += "<circle cx=\"" + coord(col) + "\" cy=\"" + coord(r) + "\" r=\"4\" fill=\"#bbbbbb\"/>\n";
        continue;
      }
      const bool ancilla = label[0] == '*';
      out += "<circle cx=\"" + coord(col) + "\" cy=\"" + coord(r) + "\" r=\"22\" fill=\"" +
             (ancilla ? std::string("#f2f2f2") : std::string("white")) + "\" stroke=\"black\"/>\n";
      out += "<text x=\"" + coord(col) + "\" y=\"" + coord(r) +
             "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"central\">" +
             escape(label) + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace parity
