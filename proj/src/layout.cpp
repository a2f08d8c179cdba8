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

#include "parity/layout.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parity {

namespace {

constexpr long kNone = -1;

struct Candidate {
  Plaquette plaquette;
  std::vector<std::pair<std::size_t, std::size_t>> assign;  // (qubit, site)
  long cell = kNone;
};

// Depth-first placement of projectors onto a fixed h x w grid.
class PlaquetteSearch {
 public:
  PlaquetteSearch(const std::vector<Projector>& projectors, const std::vector<bool>& active, std::size_t h,
                  std::size_t w, std::uint64_t seed, std::size_t budget)
      : projectors_(projectors),
        active_(active),
        h_(h),
        w_(w),
        budget_(budget),
        occ_(h * w, kNone),
        pos_(active.size(), kNone),
        cell_used_(h > 1 && w > 1 ? (h - 1) * (w - 1) : 0, 0),
        done_(projectors.size(), 0),
        realized_(projectors.size()),
        rank_(projectors.size()),
        qubit_projectors_(active.size()),
        failures(projectors.size(), 0) {
    std::vector<std::size_t> order(projectors.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng() % i]);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      rank_[order[i]] = i;
    }
    for (std::size_t p = 0; p < projectors.size(); ++p) {
      for (auto q : projectors[p].qubits) {
        qubit_projectors_[q].push_back(p);
      }
    }
  }

  bool run() { return dfs(0); }

  [[nodiscard]] std::size_t nodes() const { return nodes_; }
  [[nodiscard]] std::optional<Site> position(std::size_t q) const {
    if (pos_[q] == kNone) {
      return std::nullopt;
    }
    return Site{static_cast<std::size_t>(pos_[q]) / w_, static_cast<std::size_t>(pos_[q]) % w_};
  }
  [[nodiscard]] const Plaquette& realized(std::size_t p) const { return *realized_[p]; }

 private:
  const std::vector<Projector>& projectors_;
  const std::vector<bool>& active_;
  std::size_t h_;
  std::size_t w_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<long> occ_;
  std::vector<long> pos_;
  std::vector<char> cell_used_;
  std::vector<char> done_;
  std::vector<std::optional<Plaquette>> realized_;
  std::vector<std::size_t> rank_;
  std::vector<std::vector<std::size_t>> qubit_projectors_;

 public:
  std::vector<std::size_t> failures;

 private:
  [[nodiscard]] Site site_of(std::size_t s) const { return {s / w_, s % w_}; }
  [[nodiscard]] std::size_t cells_h() const { return h_ > 1 ? h_ - 1 : 0; }
  [[nodiscard]] std::size_t cells_w() const { return w_ > 1 ? w_ - 1 : 0; }
  [[nodiscard]] bool nothing_placed() const {
    return std::none_of(pos_.begin(), pos_.end(), [](long p) { return p != kNone; });
  }

  std::vector<std::size_t> neighbours(std::size_t s) const {
    const Site a = site_of(s);
    std::vector<std::size_t> out;
    if (a.row > 0) out.push_back(s - w_);
    if (a.col > 0) out.push_back(s - 1);
    if (a.col + 1 < w_) out.push_back(s + 1);
    if (a.row + 1 < h_) out.push_back(s + w_);
    return out;
  }

  std::vector<Candidate> edge_candidates(std::size_t p) const {
    const auto& proj = projectors_[p];
    const std::size_t a = proj.qubits[0];
    const std::size_t b = proj.qubits[1];
    std::vector<Candidate> out;
    auto make = [&](std::size_t sa, std::size_t sb) {
      Candidate c;
      c.plaquette = {site_of(std::min(sa, sb)), proj.qubits, PlaquetteKind::edge, proj.odd};
      if (pos_[a] == kNone) c.assign.emplace_back(a, sa);
      if (pos_[b] == kNone) c.assign.emplace_back(b, sb);
      out.push_back(std::move(c));
    };
    if (pos_[a] != kNone && pos_[b] != kNone) {
      if (sites_adjacent(site_of(pos_[a]), site_of(pos_[b]))) {
        make(pos_[a], pos_[b]);
      }
      return out;
    }
    if (pos_[a] != kNone || pos_[b] != kNone) {
      const bool a_placed = pos_[a] != kNone;
      const std::size_t anchor = a_placed ? pos_[a] : pos_[b];
      for (auto n : neighbours(anchor)) {
        if (occ_[n] == kNone) {
          a_placed ? make(anchor, n) : make(n, anchor);
        }
      }
      return out;
    }
    const bool first = nothing_placed();
    for (std::size_t s = 0; s < h_ * w_; ++s) {
      const Site at = site_of(s);
      if (occ_[s] != kNone || (first && (2 * at.row > h_ - 1 || 2 * at.col > w_ - 1))) {
        continue;
      }
      for (auto n : neighbours(s)) {
        if (occ_[n] == kNone) {
          make(s, n);
        }
      }
    }
    return out;
  }

  std::vector<Candidate> cell_candidates(std::size_t p) const {
    const auto& proj = projectors_[p];
    std::vector<std::size_t> placed_sites;
    std::vector<std::size_t> unplaced;
    for (auto q : proj.qubits) {
      if (pos_[q] == kNone) {
        unplaced.push_back(q);
      } else {
        placed_sites.push_back(pos_[q]);
      }
    }
    std::vector<std::size_t> cells;
    if (!placed_sites.empty()) {
      const Site a = site_of(placed_sites[0]);
      for (std::size_t dr = 0; dr < 2; ++dr) {
        for (std::size_t dc = 0; dc < 2; ++dc) {
          if (a.row >= 1 - dr && a.col >= 1 - dc) {
            const std::size_t r = a.row + dr - 1;
            const std::size_t c = a.col + dc - 1;
            if (r < cells_h() && c < cells_w()) {
              cells.push_back(r * cells_w() + c);
            }
          }
        }
      }
    } else {
      const bool first = nothing_placed();
      for (std::size_t r = 0; r < cells_h(); ++r) {
        for (std::size_t c = 0; c < cells_w(); ++c) {
          if (first && (2 * r > cells_h() - 1 || 2 * c > cells_w() - 1)) {
            continue;
          }
          cells.push_back(r * cells_w() + c);
        }
      }
    }

    std::vector<Candidate> out;
    const bool square = proj.size() == 4;
    for (auto cell : cells) {
      if (cell_used_[cell]) {
        continue;
      }
      const std::size_t r = cell / cells_w();
      const std::size_t c = cell % cells_w();
      const std::size_t corners[4] = {r * w_ + c, r * w_ + c + 1, (r + 1) * w_ + c, (r + 1) * w_ + c + 1};
      for (int excluded = square ? -1 : 0; excluded < (square ? 0 : 4); ++excluded) {
        std::vector<std::size_t> subset;
        for (int i = 0; i < 4; ++i) {
          if (i != excluded) {
            subset.push_back(corners[i]);
          }
        }
        const bool covers = std::all_of(placed_sites.begin(), placed_sites.end(), [&](std::size_t s) {
          return std::find(subset.begin(), subset.end(), s) != subset.end();
        });
        if (!covers) {
          continue;
        }
        std::vector<std::size_t> free;
        bool blocked = false;
        for (auto s : subset) {
          if (std::find(placed_sites.begin(), placed_sites.end(), s) != placed_sites.end()) {
            continue;
          }
          blocked = blocked || occ_[s] != kNone;
          free.push_back(s);
        }
        if (blocked) {
          continue;
        }
        std::vector<std::size_t> perm = unplaced;
        do {
          Candidate cand;
          cand.plaquette = {Site{r, c}, proj.qubits, square ? PlaquetteKind::square : PlaquetteKind::triangle,
                            proj.odd};
          cand.cell = static_cast<long>(cell);
          for (std::size_t i = 0; i < perm.size(); ++i) {
            cand.assign.emplace_back(perm[i], free[i]);
          }
          out.push_back(std::move(cand));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
    return out;
  }

  std::vector<Candidate> candidates(std::size_t p) const {
    return projectors_[p].size() == 2 ? edge_candidates(p) : cell_candidates(p);
  }

  // A placed qubit has at most four cells around it for its remaining
  // cell-sized projectors.
  bool cells_suffice(std::size_t q) const {
    if (pos_[q] == kNone) {
      return true;
    }
    std::size_t needed = 0;
    for (auto p : qubit_projectors_[q]) {
      needed += (!done_[p] && projectors_[p].size() >= 3) ? 1 : 0;
    }
    if (needed == 0) {
      return true;
    }
    const Site a = site_of(pos_[q]);
    std::size_t available = 0;
    for (std::size_t dr = 0; dr < 2; ++dr) {
      for (std::size_t dc = 0; dc < 2; ++dc) {
        if (a.row >= 1 - dr && a.col >= 1 - dc) {
          const std::size_t r = a.row + dr - 1;
          const std::size_t c = a.col + dc - 1;
          available += (r < cells_h() && c < cells_w() && !cell_used_[r * cells_w() + c]) ? 1 : 0;
        }
      }
    }
    return needed <= available;
  }

  void apply(const Candidate& c, std::size_t p) {
    for (auto [q, s] : c.assign) {
      occ_[s] = static_cast<long>(q);
      pos_[q] = static_cast<long>(s);
    }
    if (c.cell != kNone) {
      cell_used_[c.cell] = 1;
    }
    done_[p] = 1;
    realized_[p] = c.plaquette;
  }

  void undo(const Candidate& c, std::size_t p) {
    for (auto [q, s] : c.assign) {
      occ_[s] = kNone;
      pos_[q] = kNone;
    }
    if (c.cell != kNone) {
      cell_used_[c.cell] = 0;
    }
    done_[p] = 0;
    realized_[p].reset();
  }

  std::size_t placed_count(std::size_t p) const {
    std::size_t n = 0;
    for (auto q : projectors_[p].qubits) {
      n += pos_[q] != kNone ? 1 : 0;
    }
    return n;
  }

  void place_remaining() {
    std::size_t s = 0;
    for (std::size_t q = 0; q < active_.size(); ++q) {
      if (!active_[q] || pos_[q] != kNone) {
        continue;
      }
      while (occ_[s] != kNone) {
        ++s;
      }
      occ_[s] = static_cast<long>(q);
      pos_[q] = static_cast<long>(s);
    }
  }

  bool dfs(std::size_t depth) {
    if (depth == projectors_.size()) {
      place_remaining();
      return true;
    }
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    for (std::size_t q = 0; q < pos_.size(); ++q) {
      if (!cells_suffice(q)) {
        for (auto p : qubit_projectors_[q]) {
          failures[p] += (!done_[p] && projectors_[p].size() == 4) ? 1 : 0;
        }
        return false;
      }
    }

    // Most constrained projector first: fewest candidates among those that
    // touch placed qubits, then most placed qubits, then seeded rank.
    std::optional<std::size_t> chosen;
    std::vector<Candidate> chosen_candidates;
    std::size_t chosen_placed = 0;
    for (std::size_t p = 0; p < projectors_.size(); ++p) {
      if (done_[p]) {
        continue;
      }
      const std::size_t placed = placed_count(p);
      if (placed == 0) {
        continue;
      }
      auto cands = candidates(p);
      if (cands.empty()) {
        ++failures[p];
        return false;
      }
      const bool better = !chosen || cands.size() < chosen_candidates.size() ||
                          (cands.size() == chosen_candidates.size() &&
                           (placed > chosen_placed || (placed == chosen_placed && rank_[p] < rank_[*chosen])));
      if (better) {
        chosen = p;
        chosen_candidates = std::move(cands);
        chosen_placed = placed;
      }
    }
    if (!chosen) {
      for (std::size_t p = 0; p < projectors_.size(); ++p) {
        if (!done_[p] && (!chosen || rank_[p] < rank_[*chosen])) {
          chosen = p;
        }
      }
      chosen_candidates = candidates(*chosen);
      if (chosen_candidates.empty()) {
        ++failures[*chosen];
        return false;
      }
    }

    for (const auto& c : chosen_candidates) {
      apply(c, *chosen);
      if (dfs(depth + 1)) {
        return true;
      }
      undo(c, *chosen);
      if (exhausted_) {
        return false;
      }
    }
    return false;
  }
};

}  // namespace

bool sites_adjacent(Site a, Site b) {
  const std::size_t dr = a.row > b.row ? a.row - b.row : b.row - a.row;
  const std::size_t dc = a.col > b.col ? a.col - b.col : b.col - a.col;
  return dr + dc == 1;
}

const char* to_string(PlaquetteKind kind) {
  switch (kind) {
    case PlaquetteKind::square:
      return "square";
    case PlaquetteKind::triangle:
      return "triangle";
    case PlaquetteKind::edge:
      return "edge";
  }
  return "unknown";
}

Layout cropped(Layout layout) {
  std::size_t min_r = SIZE_MAX;
  std::size_t min_c = SIZE_MAX;
  std::size_t max_r = 0;
  std::size_t max_c = 0;
  bool any = false;
  for (const auto& p : layout.positions) {
    if (p) {
      any = true;
      min_r = std::min(min_r, p->row);
      min_c = std::min(min_c, p->col);
      max_r = std::max(max_r, p->row);
      max_c = std::max(max_c, p->col);
    }
  }
  if (!any) {
    layout.height = 0;
    layout.width = 0;
    return layout;
  }
  for (auto& p : layout.positions) {
    if (p) {
      p->row -= min_r;
      p->col -= min_c;
    }
  }
  for (auto& pl : layout.plaquettes) {
    pl.cell.row -= min_r;
    pl.cell.col -= min_c;
  }
  layout.height = max_r - min_r + 1;
  layout.width = max_c - min_c + 1;
  return layout;
}

std::vector<AncillaRecord> Layout::all_ancillas() const {
  std::vector<AncillaRecord> out = ancillas;
  out.insert(out.end(), dynamical_ancillas.begin(), dynamical_ancillas.end());
  return out;
}

std::vector<Projector> coupling_projectors(const Layout& layout) {
  std::vector<Projector> out;
  out.reserve(layout.plaquettes.size());
  for (const auto& p : layout.plaquettes) {
    out.push_back(p.projector());
  }
  return out;
}

std::string LayoutDiagnostics::summary() const {
  std::ostringstream out;
  out << "layout search failed after " << attempts << " attempt(s), " << nodes << " node(s); grid " << height
      << "x" << width << "; dynamical ancillas tried: " << dynamic_ancillas;
  if (hardest) {
    out << "; hardest projector {";
    for (std::size_t i = 0; i < hardest->qubits.size(); ++i) {
      out << (i ? "," : "") << hardest->qubits[i];
    }
    out << "} failed " << hardest_failures << " time(s)";
  }
  return out.str();
}

std::tuple<Projector, Projector, AncillaRecord> split_dynamically(const Projector& projector, AncillaPool& pool,
                                                                  std::span<const Projector> context) {
  if (projector.size() != 4) {
    throw std::invalid_argument("dynamical splits apply to size-4 projectors only");
  }
  auto pieces = split_to_length(projector, 3, ProjectorMode::plaquette, context, pool);
  return {pieces[0], pieces[1], pool.records().back()};
}

LayoutResult lay_out(const ProjectorSet& set, const LayoutOptions& options) {
  for (const auto& p : set.projectors) {
    if (p.size() < 2 || p.size() > 4) {
      throw std::invalid_argument("plaquette layout needs projectors of size 2, 3 or 4");
    }
  }
  LayoutResult result;
  auto& diag = result.diagnostics;
  std::vector<Projector> projectors = set.projectors;
  AncillaPool pool(set.num_terms, set.ancillas);
  const std::size_t static_ancillas = set.ancillas.size();

  std::vector<bool> pinned(set.num_physical, false);
  for (const auto& pin : set.pinned) {
    pinned[pin.qubit] = true;
  }
  std::size_t active_count = 0;
  for (bool b : pinned) {
    active_count += b ? 0 : 1;
  }
  std::size_t side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(active_count)))) + 1;
  std::size_t h = side;
  std::size_t w = side;
  std::size_t growth = 0;

  auto grow = [&]() {
    if (growth >= options.max_grid_growth) {
      return false;
    }
    (growth % 2 == 0 ? w : h) += 1;
    ++growth;
    return true;
  };

  while (true) {
    std::vector<bool> active(pool.num_physical(), true);
    for (const auto& pin : set.pinned) {
      active[pin.qubit] = false;
    }
    const std::size_t needed = std::count(active.begin(), active.end(), true);
    diag.height = h;
    diag.width = w;
    if (needed > h * w) {
      if (!grow()) {
        return result;
      }
      continue;
    }
    ++diag.attempts;
    PlaquetteSearch search(projectors, active, h, w, options.seed, options.budget);
    const bool found = search.run();
    diag.nodes += search.nodes();
    if (found) {
      Layout layout;
      layout.height = h;
      layout.width = w;
      layout.num_terms = set.num_terms;
      layout.ancillas = set.ancillas;
      layout.dynamical_ancillas.assign(pool.records().begin() + static_cast<std::ptrdiff_t>(static_ancillas),
                                       pool.records().end());
      layout.pinned = set.pinned;
      for (std::size_t q = 0; q < pool.num_physical(); ++q) {
        layout.positions.push_back(active[q] ? search.position(q) : std::nullopt);
      }
      for (std::size_t p = 0; p < projectors.size(); ++p) {
        layout.plaquettes.push_back(search.realized(p));
      }
      result.layout = cropped(std::move(layout));
      return result;
    }

    std::optional<std::size_t> worst;
    for (std::size_t p = 0; p < projectors.size(); ++p) {
      if (search.failures[p] > 0 && (!worst || search.failures[p] > search.failures[*worst])) {
        worst = p;
      }
    }
    if (worst) {
      diag.hardest = projectors[*worst];
      diag.hardest_failures = search.failures[*worst];
    }
    std::optional<std::size_t> split;
    for (std::size_t p = 0; p < projectors.size(); ++p) {
      if (projectors[p].size() == 4 && search.failures[p] > 0 &&
          (!split || search.failures[p] > search.failures[*split])) {
        split = p;
      }
    }
    if (split && diag.dynamic_ancillas < options.max_dynamic_ancillas) {
      std::vector<Projector> context;
      for (std::size_t p = 0; p < projectors.size(); ++p) {
        if (p != *split) {
          context.push_back(projectors[p]);
        }
      }
      auto [first, second, record] = split_dynamically(projectors[*split], pool, context);
      projectors[*split] = first;
      projectors.insert(projectors.begin() + static_cast<std::ptrdiff_t>(*split) + 1, second);
      ++diag.dynamic_ancillas;
      continue;
    }
    if (!grow()) {
      return result;
    }
  }
}

bool verify_layout(const Layout& layout, const ProjectorSet& set) {
  const std::size_t n = layout.num_physical();
  if (layout.num_terms != set.num_terms || layout.ancillas != set.ancillas || layout.pinned != set.pinned ||
      layout.positions.size() != n) {
    return false;
  }
  for (std::size_t i = 0; i < layout.dynamical_ancillas.size(); ++i) {
    const auto& a = layout.dynamical_ancillas[i];
    if (a.physical_index != set.num_physical + i || a.definition.empty()) {
      return false;
    }
  }
  std::vector<bool> pinned(n, false);
  for (const auto& pin : layout.pinned) {
    pinned[pin.qubit] = true;
  }
  std::set<Site> occupied;
  for (std::size_t q = 0; q < n; ++q) {
    const auto& p = layout.positions[q];
    if (pinned[q] != !p.has_value()) {
      return false;
    }
    if (p && (p->row >= layout.height || p->col >= layout.width || !occupied.insert(*p).second)) {
      return false;
    }
  }

  std::set<Site> cells;
  for (const auto& pl : layout.plaquettes) {
    const std::size_t expected = pl.kind == PlaquetteKind::edge ? 2 : pl.kind == PlaquetteKind::triangle ? 3 : 4;
    if (pl.qubits.size() != expected || !std::is_sorted(pl.qubits.begin(), pl.qubits.end()) ||
        std::adjacent_find(pl.qubits.begin(), pl.qubits.end()) != pl.qubits.end()) {
      return false;
    }
    for (auto q : pl.qubits) {
      if (q >= n || !layout.positions[q]) {
        return false;
      }
    }
    if (pl.kind == PlaquetteKind::edge) {
      if (!sites_adjacent(*layout.positions[pl.qubits[0]], *layout.positions[pl.qubits[1]])) {
        return false;
      }
      continue;
    }
    if (pl.cell.row + 1 >= layout.height || pl.cell.col + 1 >= layout.width || !cells.insert(pl.cell).second) {
      return false;
    }
    for (auto q : pl.qubits) {
      const Site s = *layout.positions[q];
      if (s.row - pl.cell.row > 1 || s.col - pl.cell.col > 1 || s.row < pl.cell.row || s.col < pl.cell.col) {
        return false;
      }
    }
  }

  if (layout.plaquettes.size() != set.projectors.size() + layout.dynamical_ancillas.size()) {
    return false;
  }
  auto augmented = [n](const Projector& p) {
    gf2::BitVector row(n + 1);
    for (auto q : p.qubits) {
      row.flip(q);
    }
    row.set(n, p.odd);
    return row;
  };
  gf2::BitMatrix plaquette_rows(0, n + 1);
  for (const auto& pl : layout.plaquettes) {
    plaquette_rows.append_row(augmented(pl.projector()));
  }
  const std::size_t r = gf2::rank(plaquette_rows);
  if (r != layout.plaquettes.size()) {
    return false;
  }
  gf2::BitMatrix both = plaquette_rows;
  for (const auto& p : set.projectors) {
    for (auto q : p.qubits) {
      if (q >= set.num_physical) {
        return false;
      }
    }
    both.append_row(augmented(p));
  }
  return gf2::rank(both) == r;
}

}  // namespace parity
