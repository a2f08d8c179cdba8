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

#include "parity/cnot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace parity {

namespace {

constexpr long kNone = -1;

std::vector<std::vector<Site>> grow_polyominoes(std::size_t size) {
  std::set<std::vector<Site>> current{{Site{0, 0}}};
  for (std::size_t n = 1; n < size; ++n) {
    std::set<std::vector<Site>> next;
    for (const auto& shape : current) {
      for (const auto& cell : shape) {
        const long r = static_cast<long>(cell.row);
        const long c = static_cast<long>(cell.col);
        const long moves[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
        for (const auto& m : moves) {
          std::vector<std::pair<long, long>> cells;
          for (const auto& s : shape) {
            cells.emplace_back(static_cast<long>(s.row), static_cast<long>(s.col));
          }
          const std::pair<long, long> added{r + m[0], c + m[1]};
          if (std::find(cells.begin(), cells.end(), added) != cells.end()) {
            continue;
          }
          cells.push_back(added);
          long min_r = cells[0].first;
          long min_c = cells[0].second;
          for (const auto& [rr, cc] : cells) {
            min_r = std::min(min_r, rr);
            min_c = std::min(min_c, cc);
          }
          std::vector<Site> normalized;
          for (const auto& [rr, cc] : cells) {
            normalized.push_back({static_cast<std::size_t>(rr - min_r), static_cast<std::size_t>(cc - min_c)});
          }
          std::sort(normalized.begin(), normalized.end());
          next.insert(std::move(normalized));
        }
      }
    }
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

struct Candidate {
  std::vector<std::pair<std::size_t, std::size_t>> assign;  // (qubit, site)
};

class ContiguousSearch {
 public:
  ContiguousSearch(const std::vector<Projector>& projectors, const std::vector<bool>& active, std::size_t h,
                   std::size_t w, const ContiguousOptions& options)
      : projectors_(projectors),
        active_(active),
        h_(h),
        w_(w),
        budget_(options.budget),
        max_candidates_(std::max<std::size_t>(1, options.max_candidates)),
        occ_(h * w, kNone),
        pos_(active.size(), kNone),
        done_(projectors.size(), 0),
        rank_(projectors.size()),
        failures(projectors.size(), 0) {
    std::vector<std::size_t> order(projectors.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng() % i]);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      rank_[order[i]] = i;
    }
  }

  bool run() { return dfs(0); }
  [[nodiscard]] std::size_t nodes() const { return nodes_; }
  [[nodiscard]] std::optional<Site> position(std::size_t q) const {
    if (pos_[q] == kNone) {
      return std::nullopt;
    }
    return site_of(static_cast<std::size_t>(pos_[q]));
  }

 private:
  const std::vector<Projector>& projectors_;
  const std::vector<bool>& active_;
  std::size_t h_;
  std::size_t w_;
  std::size_t budget_;
  std::size_t max_candidates_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<long> occ_;
  std::vector<long> pos_;
  std::vector<char> done_;
  std::vector<std::size_t> rank_;

 public:
  std::vector<std::size_t> failures;

 private:
  [[nodiscard]] Site site_of(std::size_t s) const { return {s / w_, s % w_}; }
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

  // Connected site sets of the projector's size that contain its placed
  // qubits and are otherwise free.
  std::set<std::vector<std::size_t>> site_sets(const Projector& proj, const std::vector<std::size_t>& placed) const {
    const std::size_t size = proj.size();
    auto allowed = [&](std::size_t s) {
      return occ_[s] == kNone || std::find(placed.begin(), placed.end(), s) != placed.end();
    };
    auto contains_placed = [&](const std::vector<std::size_t>& set) {
      return std::all_of(placed.begin(), placed.end(),
                         [&](std::size_t s) { return std::binary_search(set.begin(), set.end(), s); });
    };
    std::set<std::vector<std::size_t>> out;

    if (size <= 4) {
      const bool first = placed.empty() && nothing_placed();
      for (const auto& shape : polyomino_shapes(size)) {
        std::size_t bh = 0;
        std::size_t bw = 0;
        for (const auto& s : shape) {
          bh = std::max(bh, s.row + 1);
          bw = std::max(bw, s.col + 1);
        }
        if (bh > h_ || bw > w_) {
          continue;
        }
        std::vector<std::pair<std::size_t, std::size_t>> offsets;
        if (!placed.empty()) {
          const Site a = site_of(placed[0]);
          for (const auto& s : shape) {
            if (a.row >= s.row && a.col >= s.col && a.row - s.row + bh <= h_ && a.col - s.col + bw <= w_) {
              offsets.emplace_back(a.row - s.row, a.col - s.col);
            }
          }
        } else {
          for (std::size_t r = 0; r + bh <= h_; ++r) {
            for (std::size_t c = 0; c + bw <= w_; ++c) {
              if (first && (2 * r > h_ - bh || 2 * c > w_ - bw)) {
                continue;
              }
              offsets.emplace_back(r, c);
            }
          }
        }
        for (const auto& [r0, c0] : offsets) {
          std::vector<std::size_t> sites;
          for (const auto& s : shape) {
            sites.push_back((r0 + s.row) * w_ + c0 + s.col);
          }
          std::sort(sites.begin(), sites.end());
          if (std::all_of(sites.begin(), sites.end(), allowed) && contains_placed(sites)) {
            out.insert(std::move(sites));
          }
        }
      }
      return out;
    }

    std::set<std::vector<std::size_t>> seen;
    const std::size_t cap = max_candidates_;
    auto grow = [&](auto&& self, std::vector<std::size_t>& set) -> void {
      if (out.size() >= cap || seen.size() >= 20 * cap) {
        return;
      }
      if (set.size() == size) {
        if (contains_placed(set)) {
          out.insert(set);
        }
        return;
      }
      if (!seen.insert(set).second) {
        return;
      }
      std::set<std::size_t> frontier;
      for (auto s : set) {
        for (auto n : neighbours(s)) {
          if (allowed(n) && !std::binary_search(set.begin(), set.end(), n)) {
            frontier.insert(n);
          }
        }
      }
      for (auto n : frontier) {
        auto next = set;
        next.insert(std::upper_bound(next.begin(), next.end(), n), n);
        self(self, next);
      }
    };
    if (!placed.empty()) {
      std::vector<std::size_t> seed{placed[0]};
      grow(grow, seed);
    } else {
      for (std::size_t s = 0; s < h_ * w_ && out.size() < cap; ++s) {
        if (allowed(s)) {
          std::vector<std::size_t> seed{s};
          grow(grow, seed);
        }
      }
    }
    return out;
  }

  std::vector<Candidate> candidates(std::size_t p) const {
    const auto& proj = projectors_[p];
    std::vector<std::size_t> placed;
    std::vector<std::size_t> unplaced;
    for (auto q : proj.qubits) {
      if (pos_[q] == kNone) {
        unplaced.push_back(q);
      } else {
        placed.push_back(static_cast<std::size_t>(pos_[q]));
      }
    }
    std::vector<Candidate> out;
    for (const auto& set : site_sets(proj, placed)) {
      std::vector<std::size_t> fresh;
      for (auto s : set) {
        if (std::find(placed.begin(), placed.end(), s) == placed.end()) {
          fresh.push_back(s);
        }
      }
      std::vector<std::size_t> perm = unplaced;
      do {
        Candidate c;
        for (std::size_t i = 0; i < perm.size(); ++i) {
          c.assign.emplace_back(perm[i], fresh[i]);
        }
        out.push_back(std::move(c));
        if (out.size() >= max_candidates_) {
          return out;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
  }

  void apply(const Candidate& c, std::size_t p) {
    for (auto [q, s] : c.assign) {
      occ_[s] = static_cast<long>(q);
      pos_[q] = static_cast<long>(s);
    }
    done_[p] = 1;
  }

  void undo(const Candidate& c, std::size_t p) {
    for (auto [q, s] : c.assign) {
      occ_[s] = kNone;
      pos_[q] = kNone;
    }
    done_[p] = 0;
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
    std::optional<std::size_t> chosen;
    std::vector<Candidate> chosen_candidates;
    for (std::size_t p = 0; p < projectors_.size(); ++p) {
      if (done_[p]) {
        continue;
      }
      const bool touched = std::any_of(projectors_[p].qubits.begin(), projectors_[p].qubits.end(),
                                       [&](std::size_t q) { return pos_[q] != kNone; });
      if (!touched) {
        continue;
      }
      auto cands = candidates(p);
      if (cands.empty()) {
        ++failures[p];
        return false;
      }
      if (!chosen || cands.size() < chosen_candidates.size() ||
          (cands.size() == chosen_candidates.size() && rank_[p] < rank_[*chosen])) {
        chosen = p;
        chosen_candidates = std::move(cands);
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

void format_angle(std::string& out, double angle) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, angle);
  out.append(buffer, result.ptr);
}

}  // namespace

const std::vector<std::vector<Site>>& polyomino_shapes(std::size_t size) {
  static const std::vector<std::vector<std::vector<Site>>> table = [] {
    std::vector<std::vector<std::vector<Site>>> t(5);
    for (std::size_t n = 1; n <= 4; ++n) {
      t[n] = grow_polyominoes(n);
    }
    return t;
  }();
  if (size == 0 || size >= table.size()) {
    throw std::invalid_argument("polyomino shapes are tabulated for sizes 1 to 4");
  }
  return table[size];
}

bool sites_connected(std::span<const Site> sites) {
  if (sites.empty()) {
    return true;
  }
  std::vector<bool> reached(sites.size(), false);
  std::deque<std::size_t> queue{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < sites.size(); ++j) {
      if (!reached[j] && sites_adjacent(sites[i], sites[j])) {
        reached[j] = true;
        ++count;
        queue.push_back(j);
      }
    }
  }
  return count == sites.size();
}

std::optional<ProjectorTree> build_tree(const Projector& projector, std::size_t index,
                                        std::span<const std::optional<Site>> positions) {
  const auto& qs = projector.qubits;
  if (qs.empty()) {
    return std::nullopt;
  }
  for (auto q : qs) {
    if (q >= positions.size() || !positions[q]) {
      return std::nullopt;
    }
  }
  auto adjacent = [&](std::size_t a, std::size_t b) { return sites_adjacent(*positions[a], *positions[b]); };
  std::size_t root = qs[0];
  std::size_t best_degree = 0;
  for (auto q : qs) {
    std::size_t degree = 0;
    for (auto r : qs) {
      degree += adjacent(q, r) ? 1 : 0;
    }
    if (degree > best_degree) {
      best_degree = degree;
      root = q;
    }
  }
  ProjectorTree tree;
  tree.projector = index;
  tree.root = root;
  std::map<std::size_t, std::size_t> depth{{root, 0}};
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    const std::size_t parent = queue.front();
    queue.pop_front();
    for (auto q : qs) {
      if (!depth.count(q) && adjacent(q, parent)) {
        depth[q] = depth[parent] + 1;
        tree.edges.emplace_back(q, parent);
        tree.depths.push_back(depth[q]);
        queue.push_back(q);
      }
    }
  }
  if (depth.size() != qs.size()) {
    return std::nullopt;
  }
  return tree;
}

ContiguousResult lay_out_contiguous(const ProjectorSet& set, const ContiguousOptions& options) {
  for (const auto& p : set.projectors) {
    if (p.size() == 0) {
      throw std::invalid_argument("empty projector");
    }
  }
  ContiguousResult result;
  auto& diag = result.diagnostics;
  std::vector<bool> active(set.num_physical, true);
  for (const auto& pin : set.pinned) {
    active[pin.qubit] = false;
  }
  const std::size_t needed = std::count(active.begin(), active.end(), true);
  std::size_t side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(needed)))) + 1;
  std::size_t h = side;
  std::size_t w = side;
  for (std::size_t growth = 0;; ++growth) {
    diag.height = h;
    diag.width = w;
    ++diag.attempts;
    ContiguousSearch search(set.projectors, active, h, w, options);
    const bool found = search.run();
    diag.nodes += search.nodes();
    if (found) {
      Layout layout;
      layout.height = h;
      layout.width = w;
      layout.num_terms = set.num_terms;
      layout.ancillas = set.ancillas;
      layout.pinned = set.pinned;
      for (std::size_t q = 0; q < set.num_physical; ++q) {
        layout.positions.push_back(active[q] ? search.position(q) : std::nullopt);
      }
      ContiguousLayout out;
      out.layout = cropped(std::move(layout));
      out.projectors = set.projectors;
      for (std::size_t p = 0; p < set.projectors.size(); ++p) {
        out.trees.push_back(*build_tree(set.projectors[p], p, out.layout.positions));
      }
      result.layout = std::move(out);
      return result;
    }
    std::optional<std::size_t> worst;
    for (std::size_t p = 0; p < set.projectors.size(); ++p) {
      if (search.failures[p] > 0 && (!worst || search.failures[p] > search.failures[*worst])) {
        worst = p;
      }
    }
    if (worst) {
      diag.hardest = set.projectors[*worst];
      diag.hardest_failures = search.failures[*worst];
    }
    if (growth >= options.max_grid_growth) {
      return result;
    }
    (growth % 2 == 0 ? w : h) += 1;
  }
}

bool verify_contiguous(const ContiguousLayout& layout, const ProjectorSet& set) {
  const auto& l = layout.layout;
  if (l.num_terms != set.num_terms || l.ancillas != set.ancillas || l.pinned != set.pinned ||
      !l.dynamical_ancillas.empty() || !l.plaquettes.empty() || l.positions.size() != set.num_physical ||
      layout.projectors != set.projectors || layout.trees.size() != set.projectors.size()) {
    return false;
  }
  std::vector<bool> pinned(set.num_physical, false);
  for (const auto& pin : l.pinned) {
    pinned[pin.qubit] = true;
  }
  std::set<Site> occupied;
  for (std::size_t q = 0; q < set.num_physical; ++q) {
    const auto& p = l.positions[q];
    if (pinned[q] != !p.has_value()) {
      return false;
    }
    if (p && (p->row >= l.height || p->col >= l.width || !occupied.insert(*p).second)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < layout.trees.size(); ++i) {
    const auto& tree = layout.trees[i];
    const auto& qs = set.projectors[i].qubits;
    if (tree.projector != i || tree.edges.size() + 1 != qs.size() || tree.depths.size() != tree.edges.size() ||
        !std::binary_search(qs.begin(), qs.end(), tree.root)) {
      return false;
    }
    std::set<std::size_t> reached{tree.root};
    for (const auto& [child, parent] : tree.edges) {
      if (!std::binary_search(qs.begin(), qs.end(), child) || !reached.count(parent) || reached.count(child) ||
          !sites_adjacent(*l.positions[child], *l.positions[parent])) {
        return false;
      }
      reached.insert(child);
    }
  }
  return true;
}

Circuit emit_circuit(std::span<const ProjectorTree> trees, std::span<const Projector> projectors,
                     std::span<const double> angles, std::size_t num_qubits) {
  if (angles.size() != trees.size()) {
    throw std::invalid_argument("one angle per projector tree is required");
  }
  Circuit circuit;
  circuit.num_qubits = num_qubits;
  for (std::size_t t = 0; t < trees.size(); ++t) {
    const auto& tree = trees[t];
    if (tree.projector >= projectors.size()) {
      throw std::invalid_argument("tree refers to an unknown projector");
    }
    std::vector<std::size_t> order(tree.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return tree.depths[a] > tree.depths[b]; });
    std::vector<Gate> down;
    for (auto i : order) {
      down.push_back({GateKind::cnot, tree.edges[i].first, tree.edges[i].second, 0.0});
    }
    const double alpha = projectors[tree.projector].odd ? -angles[t] : angles[t];
    circuit.gates.insert(circuit.gates.end(), down.begin(), down.end());
    circuit.gates.push_back({GateKind::rz, tree.root, tree.root, alpha});
    circuit.gates.insert(circuit.gates.end(), down.rbegin(), down.rend());
  }
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    for (std::size_t q : {circuit.gates[i].control, circuit.gates[i].target}) {
      if (q >= num_qubits) {
        throw std::invalid_argument("gate acts outside the register");
      }
    }
    circuit.moments.push_back({i});
  }
  return circuit;
}

Circuit schedule(const Circuit& circuit) {
  std::vector<std::size_t> last(circuit.num_qubits, 0);
  std::vector<std::size_t> moment(circuit.gates.size(), 0);
  std::size_t depth = 0;
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const auto& g = circuit.gates[i];
    std::size_t m = last[g.control];
    if (g.kind == GateKind::cnot) {
      m = std::max(m, last[g.target]);
    }
    moment[i] = m;
    last[g.control] = m + 1;
    if (g.kind == GateKind::cnot) {
      last[g.target] = m + 1;
    }
    depth = std::max(depth, m + 1);
  }
  Circuit out;
  out.num_qubits = circuit.num_qubits;
  out.moments.resize(depth);
  std::vector<std::size_t> order(circuit.gates.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return moment[a] < moment[b]; });
  for (auto i : order) {
    out.moments[moment[i]].push_back(out.gates.size());
    out.gates.push_back(circuit.gates[i]);
  }
  return out;
}

bool moments_valid(const Circuit& circuit) {
  std::size_t next = 0;
  for (const auto& layer : circuit.moments) {
    std::set<std::size_t> used;
    for (auto i : layer) {
      if (i != next++ || i >= circuit.gates.size()) {
        return false;
      }
      const auto& g = circuit.gates[i];
      if (!used.insert(g.control).second) {
        return false;
      }
      if (g.kind == GateKind::cnot && (g.target == g.control || !used.insert(g.target).second)) {
        return false;
      }
    }
  }
  return next == circuit.gates.size();
}

std::string to_qasm(const Circuit& circuit) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(circuit.num_qubits) + "];\n";
  for (const auto& g : circuit.gates) {
    if (g.kind == GateKind::cnot) {
      out += "cx q[" + std::to_string(g.control) + "],q[" + std::to_string(g.target) + "];\n";
    } else {
      out += "rz(";
      format_angle(out, g.angle);
      out += ") q[" + std::to_string(g.control) + "];\n";
    }
  }
  return out;
}

}  // namespace parity
