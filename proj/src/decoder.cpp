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

#include "parity/decoder.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace parity {

namespace {

constexpr std::size_t kForwardAttempts = 16;

std::vector<std::size_t> shuffled_keys(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = i;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }
  std::vector<std::size_t> key(n);
  for (std::size_t i = 0; i < n; ++i) {
    key[order[i]] = i;
  }
  return key;
}

struct Marking {
  std::vector<bool> marked;
  ReadoutSet set;

  explicit Marking(const PhysicalConstraints& c) : marked(c.num_physical, false) {
    for (const auto& pin : c.pinned) {
      marked[pin.qubit] = true;
      set.determined.push_back({pin.qubit, std::nullopt});
    }
  }

  std::size_t unmarked(const Projector& p) const {
    return static_cast<std::size_t>(std::count_if(p.qubits.begin(), p.qubits.end(), [&](std::size_t q) {
      return !marked[q];
    }));
  }

  void use(const Projector& p, std::size_t index, std::size_t determined) {
    for (auto q : p.qubits) {
      if (!marked[q] && q != determined) {
        marked[q] = true;
        set.read_out.push_back(q);
      }
    }
    marked[determined] = true;
    set.determined.push_back({determined, index});
  }

  void use_highest(const Projector& p, std::size_t index) {
    std::size_t last = 0;
    bool found = false;
    for (auto q : p.qubits) {
      if (!marked[q]) {
        last = q;
        found = true;
      }
    }
    if (found) {
      use(p, index, last);
    }
  }

  ReadoutSet finish() {
    for (std::size_t q = 0; q < marked.size(); ++q) {
      if (!marked[q]) {
        marked[q] = true;
        set.read_out.push_back(q);
      }
    }
    return std::move(set);
  }
};

ReadoutSet forward_traversal(const PhysicalConstraints& c, std::size_t start, std::uint64_t seed) {
  const auto& couplers = c.couplers;
  const auto key = shuffled_keys(couplers.size(), seed);
  Marking m(c);
  std::vector<bool> visited(couplers.size(), false);
  std::vector<bool> touched(c.num_physical, false);
  std::size_t p = start;
  while (true) {
    visited[p] = true;
    m.use_highest(couplers[p], p);
    for (auto q : couplers[p].qubits) {
      touched[q] = true;
    }
    std::optional<std::size_t> next;
    bool next_adjacent = false;
    std::size_t next_unmarked = 0;
    for (std::size_t i = 0; i < couplers.size(); ++i) {
      if (visited[i]) {
        continue;
      }
      const std::size_t u = m.unmarked(couplers[i]);
      if (u == 0) {
        continue;
      }
      const bool adjacent = std::any_of(couplers[i].qubits.begin(), couplers[i].qubits.end(),
                                        [&](std::size_t q) { return touched[q]; });
      const bool better = !next || (adjacent && !next_adjacent) ||
                          (adjacent == next_adjacent &&
                           (u < next_unmarked || (u == next_unmarked && key[i] < key[*next])));
      if (better) {
        next = i;
        next_adjacent = adjacent;
        next_unmarked = u;
      }
    }
    if (!next) {
      break;
    }
    p = *next;
  }
  return m.finish();
}

// Reverse peeling: repeatedly remove a coupler owning a qubit no other
// remaining coupler touches. Succeeds whenever any complete order exists.
ReadoutSet peeling_order(const PhysicalConstraints& c, std::uint64_t seed) {
  const auto& couplers = c.couplers;
  const auto key = shuffled_keys(couplers.size(), seed);
  std::vector<bool> pinned(c.num_physical, false);
  for (const auto& pin : c.pinned) {
    pinned[pin.qubit] = true;
  }
  std::vector<std::size_t> count(c.num_physical, 0);
  for (const auto& p : couplers) {
    for (auto q : p.qubits) {
      ++count[q];
    }
  }
  std::vector<bool> removed(couplers.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> order;
  while (true) {
    std::optional<std::size_t> pick;
    std::size_t owned = 0;
    for (std::size_t i = 0; i < couplers.size(); ++i) {
      if (removed[i] || (pick && key[i] > key[*pick])) {
        continue;
      }
      for (auto q : couplers[i].qubits) {
        if (count[q] == 1 && !pinned[q]) {
          pick = i;
          owned = q;
        }
      }
    }
    if (!pick) {
      break;
    }
    removed[*pick] = true;
    for (auto q : couplers[*pick].qubits) {
      --count[q];
    }
    order.emplace_back(*pick, owned);
  }
  Marking m(c);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    m.use(couplers[it->first], it->first, it->second);
  }
  return m.finish();
}

}  // namespace

PhysicalConstraints physical_constraints(const Layout& layout) {
  return {layout.num_physical(), coupling_projectors(layout), layout.pinned};
}

PhysicalConstraints physical_constraints(const ContiguousLayout& layout) {
  return {layout.layout.num_physical(), layout.projectors, layout.layout.pinned};
}

std::size_t ReadoutSet::couplers_used() const {
  return static_cast<std::size_t>(
      std::count_if(determined.begin(), determined.end(), [](const Determination& d) { return d.coupler.has_value(); }));
}

bool DecodeResult::any_tie() const { return std::find(tied.begin(), tied.end(), true) != tied.end(); }

std::size_t physical_syndrome_weight(const PhysicalConstraints& constraints, const gf2::BitVector& w) {
  if (w.size() != constraints.num_physical) {
    throw std::invalid_argument("bit-string length does not match the physical qubit count");
  }
  std::size_t weight = 0;
  for (const auto& p : constraints.couplers) {
    weight += satisfies(p, w) ? 0 : 1;
  }
  for (const auto& pin : constraints.pinned) {
    weight += w.get(pin.qubit) == pin.value ? 0 : 1;
  }
  return weight;
}

ReadoutSet build_readout_set(const PhysicalConstraints& constraints, std::size_t start, std::uint64_t seed) {
  if (constraints.couplers.empty()) {
    return Marking(constraints).finish();
  }
  if (start >= constraints.couplers.size()) {
    throw std::out_of_range("start coupler index out of range");
  }
  std::mt19937_64 derive(seed);
  ReadoutSet best;
  bool have_best = false;
  for (std::size_t attempt = 0; attempt < kForwardAttempts; ++attempt) {
    auto set = forward_traversal(constraints, start, attempt == 0 ? seed : derive());
    if (set.couplers_used() == constraints.couplers.size()) {
      return set;
    }
    if (!have_best || set.couplers_used() > best.couplers_used()) {
      best = std::move(set);
      have_best = true;
    }
  }
  auto peeled = peeling_order(constraints, seed);
  return peeled.couplers_used() > best.couplers_used() ? peeled : best;
}

bool readout_set_valid(const ReadoutSet& set, const PhysicalConstraints& constraints) {
  const std::size_t n = constraints.num_physical;
  std::vector<int> state(n, 0);  // 0 unseen, 1 read out, 2 determined
  for (auto q : set.read_out) {
    if (q >= n || state[q] != 0) {
      return false;
    }
    state[q] = 1;
  }
  std::vector<bool> known(n, false);
  for (std::size_t q = 0; q < n; ++q) {
    known[q] = state[q] == 1;
  }
  for (const auto& d : set.determined) {
    if (d.qubit >= n || state[d.qubit] != 0) {
      return false;
    }
    state[d.qubit] = 2;
    if (!d.coupler) {
      const bool is_pinned = std::any_of(constraints.pinned.begin(), constraints.pinned.end(),
                                         [&](const PinnedQubit& p) { return p.qubit == d.qubit; });
      if (!is_pinned) {
        return false;
      }
    } else {
      if (*d.coupler >= constraints.couplers.size()) {
        return false;
      }
      const auto& qs = constraints.couplers[*d.coupler].qubits;
      if (!std::binary_search(qs.begin(), qs.end(), d.qubit)) {
        return false;
      }
      for (auto q : qs) {
        if (q != d.qubit && !known[q]) {
          return false;
        }
      }
    }
    known[d.qubit] = true;
  }
  return std::all_of(state.begin(), state.end(), [](int s) { return s != 0; });
}

gf2::BitVector reconstruct(const ReadoutSet& set, const PhysicalConstraints& constraints, const gf2::BitVector& w) {
  gf2::BitVector out(constraints.num_physical);
  for (auto q : set.read_out) {
    out.set(q, w.get(q));
  }
  for (const auto& d : set.determined) {
    if (!d.coupler) {
      for (const auto& pin : constraints.pinned) {
        if (pin.qubit == d.qubit) {
          out.set(d.qubit, pin.value);
        }
      }
      continue;
    }
    const auto& p = constraints.couplers[*d.coupler];
    bool value = p.odd;
    for (auto q : p.qubits) {
      if (q != d.qubit) {
        value ^= out.get(q);
      }
    }
    out.set(d.qubit, value);
  }
  return out;
}

DecodeResult correct_and_decode(const ParityCode& code, const PhysicalConstraints& constraints,
                                const gf2::BitVector& w, std::size_t num_sets, std::uint64_t seed) {
  if (num_sets == 0) {
    throw std::invalid_argument("at least one readout set is required");
  }
  const std::size_t k = code.num_terms();
  if (constraints.num_physical < k) {
    throw std::invalid_argument("fewer physical qubits than terms");
  }
  DecodeResult result;
  result.syndrome_weight = physical_syndrome_weight(constraints, w);
  result.num_sets = num_sets;
  std::vector<std::size_t> ones(code.num_logical, 0);
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < num_sets; ++s) {
    const std::size_t start = constraints.couplers.empty() ? 0 : rng() % constraints.couplers.size();
    const auto set = build_readout_set(constraints, start, rng());
    const auto full = reconstruct(set, constraints, w);
    const auto logical = decode(code, full.slice(0, k));
    for (std::size_t i = 0; i < code.num_logical; ++i) {
      ones[i] += logical.get(i) ? 1 : 0;
    }
  }
  result.logical = gf2::BitVector(code.num_logical);
  result.tied.assign(code.num_logical, false);
  for (std::size_t i = 0; i < code.num_logical; ++i) {
    if (2 * ones[i] > num_sets) {
      result.logical.set(i);
    } else if (2 * ones[i] == num_sets) {
      result.tied[i] = true;
    }
  }
  return result;
}

}  // namespace parity
