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

#include "parity/projector.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace parity {

using gf2::BitMatrix;
using gf2::BitVector;

namespace {

// A candidate row: homogeneous part over the K term qubits plus its parity.
struct Candidate {
  BitVector bits;
  bool odd = false;
  std::size_t weight = 0;
  std::size_t order = 0;
};

struct Reduction {
  std::vector<Candidate> rows;
  bool all_in_range = false;
};

// Greedy independent selection over combinations of up to three generators.
// With `complete` set, rows outside [min_w, max_w] fill any remaining rank.
Reduction reduce_rows(const std::vector<Candidate>& input, std::size_t min_w, std::size_t max_w,
                      std::size_t budget, bool complete) {
  const std::size_t width = input.empty() ? 0 : input.front().bits.size();
  gf2::IncrementalBasis full(width);
  for (const auto& r : input) {
    full.insert(r.bits);
  }
  const std::size_t target_rank = full.rank();

  std::vector<Candidate> generators = input;
  Reduction best;
  std::size_t best_outside = std::numeric_limits<std::size_t>::max();

  for (int round = 0; round < 4; ++round) {
    // Add reduced echelon rows of the current generators as extra generators.
    {
      BitMatrix m(0, width + 1);
      for (const auto& g : generators) {
        BitVector aug = g.bits.resized(width + 1);
        aug.set(width, g.odd);
        m.append_row(std::move(aug));
      }
      const auto reduced = gf2::rref(m, width);
      for (std::size_t i = 0; i < reduced.pivots.size(); ++i) {
        const auto& row = reduced.matrix.row(i);
        Candidate c{row.slice(0, width), row.get(width), 0, 0};
        c.weight = c.bits.popcount();
        const bool duplicate = std::any_of(generators.begin(), generators.end(),
                                           [&](const Candidate& g) { return g.bits == c.bits; });
        if (!duplicate) {
          generators.push_back(std::move(c));
        }
      }
    }

    std::vector<Candidate> candidates;
    std::size_t evaluations = 0;
    auto consider = [&](BitVector bits, bool odd) {
      ++evaluations;
      const std::size_t w = bits.popcount();
      if (w == 0) {
        return;
      }
      candidates.push_back({std::move(bits), odd, w, candidates.size()});
    };
    const std::size_t g = generators.size();
    for (std::size_t i = 0; i < g; ++i) {
      consider(generators[i].bits, generators[i].odd);
    }
    for (std::size_t i = 0; i < g && evaluations < budget; ++i) {
      for (std::size_t j = i + 1; j < g && evaluations < budget; ++j) {
        consider(generators[i].bits ^ generators[j].bits, generators[i].odd != generators[j].odd);
      }
    }
    for (std::size_t i = 0; i < g && evaluations < budget; ++i) {
      for (std::size_t j = i + 1; j < g && evaluations < budget; ++j) {
        const BitVector ij = generators[i].bits ^ generators[j].bits;
        const bool odd_ij = generators[i].odd != generators[j].odd;
        for (std::size_t l = j + 1; l < g && evaluations < budget; ++l) {
          consider(ij ^ generators[l].bits, odd_ij != generators[l].odd);
        }
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      return a.weight < b.weight;
    });

    Reduction result;
    gf2::IncrementalBasis chosen(width);
    for (const auto& c : candidates) {
      if (c.weight >= min_w && c.weight <= max_w && chosen.insert(c.bits)) {
        result.rows.push_back(c);
      }
    }
    result.all_in_range = chosen.rank() == target_rank;
    if (!result.all_in_range && complete) {
      for (const auto& c : candidates) {
        if (chosen.insert(c.bits)) {
          result.rows.push_back(c);
        }
      }
    }
    std::size_t outside_count = result.all_in_range ? 0 : target_rank - chosen.rank();
    for (const auto& r : result.rows) {
      outside_count += (r.weight < min_w || r.weight > max_w) ? 1 : 0;
    }
    if (outside_count < best_outside) {
      best_outside = outside_count;
      best = result;
    } else {
      break;
    }
    if (best.all_in_range) {
      break;
    }
    generators.clear();
    for (const auto& r : best.rows) {
      generators.push_back(r);
    }
  }
  return best;
}

std::vector<Candidate> to_candidates(const BitMatrix& check, const BitVector& offset) {
  std::vector<Candidate> rows;
  for (std::size_t r = 0; r < check.rows(); ++r) {
    rows.push_back({check.row(r), offset.get(r), check.row(r).popcount(), r});
  }
  return rows;
}

std::pair<std::size_t, std::size_t> most_shared_pair(const Projector& row, std::span<const Projector> context) {
  std::pair<std::size_t, std::size_t> best{row.qubits[0], row.qubits[1]};
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < row.qubits.size(); ++i) {
    for (std::size_t j = i + 1; j < row.qubits.size(); ++j) {
      const std::size_t a = row.qubits[i];
      const std::size_t b = row.qubits[j];
      std::size_t count = 0;
      for (const auto& p : context) {
        const bool has_a = std::binary_search(p.qubits.begin(), p.qubits.end(), a);
        const bool has_b = std::binary_search(p.qubits.begin(), p.qubits.end(), b);
        count += (has_a && has_b) ? 1 : 0;
      }
      if (count > best_count) {
        best_count = count;
        best = {a, b};
      }
    }
  }
  return best;
}

}  // namespace

AncillaPool::AncillaPool(std::size_t num_terms, std::vector<AncillaRecord> existing)
    : num_terms_(num_terms), records_(std::move(existing)) {}

std::vector<std::size_t> AncillaPool::expand(std::size_t physical) const {
  if (physical < num_terms_) {
    return {physical};
  }
  const std::size_t slot = physical - num_terms_;
  if (slot >= records_.size()) {
    throw std::out_of_range("unknown ancilla index");
  }
  return records_[slot].definition;
}

std::size_t AncillaPool::create(std::span<const std::size_t> factors) {
  BitVector product(num_terms_);
  for (auto f : factors) {
    for (auto original : expand(f)) {
      product.flip(original);
    }
  }
  const std::size_t index = num_physical();
  records_.push_back({index, product.ones()});
  return index;
}

std::pair<Projector, Projector> split_with_ancilla(const Projector& row, std::span<const std::size_t> head,
                                                   AncillaPool& pool) {
  if (head.empty() || head.size() >= row.size()) {
    throw std::invalid_argument("split head must be a proper nonempty subset of the row");
  }
  Projector first;
  Projector second;
  for (auto q : row.qubits) {
    const bool in_head = std::find(head.begin(), head.end(), q) != head.end();
    (in_head ? first : second).qubits.push_back(q);
  }
  if (first.size() != head.size()) {
    throw std::invalid_argument("split head must be drawn from the row");
  }
  const std::size_t anc = pool.create(first.qubits);
  first.qubits.push_back(anc);
  second.qubits.push_back(anc);
  std::sort(first.qubits.begin(), first.qubits.end());
  std::sort(second.qubits.begin(), second.qubits.end());
  second.odd = row.odd;
  return {std::move(first), std::move(second)};
}

std::vector<Projector> split_to_length(const Projector& row, std::size_t max_w, ProjectorMode mode,
                                       std::span<const Projector> context, AncillaPool& pool) {
  if (max_w < 3) {
    throw std::invalid_argument("cannot split projectors below length 3");
  }
  std::vector<Projector> out;
  Projector rest = row;
  while (rest.size() > max_w) {
    std::vector<std::size_t> head;
    if (mode == ProjectorMode::plaquette) {
      const auto [a, b] = most_shared_pair(rest, context);
      head = {a, b};
    } else {
      head.assign(rest.qubits.begin(), rest.qubits.begin() + static_cast<std::ptrdiff_t>(max_w - 1));
    }
    auto [first, second] = split_with_ancilla(rest, head, pool);
    out.push_back(std::move(first));
    rest = std::move(second);
  }
  out.push_back(std::move(rest));
  return out;
}

std::optional<BitMatrix> reduce_weights(const BitMatrix& check, std::size_t min_w, std::size_t max_w,
                                        std::size_t budget) {
  const auto result = reduce_rows(to_candidates(check, BitVector(check.rows())), min_w, max_w, budget, false);
  if (!result.all_in_range) {
    return std::nullopt;
  }
  BitMatrix out(0, check.cols());
  for (const auto& r : result.rows) {
    out.append_row(r.bits);
  }
  return out;
}

ProjectorSet build_projector_set(const BitMatrix& check, const BitVector& offset, const ProjectorOptions& options) {
  if (offset.size() != check.rows()) {
    throw std::invalid_argument("one offset bit per check row is required");
  }
  const std::size_t max_w = options.mode == ProjectorMode::plaquette ? 4 : options.max_len;
  if (max_w < 3) {
    throw std::invalid_argument("max_len must be at least 3 to admit ancilla splits");
  }
  ProjectorSet set;
  set.num_terms = check.cols();

  auto rows = reduce_rows(to_candidates(check, offset), 1, max_w, options.budget, true).rows;

  // Pinned qubits are substituted into every other row; this may pin more.
  std::vector<bool> is_pinned(set.num_terms, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].weight != 1) {
        continue;
      }
      const std::size_t q = rows[i].bits.find_next(0);
      if (is_pinned[q]) {
        continue;
      }
      is_pinned[q] = true;
      set.pinned.push_back({q, rows[i].odd});
      changed = true;
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (j != i && rows[j].bits.get(q)) {
          rows[j].bits.flip(q);
          rows[j].odd = rows[j].odd != rows[i].odd;
          rows[j].weight -= 1;
        }
      }
    }
  }

  std::vector<Projector> short_rows;
  std::vector<Projector> long_rows;
  for (const auto& r : rows) {
    if (r.weight == 1) {
      continue;
    }
    Projector p{r.bits.ones(), r.odd};
    (r.weight <= max_w ? short_rows : long_rows).push_back(std::move(p));
  }

  AncillaPool pool(set.num_terms);
  std::vector<Projector> context = short_rows;
  context.insert(context.end(), long_rows.begin(), long_rows.end());
  set.projectors = short_rows;
  for (const auto& row : long_rows) {
    for (auto& piece : split_to_length(row, max_w, options.mode, context, pool)) {
      set.projectors.push_back(std::move(piece));
    }
  }
  std::sort(set.pinned.begin(), set.pinned.end(),
            [](const PinnedQubit& a, const PinnedQubit& b) { return a.qubit < b.qubit; });
  set.ancillas = pool.records();
  set.num_physical = pool.num_physical();
  return set;
}

ProjectorSet build_projector_set(const BitMatrix& check, const ProjectorOptions& options) {
  return build_projector_set(check, BitVector(check.rows()), options);
}

BitVector extend_with_ancillas(const BitVector& w, std::size_t num_physical, std::span<const AncillaRecord> ancillas) {
  BitVector out = w.resized(num_physical);
  for (const auto& a : ancillas) {
    bool value = false;
    for (auto q : a.definition) {
      value ^= w.get(q);
    }
    out.set(a.physical_index, value);
  }
  return out;
}

bool satisfies(const Projector& projector, const BitVector& bits) {
  bool parity = false;
  for (auto q : projector.qubits) {
    parity ^= bits.get(q);
  }
  return parity == projector.odd;
}

}  // namespace parity
