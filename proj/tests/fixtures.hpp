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

// Shared test inputs: the five-qubit example Hamiltonian with its reference
// generator, check and decoding matrices, and a seeded random problem source.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "parity/gf2.hpp"
#include "parity/problem.hpp"

namespace parity::testing {

inline constexpr const char* kFiveQubitProblemText =
    "# J12 s1 s2 + J15 s1 s5 + J24 s2 s4 + J45 s4 s5 + J123 s1 s2 s3 + J345 s3 s4 s5\n"
    "qubits 5\n"
    "term 1 2 : 1.0\n"
    "term 1 5 : 1.0\n"
    "term 2 4 : 1.0\n"
    "term 4 5 : 1.0\n"
    "term 1 2 3 : 1.0\n"
    "term 3 4 5 : 1.0\n";

inline LogicalProblem five_qubit_problem(std::vector<ProductConstraint> constraints = {}) {
  return LogicalProblem(5,
                        {{{0, 1}, 1.0}, {{0, 4}, 1.0}, {{1, 3}, 1.0}, {{3, 4}, 1.0}, {{0, 1, 2}, 1.0}, {{2, 3, 4}, 1.0}},
                        std::move(constraints));
}

inline gf2::BitMatrix reference_generator() {
  return {{1, 1, 0, 0, 1, 0},
          {1, 0, 1, 0, 1, 0},
          {0, 0, 0, 0, 1, 1},
          {0, 0, 1, 1, 0, 1},
          {0, 1, 0, 1, 0, 1}};
}

inline gf2::BitMatrix reference_check() {
  return {{1, 1, 1, 1, 0, 0},
          {1, 0, 0, 1, 1, 1}};
}

inline gf2::BitMatrix reference_decode() {
  return {{1, 0, 1, 1, 0, 0},
          {0, 0, 1, 1, 0, 0},
          {0, 0, 0, 1, 0, 1},
          {0, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 0, 0}};
}

// Same as reference_decode() with the second check row added to the first row.
inline gf2::BitMatrix reference_decode_variant() {
  return {{0, 0, 1, 0, 1, 1},
          {0, 0, 1, 1, 0, 0},
          {0, 0, 0, 1, 0, 1},
          {0, 0, 0, 1, 0, 0},
          {0, 0, 0, 0, 0, 0}};
}

// Decoding matrix for the same Hamiltonian with s1 s2 s4 = +1 imposed.
inline gf2::BitMatrix reference_constrained_decode() {
  return {{0, 0, 1, 0, 0, 0},
          {1, 0, 1, 0, 0, 0},
          {0, 0, 0, 1, 0, 1},
          {1, 0, 0, 0, 0, 0},
          {1, 0, 0, 1, 0, 0}};
}

inline ProductConstraint degeneracy_fixing_constraint() { return {{0, 1, 3}, 1}; }

inline gf2::BitVector bits_of(std::uint64_t value, std::size_t width) {
  gf2::BitVector v(width);
  for (std::size_t i = 0; i < width; ++i) {
    if ((value >> i) & 1U) {
      v.set(i);
    }
  }
  return v;
}

inline gf2::BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  gf2::BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.set(r, c, bit(rng));
    }
  }
  return m;
}

struct RandomProblemShape {
  std::size_t max_qubits = 6;
  std::size_t max_terms = 10;
  std::size_t max_order = 3;
  std::size_t max_constraints = 0;
};

// Coefficients are nonzero multiples of 1/4 in [-2, 2], so every energy sum
// in the tests is exact in double precision.
inline LogicalProblem random_problem(std::mt19937_64& rng, const RandomProblemShape& shape) {
  std::uniform_int_distribution<std::size_t> qubit_count(1, shape.max_qubits);
  const std::size_t n = qubit_count(rng);
  std::uniform_int_distribution<std::size_t> term_count(1, shape.max_terms);
  std::uniform_int_distribution<std::size_t> order(1, std::min(shape.max_order, n));
  std::uniform_int_distribution<int> quarter(-8, 7);
  const std::size_t wanted = term_count(rng);

  std::set<std::vector<std::size_t>> seen;
  std::vector<Term> terms;
  for (std::size_t attempt = 0; attempt < 20 * wanted && terms.size() < wanted; ++attempt) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
      idx[i] = i;
    }
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(order(rng));
    std::sort(idx.begin(), idx.end());
    if (!seen.insert(idx).second) {
      continue;
    }
    int q = quarter(rng);
    if (q >= 0) {
      ++q;
    }
    terms.push_back({idx, q / 4.0});
  }

  std::vector<ProductConstraint> constraints;
  if (shape.max_constraints > 0) {
    std::uniform_int_distribution<std::size_t> constraint_count(0, shape.max_constraints);
    std::uniform_int_distribution<std::size_t> corder(1, std::min<std::size_t>(3, n));
    std::bernoulli_distribution negative(0.3);
    const std::size_t m = constraint_count(rng);
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<std::size_t> idx(n);
      for (std::size_t i = 0; i < n; ++i) {
        idx[i] = i;
      }
      std::shuffle(idx.begin(), idx.end(), rng);
      idx.resize(corder(rng));
      std::sort(idx.begin(), idx.end());
      constraints.push_back({idx, negative(rng) ? -1 : 1});
    }
  }
  return LogicalProblem(n, std::move(terms), std::move(constraints));
}

}  // namespace parity::testing
