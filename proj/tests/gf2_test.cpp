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

#include "parity/gf2.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace parity;
using namespace parity::gf2;
using parity::testing::bits_of;
using parity::testing::random_matrix;

namespace {

// Independent oracle: count kernel vectors by enumerating all of F_2^cols.
std::size_t brute_force_kernel_size(const BitMatrix& m) {
  std::size_t count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m.cols()); ++x) {
    if (m.right_multiply(bits_of(x, m.cols())).none()) {
      ++count;
    }
  }
  return count;
}

// Independent oracle: the row space as an explicit set of vectors.
std::set<std::string> brute_force_span(const BitMatrix& m) {
  std::set<std::string> span;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << m.rows()); ++c) {
    span.insert(m.left_multiply(bits_of(c, m.rows())).to_string());
  }
  return span;
}

}  // namespace

TEST(bit_vector, packs_across_words) {
  BitVector v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  EXPECT_EQ(v.popcount(), 3U);
  EXPECT_EQ(v.ones(), (std::vector<std::size_t>{0, 64, 129}));
  EXPECT_EQ(v.find_next(1), 64U);
  EXPECT_EQ(v.find_next(130), 130U);
  BitVector w = v;
  w.flip(64);
  EXPECT_FALSE(v.dot(w) == v.dot(v));
  EXPECT_EQ(BitVector::from_string(v.to_string()), v);
  EXPECT_THROW(BitVector::from_string("01x"), std::invalid_argument);
}

TEST(rref, identity_is_fixed_point) {
  const auto r = rref(BitMatrix::identity(3));
  EXPECT_EQ(r.matrix, BitMatrix::identity(3));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(rref, duplicate_rows_cancel) {
  const auto r = rref(BitMatrix{{1, 1}, {1, 1}});
  EXPECT_EQ(r.matrix, (BitMatrix{{1, 1}, {0, 0}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(rref, five_qubit_generator_has_rank_four) {
  EXPECT_EQ(rank(parity::testing::reference_generator()), 4U);
  EXPECT_EQ(rref(parity::testing::reference_generator()).pivots.size(), 4U);
}

TEST(null_space, trivial_and_full_kernels) {
  EXPECT_EQ(null_space(BitMatrix::identity(4)).rows(), 0U);
  EXPECT_EQ(null_space(BitMatrix::identity(4)).cols(), 4U);
  const auto full = null_space(BitMatrix(2, 3));
  EXPECT_EQ(full.rows(), 3U);
  EXPECT_EQ(rank(full), 3U);
}

TEST(null_space, five_qubit_generator_matches_reference_check) {
  const auto kernel = null_space(parity::testing::reference_generator());
  EXPECT_EQ(kernel.rows(), 2U);
  EXPECT_TRUE(row_space_equal(kernel, parity::testing::reference_check()));
}

TEST(null_space, fuzz_against_enumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(0, 9);
    const auto m = random_matrix(rng, dim(rng), dim(rng) + 1, 0.4);
    const auto kernel = null_space(m);
    for (const auto& r : kernel.row_data()) {
      EXPECT_TRUE(m.right_multiply(r).none());
    }
    EXPECT_EQ(rank(m) + kernel.rows(), m.cols());
    EXPECT_EQ(rank(kernel), kernel.rows());
    EXPECT_EQ(std::size_t{1} << kernel.rows(), brute_force_kernel_size(m));
  }
}

TEST(rref, idempotent_and_span_preserving) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 6, 7, 0.3);
    const auto once = rref(m);
    EXPECT_EQ(rref(once.matrix).matrix, once.matrix);
    EXPECT_TRUE(row_space_equal(m, once.matrix));
    EXPECT_EQ(brute_force_span(m), brute_force_span(once.matrix));
  }
}

TEST(solve_right, examples) {
  const BitMatrix target{{1, 0}, {0, 1}, {1, 1}};
  EXPECT_EQ(*solve_right(BitMatrix::identity(3), target), target);

  const auto under = solve_right(BitMatrix{{1, 1}}, BitMatrix{{1}});
  ASSERT_TRUE(under.has_value());
  EXPECT_EQ(*under, (BitMatrix{{1}, {0}}));

  EXPECT_FALSE(solve_right(BitMatrix{{0}}, BitMatrix{{1}}).has_value());
}

TEST(solve_right, solutions_satisfy_system) {
  std::mt19937_64 rng(13);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, 5, 4, 0.5);
    const auto target = random_matrix(rng, 5, 2, 0.5);
    const auto x = solve_right(m, target);
    // Consistency oracle: each target column lies in the column space of m.
    bool consistent = true;
    for (std::size_t c = 0; c < target.cols(); ++c) {
      bool found = false;
      for (std::uint64_t y = 0; y < 16 && !found; ++y) {
        found = m.right_multiply(bits_of(y, 4)) == target.column(c);
      }
      consistent = consistent && found;
    }
    EXPECT_EQ(x.has_value(), consistent);
    if (x) {
      EXPECT_EQ(m * *x, target);
      ++solved;
    }
  }
  EXPECT_GT(solved, 0);
}

TEST(row_space_equal, examples) {
  const auto p = parity::testing::reference_check();
  BitMatrix swapped{{1, 0, 0, 1, 1, 1}, {1, 1, 1, 1, 0, 0}};
  swapped.row(0) ^= swapped.row(1);
  EXPECT_TRUE(row_space_equal(p, swapped));
  EXPECT_FALSE(row_space_equal(p, BitMatrix::from_rows({p.row(0)}, 6)));
  EXPECT_TRUE(row_space_equal(BitMatrix(0, 0), BitMatrix(0, 0)));
}

TEST(bit_matrix, dump_round_trip) {
  const auto g = parity::testing::reference_generator();
  EXPECT_EQ(g.to_dump(), "110010\n101010\n000011\n001101\n010101\n");
  EXPECT_EQ(BitMatrix::from_dump("# G\n" + g.to_dump()), g);
  EXPECT_EQ(g.transposed().transposed(), g);
}

TEST(incremental_basis, tracks_rank) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_matrix(rng, 8, 6, 0.3);
    IncrementalBasis basis(6);
    for (const auto& r : m.row_data()) {
      basis.insert(r);
    }
    EXPECT_EQ(basis.rank(), rref(m).pivots.size());
    for (const auto& r : m.row_data()) {
      EXPECT_TRUE(basis.contains(r));
    }
  }
}
