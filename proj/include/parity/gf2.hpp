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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

/// Dense linear algebra over GF(2).
///
/// Rows are packed into 64-bit words; every operation is modulo 2. Pivoting
/// always picks the lowest-index candidate row so results are reproducible.
namespace parity::gf2 {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);
  BitVector(std::initializer_list<int> bits);

  /// Parses a string of '0'/'1' characters. Throws std::invalid_argument on
  /// any other character.
  static BitVector from_string(std::string_view bits);
  static BitVector from_indices(std::size_t size, std::span<const std::size_t> indices);

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] bool empty() const { return size_ == 0; }

  [[nodiscard]] bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector& a, const BitVector& b) = default;
  friend auto operator<=>(const BitVector& a, const BitVector& b) = default;

  [[nodiscard]] std::size_t popcount() const;
  [[nodiscard]] bool any() const;
  [[nodiscard]] bool none() const { return !any(); }
  /// Inner product mod 2.
  [[nodiscard]] bool dot(const BitVector& other) const;
  /// Lowest set index at or after `from`, or size() when there is none.
  [[nodiscard]] std::size_t find_next(std::size_t from) const;
  [[nodiscard]] std::vector<std::size_t> ones() const;

  /// Copy of bits [begin, begin + count).
  [[nodiscard]] BitVector slice(std::size_t begin, std::size_t count) const;
  /// Returns a copy extended (or truncated) to `size` bits.
  [[nodiscard]] BitVector resized(std::size_t size) const;

  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  /// Row-wise literal, e.g. {{1, 0}, {0, 1}}. All rows must have equal length.
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static BitMatrix identity(std::size_t n);
  /// Builds a matrix from rows; `cols` is required so that zero-row matrices
  /// keep their width.
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
  /// Parses the dump format: one row per line of '0'/'1' characters. Blank
  /// lines and lines starting with '#' are skipped.
  static BitMatrix from_dump(std::string_view text, std::size_t cols = 0);

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

  [[nodiscard]] const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  [[nodiscard]] const std::vector<BitVector>& row_data() const { return rows_; }
  [[nodiscard]] BitVector column(std::size_t c) const;

  void append_row(BitVector row);

  [[nodiscard]] BitMatrix transposed() const;
  /// Rows of `this` followed by rows of `below`; column counts must match.
  [[nodiscard]] BitMatrix stacked(const BitMatrix& below) const;
  /// Columns of `this` followed by columns of `right`; row counts must match.
  [[nodiscard]] BitMatrix concatenated(const BitMatrix& right) const;

  /// Row vector times matrix: v (1 x rows) * M (rows x cols).
  [[nodiscard]] BitVector left_multiply(const BitVector& v) const;
  /// Matrix times column vector: M (rows x cols) * x (cols x 1).
  [[nodiscard]] BitVector right_multiply(const BitVector& x) const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

  [[nodiscard]] bool is_zero() const;

  /// Debug dump: one row per line of '0'/'1' characters.
  [[nodiscard]] std::string to_dump() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

std::ostream& operator<<(std::ostream& out, const BitVector& v);
std::ostream& operator<<(std::ostream& out, const BitMatrix& m);

struct RrefResult {
  BitMatrix matrix;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Zero rows are kept at the bottom so the shape is
/// unchanged. Only columns below `pivot_limit` are used as pivots (the
/// remaining columns are carried along as an augmented block).
RrefResult rref(const BitMatrix& m, std::size_t pivot_limit = SIZE_MAX);

std::size_t rank(const BitMatrix& m);

/// Basis of {x : m x^T = 0}, one basis vector per row; has cols - rank rows.
BitMatrix null_space(const BitMatrix& m);

/// Finds any X with m * X = target, choosing zero for every free variable.
std::optional<BitMatrix> solve_right(const BitMatrix& m, const BitMatrix& target);

/// True iff the row spaces of `a` and `b` coincide.
bool row_space_equal(const BitMatrix& a, const BitMatrix& b);

/// Incremental basis for membership tests and independent-subset selection.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t cols) : cols_(cols) {}

  /// Reduces `v` against the basis; returns the residual.
  [[nodiscard]] BitVector reduce(BitVector v) const;
  [[nodiscard]] bool contains(const BitVector& v) const { return reduce(v).none(); }
  /// Adds `v` if independent; returns whether it was added.
  bool insert(const BitVector& v);
  [[nodiscard]] std::size_t rank() const { return basis_.size(); }

 private:
  std::size_t cols_;
  // Each stored vector has a distinct leading bit; kept sorted by it.
  std::vector<std::pair<std::size_t, BitVector>> basis_;
};

}  // namespace parity::gf2
