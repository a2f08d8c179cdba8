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

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace parity::gf2 {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) {
    if (b != 0) {
      set(i);
    }
    ++i;
  }
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::from_indices(std::size_t size, std::span<const std::size_t> indices) {
  BitVector v(size);
  for (std::size_t i : indices) {
    v.flip(i);
  }
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) {
    throw std::invalid_argument("BitVector size mismatch in xor");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (auto w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) {
    throw std::invalid_argument("BitVector size mismatch in dot");
  }
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    acc ^= words_[w] & other.words_[w];
  }
  return (std::popcount(acc) & 1) != 0;
}

std::size_t BitVector::find_next(std::size_t from) const {
  if (from >= size_) {
    return size_;
  }
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word != 0) {
      const std::size_t idx = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
      return std::min(idx, size_);
    }
    if (++w == words_.size()) {
      return size_;
    }
    word = words_[w];
  }
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = find_next(0); i < size_; i = find_next(i + 1)) {
    out.push_back(i);
  }
  return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t count) const {
  BitVector out(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (get(begin + i)) {
      out.set(i);
    }
  }
  return out;
}

BitVector BitVector::resized(std::size_t size) const {
  BitVector out(size);
  const std::size_t n = std::min(size, size_);
  for (std::size_t i = find_next(0); i < n; i = find_next(i + 1)) {
    out.set(i);
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw std::invalid_argument("ragged BitMatrix literal");
    }
    rows_.emplace_back(r);
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i);
  }
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  BitMatrix m(0, cols);
  for (auto& r : rows) {
    m.append_row(std::move(r));
  }
  return m;
}

BitMatrix BitMatrix::from_dump(std::string_view text, std::size_t cols) {
  std::vector<BitVector> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.remove_suffix(1);
    }
    if (!line.empty() && line.front() != '#') {
      rows.push_back(BitVector::from_string(line));
      if (cols == 0) {
        cols = rows.back().size();
      }
    }
    start = end + 1;
  }
  return from_rows(std::move(rows), cols);
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (get(r, c)) {
      out.set(r);
    }
  }
  return out;
}

void BitMatrix::append_row(BitVector row) {
  if (row.size() != cols_) {
    throw std::invalid_argument("row width does not match matrix");
  }
  rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c : rows_[r].ones()) {
      t.set(c, r);
    }
  }
  return t;
}

BitMatrix BitMatrix::stacked(const BitMatrix& below) const {
  if (below.cols_ != cols_) {
    throw std::invalid_argument("column mismatch in stacked");
  }
  BitMatrix out = *this;
  for (const auto& r : below.rows_) {
    out.rows_.push_back(r);
  }
  return out;
}

BitMatrix BitMatrix::concatenated(const BitMatrix& right) const {
  if (right.rows() != rows()) {
    throw std::invalid_argument("row mismatch in concatenated");
  }
  BitMatrix out(rows(), cols_ + right.cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c : rows_[r].ones()) {
      out.set(r, c);
    }
    for (std::size_t c : right.rows_[r].ones()) {
      out.set(r, cols_ + c);
    }
  }
  return out;
}

BitVector BitMatrix::left_multiply(const BitVector& v) const {
  if (v.size() != rows()) {
    throw std::invalid_argument("dimension mismatch in left_multiply");
  }
  BitVector out(cols_);
  for (std::size_t r : v.ones()) {
    out ^= rows_[r];
  }
  return out;
}

BitVector BitMatrix::right_multiply(const BitVector& x) const {
  if (x.size() != cols_) {
    throw std::invalid_argument("dimension mismatch in right_multiply");
  }
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].dot(x)) {
      out.set(r);
    }
  }
  return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("dimension mismatch in matrix product");
  }
  BitMatrix out(0, b.cols());
  for (const auto& r : a.rows_) {
    out.rows_.push_back(b.left_multiply(r));
  }
  return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("dimension mismatch in matrix sum");
  }
  BitMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    out.rows_[r] ^= b.rows_[r];
  }
  return out;
}

bool BitMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
}

std::string BitMatrix::to_dump() const {
  std::string out;
  for (const auto& r : rows_) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

std::ostream& operator<<(std::ostream& out, const BitVector& v) { return out << v.to_string(); }

std::ostream& operator<<(std::ostream& out, const BitMatrix& m) { return out << m.to_dump(); }

RrefResult rref(const BitMatrix& m, std::size_t pivot_limit) {
  RrefResult result{m, {}};
  BitMatrix& a = result.matrix;
  const std::size_t limit = std::min(pivot_limit, m.cols());
  std::size_t lead = 0;
  for (std::size_t c = 0; c < limit && lead < a.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && !a.get(pivot, c)) {
      ++pivot;
    }
    if (pivot == a.rows()) {
      continue;
    }
    std::swap(a.row(pivot), a.row(lead));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != lead && a.get(r, c)) {
        a.row(r) ^= a.row(lead);
      }
    }
    result.pivots.push_back(c);
    ++lead;
  }
  return result;
}

std::size_t rank(const BitMatrix& m) {
  IncrementalBasis basis(m.cols());
  for (const auto& r : m.row_data()) {
    basis.insert(r);
  }
  return basis.rank();
}

BitMatrix null_space(const BitMatrix& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) {
    is_pivot[p] = true;
  }
  BitMatrix basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (reduced.get(i, free)) {
        v.set(pivots[i]);
      }
    }
    basis.append_row(std::move(v));
  }
  return basis;
}

std::optional<BitMatrix> solve_right(const BitMatrix& m, const BitMatrix& target) {
  if (target.rows() != m.rows()) {
    throw std::invalid_argument("solve_right: target must have one row per row of m");
  }
  const std::size_t n = m.cols();
  const auto [reduced, pivots] = rref(m.concatenated(target), n);
  for (std::size_t r = pivots.size(); r < reduced.rows(); ++r) {
    if (reduced.row(r).any()) {
      return std::nullopt;
    }
  }
  BitMatrix x(n, target.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    x.row(pivots[i]) = reduced.row(i).slice(n, target.cols());
  }
  return x;
}

bool row_space_equal(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) {
    return false;
  }
  auto canonical = [](const BitMatrix& m) {
    auto r = rref(m);
    std::vector<BitVector> nonzero(r.matrix.row_data().begin(),
                                   r.matrix.row_data().begin() + static_cast<std::ptrdiff_t>(r.pivots.size()));
    return nonzero;
  };
  return canonical(a) == canonical(b);
}

BitVector IncrementalBasis::reduce(BitVector v) const {
  for (const auto& [lead, b] : basis_) {
    if (v.get(lead)) {
      v ^= b;
    }
  }
  return v;
}

bool IncrementalBasis::insert(const BitVector& v) {
  if (v.size() != cols_) {
    throw std::invalid_argument("IncrementalBasis: width mismatch");
  }
  BitVector residual = reduce(v);
  const std::size_t lead = residual.find_next(0);
  if (lead == residual.size()) {
    return false;
  }
  auto pos = std::lower_bound(basis_.begin(), basis_.end(), lead,
                              [](const auto& entry, std::size_t key) { return entry.first < key; });
  basis_.insert(pos, {lead, std::move(residual)});
  return true;
}

}  // namespace parity::gf2
