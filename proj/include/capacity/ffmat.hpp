// Copyright 2026 The capacity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAPACITY_FFMAT_HPP
#define CAPACITY_FFMAT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "capacity/error.hpp"

namespace capacity {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::uint32_t next_prime_after(std::uint32_t p) {
  std::uint32_t q = p + 1;
  while (!is_prime(q)) ++q;
  return q;
}

/// Characteristic of a prime field GF(p). Primality is checked on construction.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw precondition_error(std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw precondition_error("modulus must be below 2^31");
  }

  std::uint32_t value() const { return p_; }

  std::uint32_t reduce(std::int64_t x) const {
    auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} + p_ - b) % p_);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p_, b = a % p_;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw precondition_error("zero has no inverse");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint32_t p_;
};

/// Largest number of entries any single matrix may hold.
inline constexpr std::size_t kMaxMatrixEntries = std::size_t{1} << 28;

/// Dense row-major matrix over GF(p).
class FMatrix {
 public:
  FMatrix(std::size_t rows, std::size_t cols, PrimeModulus mod) : rows_(rows), cols_(cols), mod_(mod) {
    if (rows == 0 || cols == 0) throw precondition_error("matrix dimensions must be positive");
    if (rows > kMaxMatrixEntries / cols)
      throw guard_exceeded("matrix of " + std::to_string(rows) + "x" + std::to_string(cols) + " is too large");
    data_.assign(rows * cols, 0);
  }

  FMatrix(std::size_t rows, std::size_t cols, PrimeModulus mod, std::span<const std::int64_t> entries)
      : FMatrix(rows, cols, mod) {
    if (entries.size() != rows * cols)
      throw dimension_mismatch("expected " + std::to_string(rows * cols) + " entries, got " +
                               std::to_string(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) data_[i] = mod_.reduce(entries[i]);
  }

  static FMatrix identity(std::size_t n, PrimeModulus mod) {
    FMatrix m(n, n, mod);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static FMatrix ones(std::size_t rows, std::size_t cols, PrimeModulus mod) {
    FMatrix m(rows, cols, mod);
    for (auto& x : m.data_) x = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeModulus& modulus() const { return mod_; }
  std::uint32_t p() const { return mod_.value(); }

  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const std::uint32_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const std::uint32_t> entries() const { return data_; }

  void set(std::size_t i, std::size_t j, std::int64_t value) { (*this)(i, j) = mod_.reduce(value); }

  FMatrix transpose() const {
    FMatrix t(cols_, rows_, mod_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Submatrix on the given row and column index lists, in the listed order.
  FMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    FMatrix s(row_idx.size(), col_idx.size(), mod_);
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  /// Contiguous block starting at (r0, c0).
  FMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    FMatrix s(nr, nc, mod_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
    return s;
  }

  bool is_zero() const {
    for (auto x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const FMatrix&, const FMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeModulus mod_;
  std::vector<std::uint32_t> data_;
};

inline void require_same_field(const FMatrix& a, const FMatrix& b) {
  if (a.modulus() != b.modulus())
    throw dimension_mismatch("matrices live over different fields GF(" + std::to_string(a.p()) + ") and GF(" +
                             std::to_string(b.p()) + ")");
}

/// Row echelon data produced by Gaussian elimination with first-nonzero pivoting.
struct Echelon {
  FMatrix reduced;                  ///< reduced row echelon form
  std::vector<std::size_t> pivot_rows;  ///< original row index of each pivot, in pivot order
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// scanning columns left to right and rows top to bottom, so results are
/// reproducible. Row swaps are tracked to recover original row indices.
inline Echelon echelon(const FMatrix& m) {
  FMatrix a = m;
  const auto& f = m.modulus();
  std::vector<std::size_t> origin(m.rows());
  for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;
  Echelon out{a, {}, {}};
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
      std::swap(origin[piv], origin[r]);
    }
    auto inv = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      auto factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
    }
    out.pivot_rows.push_back(origin[r]);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

inline std::size_t rank(const FMatrix& m) { return echelon(m).pivot_cols.size(); }

inline FMatrix matmul(const FMatrix& a, const FMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows())
    throw dimension_mismatch("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const auto p = std::uint64_t{a.p()};
  FMatrix c(a.rows(), b.cols(), a.modulus());
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + std::uint64_t{aik} * b(k, j)) % p;
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<std::uint32_t>(acc[j]);
  }
  return c;
}

inline FMatrix kronecker(const FMatrix& a, const FMatrix& b) {
  require_same_field(a, b);
  const auto& f = a.modulus();
  if (a.rows() * b.rows() > kMaxMatrixEntries / (a.cols() * b.cols()))
    throw guard_exceeded("kronecker product too large");
  FMatrix k(a.rows() * b.rows(), a.cols() * b.cols(), f);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      auto aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = f.mul(aij, b(r, c));
    }
  return k;
}

/// Inverse of a square full-rank matrix.
inline FMatrix inverse(const FMatrix& m) {
  if (m.rows() != m.cols()) throw dimension_mismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  FMatrix aug(n, 2 * n, m.modulus());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto e = echelon(aug);
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) throw precondition_error("matrix is singular");
  return e.reduced.block(0, n, n, n);
}

struct SubmatrixIndices {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Row and column indices of an r x r full-rank submatrix: the first r pivots
/// of elimination on m (columns) and on its pivot columns' transpose (rows).
inline SubmatrixIndices select_full_rank_submatrix(const FMatrix& m, std::size_t r) {
  auto e = echelon(m);
  if (e.pivot_cols.size() < r)
    throw precondition_error("rank " + std::to_string(e.pivot_cols.size()) + " is below requested " +
                             std::to_string(r));
  SubmatrixIndices out;
  out.cols.assign(e.pivot_cols.begin(), e.pivot_cols.begin() + static_cast<std::ptrdiff_t>(r));
  // The chosen columns are independent; pick independent rows among them.
  std::vector<std::size_t> all_rows(m.rows());
  for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
  auto cols_only = m.submatrix(all_rows, out.cols);
  auto et = echelon(cols_only.transpose());
  out.rows.assign(et.pivot_cols.begin(), et.pivot_cols.begin() + static_cast<std::ptrdiff_t>(r));
  return out;
}

/// Incremental row basis in echelon form; supports rank-so-far queries while
/// rows are appended one at a time.
class RowBasis {
 public:
  RowBasis(std::size_t width, PrimeModulus mod) : width_(width), mod_(mod) {}

  std::size_t rank() const { return rows_.size(); }

  /// Reduces `row` against the basis; returns true and keeps it if independent.
  bool insert(std::vector<std::uint32_t> row) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      auto c = pivots_[k];
      auto x = row[c];
      if (x == 0) continue;
      const auto& b = rows_[k];
      for (std::size_t j = c; j < width_; ++j) row[j] = mod_.sub(row[j], mod_.mul(x, b[j]));
    }
    std::size_t c = 0;
    while (c < width_ && row[c] == 0) ++c;
    if (c == width_) return false;
    auto inv = mod_.inv(row[c]);
    for (std::size_t j = c; j < width_; ++j) row[j] = mod_.mul(row[j], inv);
    // Keep the basis reduced on the new pivot column.
    for (auto& b : rows_) {
      auto x = b[c];
      if (x == 0) continue;
      for (std::size_t j = c; j < width_; ++j) b[j] = mod_.sub(b[j], mod_.mul(x, row[j]));
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(c);
    return true;
  }

 private:
  std::size_t width_;
  PrimeModulus mod_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of the column span of the horizontal concatenation of the given matrices.
inline std::size_t span_dimension(std::span<const FMatrix> blocks, std::size_t height, PrimeModulus mod) {
  RowBasis basis(height, mod);
  for (const auto& b : blocks) {
    if (b.rows() != height) throw dimension_mismatch("span_dimension: block height mismatch");
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::vector<std::uint32_t> col(height);
      for (std::size_t i = 0; i < height; ++i) col[i] = b(i, j);
      basis.insert(std::move(col));
    }
  }
  return basis.rank();
}

}  // namespace capacity

#endif  // CAPACITY_FFMAT_HPP
