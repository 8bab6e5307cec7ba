// Copyright 2026 The seuclid Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "seuclid/numeric.hpp"

namespace seuclid {

// Dense row-major matrix. Small dimensions only (n <= 4 fields, a few dozen
// columns for generator lists), so no effort is spent on blocking.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(std::size_t c, const std::vector<T>& v) {
    assert(v.size() == rows_);
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
      }
    return m;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    assert(a.cols_ == v.size());
    std::vector<T> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

Rational determinant(RatMatrix m);
Integer determinant(const IntMatrix& m);
std::size_t rank(RatMatrix m);
// Returns nullopt for singular matrices.
std::optional<RatMatrix> inverse(const RatMatrix& m);
std::optional<std::vector<Rational>> solve(const RatMatrix& m, const std::vector<Rational>& rhs);

// Column Hermite normal form. The first `key_rows` rows drive the pivoting;
// any further rows are carried along (use an identity block to record the
// unimodular transform). On return the last key_rows columns hold an upper
// triangular block with positive diagonal and entries to the right of each
// pivot reduced into [0, pivot); the remaining columns are zero on the key rows.
// Throws if the key rows do not have full rank.
IntMatrix column_hnf_augmented(IntMatrix m, std::size_t key_rows);

// HNF basis (n x n) of the lattice spanned by the columns of m (n rows).
IntMatrix hnf_basis(const IntMatrix& m);

}  // namespace seuclid
