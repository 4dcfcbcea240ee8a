// SPDX-License-Identifier: MIT
//
// Dense exact linear algebra over F_p: rank, kernel bases, and linear-system
// solving by Gaussian elimination. Used for cohomology ranks, the homotopy
// decision system, and the inverse-cocycle solve.

#pragma once

#include <optional>
#include <vector>

#include "legaug/ncpoly.hpp"

namespace legaug {

/// A dense rows x cols matrix over F_p; entries stored reduced.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Int& v);
  void add_at(std::size_t i, std::size_t j, const Int& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  static Matrix identity(Ring ring, std::size_t n);

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

/// Rank over F_p (the ring must be a field).
std::size_t rank(const Matrix& m);

/// Basis of the right kernel {x : m x = 0}, each vector of length cols().
std::vector<std::vector<Int>> kernel_basis(const Matrix& m);

/// One solution of m x = b, or nullopt if inconsistent.
std::optional<std::vector<Int>> solve(const Matrix& m,
                                      const std::vector<Int>& b);

/// The inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace legaug
