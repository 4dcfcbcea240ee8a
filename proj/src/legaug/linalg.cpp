// SPDX-License-Identifier: MIT

#include "legaug/linalg.hpp"

namespace legaug {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {
  if (!ring.is_field()) throw Error("Matrix: field coefficients required");
}

const Int& Matrix::at(std::size_t i, std::size_t j) const {
  return e_[i * cols_ + j];
}
void Matrix::set(std::size_t i, std::size_t j, const Int& v) {
  e_[i * cols_ + j] = ring_.reduce(v);
}
void Matrix::add_at(std::size_t i, std::size_t j, const Int& v) {
  e_[i * cols_ + j] = ring_.reduce(e_[i * cols_ + j] + v);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (ring_ != o.ring_ || cols_ != o.rows_)
    throw Error("Matrix: shape or ring mismatch in product");
  Matrix out(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.add_at(i, j, at(i, k) * o.at(k, j));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("Matrix: shape or ring mismatch in sum");
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i)
    out.e_[i] = ring_.reduce(e_[i] + o.e_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("Matrix: shape or ring mismatch in difference");
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i)
    out.e_[i] = ring_.reduce(e_[i] - o.e_[i]);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         e_ == o.e_;
}

bool Matrix::is_zero() const {
  for (const Int& v : e_)
    if (v != 0) return false;
  return true;
}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix out(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

namespace {

struct Echelon {
  Matrix m;                        // row-reduced form
  std::vector<std::size_t> pivot;  // pivot column of each pivot row
};

/// Reduced row echelon form (Gauss-Jordan) over F_p.
Echelon rref(Matrix m) {
  const Ring& r = m.ring();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Int tmp = m.at(row, j);
        m.set(row, j, m.at(sel, j));
        m.set(sel, j, tmp);
      }
    Int inv = r.invert(m.at(row, col));
    for (std::size_t j = 0; j < m.cols(); ++j)
      m.set(row, j, m.at(row, j) * inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Int f = m.at(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.set(i, j, m.at(i, j) - f * m.at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t rank(const Matrix& m) { return rref(m).pivot.size(); }

std::vector<std::vector<Int>> kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  const Ring& r = m.ring();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot) is_pivot[c] = true;
  std::vector<std::vector<Int>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Int> v(m.cols(), Int(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot.size(); ++i)
      v[e.pivot[i]] = r.reduce(-e.m.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Int>> solve(const Matrix& m,
                                      const std::vector<Int>& b) {
  if (b.size() != m.rows()) throw Error("solve: size mismatch");
  const Ring& r = m.ring();
  Matrix aug(r, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, m.cols(), b[i]);
  }
  Echelon e = rref(std::move(aug));
  std::vector<Int> x(m.cols(), Int(0));
  for (std::size_t i = 0; i < e.pivot.size(); ++i) {
    if (e.pivot[i] == m.cols()) return std::nullopt;  // 0 = 1 row
    x[e.pivot[i]] = e.m.at(i, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse: square matrix required");
  std::size_t n = m.rows();
  Matrix aug(m.ring(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, n + i, 1);
  }
  Echelon e = rref(std::move(aug));
  if (e.pivot.size() < n || e.pivot[n - 1] != n - 1) return std::nullopt;
  Matrix out(m.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, e.m.at(i, n + j));
  return out;
}

}  // namespace legaug
