#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pairflip/errors.hpp"
#include "pairflip/rational.hpp"
#include "pairflip/unipoly.hpp"

namespace pairflip {

template <typename T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw DomainError("matrix: entry count does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(i, c), (*this)(j, c));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<UniPoly>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix: shape mismatch in product");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = c(i, j) + a(i, k) * b(k, j);
  return c;
}

// Rank by fraction-free (Bareiss) elimination. After the pivot at step k,
// every surviving entry is a (k+1)-minor of the input, so the division by
// the previous pivot is exact over any integral domain and intermediate
// entries never compound denominators.
template <typename T>
[[nodiscard]] int rank(Matrix<T> m) {
  std::size_t r = 0;
  T prev(1);
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = exact_div(m(i, j) * m(r, c) - m(i, c) * m(r, j), prev);
      m(i, c) = T(0);
    }
    prev = m(r, c);
    ++r;
  }
  return static_cast<int>(r);
}

// Determinant by the same elimination; the last pivot is the determinant
// up to the sign of the row swaps.
template <typename T>
[[nodiscard]] T det(Matrix<T> m) {
  if (m.rows() != m.cols()) throw DomainError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return T(0);
    if (p != k) {
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace pairflip
