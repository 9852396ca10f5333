#pragma once

// Slow reference implementations used only by the tests. The library does
// rank and determinant by fraction-free elimination; the oracles here use
// plain rational Gaussian elimination and cofactor expansion, and judge
// stability by comparing slopes directly, so the two routes share no code
// beyond the Rational type itself.

#include <cstddef>
#include <vector>

#include "pairflip/matrix.hpp"
#include "pairflip/pair_stability.hpp"
#include "pairflip/rational.hpp"
#include "pairflip/sampler.hpp"

namespace pairflip::test {

// Row echelon over Q with explicit division, counting pivots.
inline int naive_rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = m(i, j) - f * m(r, j);
    }
    ++r;
  }
  return static_cast<int>(r);
}

// Laplace expansion along the first row; works over any commutative ring,
// so it doubles as the oracle for polynomial-entry determinants.
template <typename T>
T cofactor_det(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw DomainError("cofactor_det: not square");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T acc(0);
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<T> sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        sub(i - 1, jj++) = m(i, j);
      }
    }
    const T term = m(0, c) * cofactor_det(sub);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline RatMatrix random_matrix(Sampler& s, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = s.rational();
  return m;
}

// Stability judged by comparing each distinguished subobject slope against
// the pair slope, with no cleared denominators.
inline Status slope_status(const PairInvariants& p, const Rational& sigma) {
  const Rational pair = mu_sigma(p.triple(), sigma);
  const Rational section = mu_sigma({1, 1, 0, p.a}, sigma);
  const Rational line = mu_sigma({0, 1, 0, p.b}, sigma);
  const Rational full = mu_sigma({0, 2, 0, p.d}, sigma);
  if (section < pair && line < pair && full < pair) return Status::Stable;
  if (section <= pair && line <= pair && full <= pair)
    return Status::StrictlySemistable;
  return Status::Unstable;
}

}  // namespace pairflip::test
