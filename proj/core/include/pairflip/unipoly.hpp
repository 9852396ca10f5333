#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairflip/rational.hpp"

namespace pairflip {

// Univariate polynomial over Rational. Coefficients are stored lowest
// degree first with no trailing zeros; the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(int c) : UniPoly(Rational(c)) {}  // NOLINT: constant, implicit
  UniPoly(Rational c);                      // NOLINT: constant, implicit
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly variable();  // t

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
  [[nodiscard]] Rational coeff(int i) const;
  [[nodiscard]] Rational eval(const Rational& t) const;
  [[nodiscard]] std::string str() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient a/b when b divides a exactly; DomainError otherwise (and on b = 0).
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

// Index of the lowest nonzero coefficient; nullopt encodes infinite order
// (the zero polynomial vanishes to every order).
std::optional<int> vanishing_order(const UniPoly& p);

}  // namespace pairflip
