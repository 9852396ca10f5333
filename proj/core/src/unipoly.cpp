#include "pairflip/unipoly.hpp"

#include <sstream>
#include <utility>

#include "pairflip/errors.hpp"

namespace pairflip {

UniPoly::UniPoly(Rational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::variable() { return UniPoly(std::vector<Rational>{0, 1}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational UniPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = c.abs();
    if (i == 0) {
      os << mag.str();
    } else {
      if (!(mag == Rational(1))) os << mag.str() << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("unipoly: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree())
    throw DomainError("unipoly: inexact division (degree)");
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(
      static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational lead = b.coeff(b.degree());
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const Rational q =
        rem[static_cast<std::size_t>(i + b.degree())] / lead;
    quo[static_cast<std::size_t>(i)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<std::size_t>(i + j)] -= q * b.coeff(j);
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw DomainError("unipoly: inexact division (remainder)");
  return UniPoly(std::move(quo));
}

std::optional<int> vanishing_order(const UniPoly& p) {
  if (p.is_zero()) return std::nullopt;
  for (int i = 0;; ++i)
    if (!p.coeff(i).is_zero()) return i;
}

}  // namespace pairflip
