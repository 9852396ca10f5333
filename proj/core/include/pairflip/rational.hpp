#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pairflip {

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator. Wraps GMP's mpq_class; every constructor canonicalizes.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long n) : v_(n) {}  // NOLINT
  Rational(long num, long den);

  // Accepts "p" or "p/q" in base 10, optional leading minus on p.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string str() const { return v_.get_str(); }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
  [[nodiscard]] Rational abs() const;

  // Integer value of an integral rational; DomainError otherwise.
  [[nodiscard]] long to_long() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);
  Rational operator-() const;

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.v_ == y.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const int c = cmp(x.v_, y.v_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

inline Rational operator+(Rational x, const Rational& y) { return x += y; }
inline Rational operator-(Rational x, const Rational& y) { return x -= y; }
inline Rational operator*(Rational x, const Rational& y) { return x *= y; }
inline Rational operator/(Rational x, const Rational& y) { return x /= y; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Division used by the fraction-free elimination; exact for any field.
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

}  // namespace pairflip
