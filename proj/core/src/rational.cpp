#include "pairflip/rational.hpp"

#include <cctype>
#include <ostream>

#include "pairflip/errors.hpp"

namespace pairflip {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] {
    return ParseError("not a rational: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  std::string_view num = s;
  std::string_view den;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (den.empty()) throw bad();
  }
  const auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (const char ch : t)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  if (!num.empty() && num.front() == '-') num.remove_prefix(1);
  if (!digits(num) || (!den.empty() && !digits(den))) throw bad();

  Rational r;
  std::string canonical(text);
  if (mpq_set_str(r.v_.get_mpq_t(), canonical.c_str(), 10) != 0) throw bad();
  if (r.v_.get_den() == 0) throw DomainError("rational: zero denominator");
  r.v_.canonicalize();
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

long Rational::to_long() const {
  if (!is_integer()) throw DomainError("rational: not an integer: " + str());
  if (!v_.get_num().fits_slong_p())
    throw DomainError("rational: out of long range: " + str());
  return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace pairflip
