#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "oracles.hpp"
#include "pairflip/errors.hpp"
#include "pairflip/matrix.hpp"
#include "pairflip/rational.hpp"
#include "pairflip/sampler.hpp"
#include "pairflip/unipoly.hpp"

using namespace pairflip;

TEST_CASE("rational arithmetic is exact and reduced") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(3, 7) / Rational(3, 7) == Rational(1));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK((Rational(7, 3) - Rational(1, 3)) == Rational(2));
  CHECK((Rational(7, 3) - Rational(1, 3)).str() == "2");
  CHECK(Rational(-1, 2) * Rational(2, 5) == Rational(-1, 5));
}

TEST_CASE("rational division by zero is rejected") {
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(3) / Rational(0), DomainError);
}

TEST_CASE("rational ordering and helpers") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5, 2) < Rational(-2));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(4, 2).is_integer());
  CHECK_FALSE(Rational(3, 2).is_integer());
  CHECK(Rational(-7, 2).abs() == Rational(7, 2));
  CHECK(Rational(-3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(9, 4).sign() == 1);
  CHECK(Rational(12, 4).to_long() == 3);
}

TEST_CASE("rational parsing round-trips") {
  for (const char* s : {"0", "7", "-7", "5/6", "-5/6", "123456789123456789/2"}) {
    const Rational r = Rational::parse(s);
    CHECK(r.str() == s);
    CHECK(Rational::parse(r.str()) == r);
  }
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("2/-3"), ParseError);
  CHECK_THROWS_AS(Rational::parse(" 1"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
}

TEST_CASE("renormalization is idempotent") {
  Sampler s;
  for (int i = 0; i < 200; ++i) {
    const Rational r = s.rational();
    const Rational again = Rational::parse(r.str());
    CHECK(again == r);
    CHECK(again.str() == r.str());
  }
}

TEST_CASE("unipoly basics") {
  const UniPoly t = UniPoly::variable();
  const UniPoly p = t * t + t * t * t;
  CHECK(p.degree() == 3);
  CHECK(p.coeff(2) == Rational(1));
  CHECK(p.coeff(0) == Rational(0));
  CHECK(p.eval(Rational(2)) == Rational(12));
  CHECK(UniPoly(0).is_zero());
  CHECK(UniPoly(0).degree() == -1);
  CHECK((p - p).is_zero());

  const UniPoly q = UniPoly(std::vector<Rational>{Rational(1), Rational(1)});
  CHECK((q * q).coeffs() ==
        std::vector<Rational>{Rational(1), Rational(2), Rational(1)});
}

TEST_CASE("unipoly exact division") {
  const UniPoly t = UniPoly::variable();
  const UniPoly num = t * t - UniPoly(1);
  const UniPoly den = t - UniPoly(1);
  CHECK(exact_div(num, den) == t + UniPoly(1));
  CHECK_THROWS_AS(exact_div(t * t + UniPoly(1), den), DomainError);
  CHECK_THROWS_AS(exact_div(num, UniPoly(0)), DomainError);
  CHECK(exact_div(UniPoly(0), den).is_zero());
}

TEST_CASE("vanishing order of a polynomial") {
  const UniPoly t = UniPoly::variable();
  CHECK(vanishing_order(t * t + t * t * t) == 2);
  CHECK(vanishing_order(UniPoly(5)) == 0);
  CHECK(vanishing_order(UniPoly(0)) == std::nullopt);
  CHECK(vanishing_order(t) == 1);
}

TEST_CASE("rank on pinned matrices") {
  CHECK(rank(RatMatrix::identity(3)) == 3);

  RatMatrix dep(2, 3,
                {Rational(1), Rational(2), Rational(3), Rational(2),
                 Rational(4), Rational(6)});
  CHECK(rank(dep) == 1);

  const Rational t(2, 3);
  RatMatrix hankel(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Rational v(1);
      for (std::size_t e = 0; e < i + j; ++e) v = v * t;
      hankel(i, j) = v;
    }
  CHECK(rank(hankel) == 1);
  CHECK(test::naive_rank(hankel) == 1);

  CHECK(rank(RatMatrix(3, 4)) == 0);
}

TEST_CASE("det on pinned matrices") {
  CHECK(det(RatMatrix::identity(4)) == Rational(1));

  RatMatrix zrow(3, 3);
  zrow(0, 0) = Rational(1);
  zrow(0, 1) = Rational(2);
  zrow(2, 2) = Rational(5);
  CHECK(det(zrow) == Rational(0));

  // 2x2 Hankel slice of the moment vector z_i = t^{i-1} at t = 3.
  RatMatrix curve(2, 2,
                  {Rational(1), Rational(3), Rational(3), Rational(9)});
  CHECK(det(curve) == Rational(0));

  CHECK_THROWS_AS(det(RatMatrix(2, 3)), DomainError);
}

TEST_CASE("bareiss rank agrees with gaussian elimination") {
  Sampler s(7);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>(s.integer(0, 4));
    const std::size_t cols = 1 + static_cast<std::size_t>(s.integer(0, 4));
    const RatMatrix m = test::random_matrix(s, rows, cols);
    CHECK(rank(m) == test::naive_rank(m));
  }
  // Rank-deficient inputs via products of thin factors.
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(s.integer(0, 2));
    const std::size_t inner = 1 + static_cast<std::size_t>(s.integer(0, 1));
    const RatMatrix m =
        test::random_matrix(s, n, inner) * test::random_matrix(s, inner, n);
    const int r = rank(m);
    CHECK(r == test::naive_rank(m));
    CHECK(r <= static_cast<int>(inner));
  }
}

TEST_CASE("bareiss det agrees with cofactor expansion") {
  Sampler s(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(s.integer(0, 3));
    const RatMatrix m = test::random_matrix(s, n, n);
    CHECK(det(m) == test::cofactor_det(m));
  }
}

TEST_CASE("det is multiplicative") {
  Sampler s(13);
  for (int trial = 0; trial < 50; ++trial) {
    const RatMatrix a = test::random_matrix(s, 3, 3);
    const RatMatrix b = test::random_matrix(s, 3, 3);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("polynomial matrices eliminate exactly") {
  const UniPoly t = UniPoly::variable();

  PolyMatrix moment(2, 2);
  moment(0, 0) = UniPoly(1);
  moment(0, 1) = t;
  moment(1, 0) = t;
  moment(1, 1) = t * t;
  CHECK(det(moment).is_zero());
  CHECK(rank(moment) == 1);

  PolyMatrix shear(2, 2);
  shear(0, 0) = UniPoly(1);
  shear(0, 1) = t;
  shear(1, 1) = UniPoly(1);
  CHECK(det(shear) == UniPoly(1));

  Sampler s(17);
  for (int trial = 0; trial < 25; ++trial) {
    PolyMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m(i, j) = UniPoly(std::vector<Rational>{s.rational(), s.rational()});
    CHECK(det(m) == test::cofactor_det(m));
  }
}

TEST_CASE("sampler is reproducible and respects bounds") {
  Sampler a(99), b(99);
  for (int i = 0; i < 50; ++i) CHECK(a.rational() == b.rational());

  Sampler s(5);
  for (int i = 0; i < 200; ++i) {
    const long v = s.integer(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
  CHECK_FALSE(s.nonzero().is_zero());
  const auto distinct = s.distinct_rationals(8);
  CHECK(distinct.size() == 8);
  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (std::size_t j = i + 1; j < distinct.size(); ++j)
      CHECK(distinct[i] != distinct[j]);
}
