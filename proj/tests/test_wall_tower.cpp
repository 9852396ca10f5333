#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "pairflip/errors.hpp"
#include "pairflip/pair_stability.hpp"
#include "pairflip/rational.hpp"
#include "pairflip/wall_tower.hpp"

using namespace pairflip;

TEST_CASE("tower of the quartic genus-2 example") {
  const TowerReport r = tower(2, 4);
  CHECK(r.ambient_dim == 4);
  REQUIRE(r.walls.size() == 1);
  const WallDatum& w = r.walls[0];
  CHECK(w.c == 2);
  CHECK(w.n == 1);
  CHECK(w.locus_dim == 1);
  CHECK(w.fminus_fiber_dim == 2);
  CHECK(w.fplus_fiber_dim == 0);
  CHECK(w.fminus_exc_dim == 3);
  CHECK(w.divisorial);
  REQUIRE(r.spaces.size() == 2);
  CHECK(r.spaces[0].chamber_lo == Rational(2));
  CHECK(r.spaces[0].chamber_hi == Rational(4));
  CHECK(r.spaces[1].chamber_lo == Rational(0));
  CHECK(r.spaces[1].chamber_hi == Rational(2));
  CHECK(r.spaces[0].dim == 4);
  CHECK(r.spaces[1].dim == 4);
  CHECK(r.final_target.label == "M_C(2,D)");
  CHECK(r.final_target.dim == 3);
  CHECK(r.final_target.contraction);
  CHECK(r.final_target.series == DivClass{Rational(4), Rational(-2)});
}

TEST_CASE("tower of the quintic genus-0 example truncates") {
  const TowerReport r = tower(0, 5);
  CHECK(r.ambient_dim == 3);
  REQUIRE(r.walls.size() == 2);
  CHECK(r.walls[0].c == 1);
  CHECK(r.walls[0].n == 2);
  CHECK(r.walls[0].locus_dim == 2);
  CHECK(r.walls[0].fplus_fiber_dim == 1);
  CHECK(r.walls[0].fminus_fiber_dim == -1);
  CHECK_FALSE(r.walls[0].divisorial);
  CHECK(r.walls[1].c == 3);
  CHECK(r.walls[1].divisorial);

  REQUIRE(r.spaces.size() == 3);
  CHECK_FALSE(r.spaces[0].empty);
  CHECK_FALSE(r.spaces[1].empty);
  CHECK(r.spaces[2].empty);
  CHECK(r.spaces[2].dim == -1);

  CHECK(r.final_target.label == "M_1");
  CHECK(r.final_target.dim == 2);
  CHECK(r.final_target.contraction);
  CHECK(r.final_target.series == DivClass{Rational(2), Rational(-1)});
}

TEST_CASE("degree two has no walls and no contraction at genus 3") {
  const TowerReport r = tower(3, 2);
  CHECK(r.walls.empty());
  REQUIRE(r.spaces.size() == 1);
  CHECK(r.spaces[0].dim == 3);
  CHECK_FALSE(r.final_target.contraction);
  CHECK(r.final_target.dim == 6);
}

TEST_CASE("wall data on pinned inputs") {
  const WallDatum w1 = wall_datum(2, 4, 2);
  CHECK(w1.n == 1);
  CHECK(w1.fminus_fiber_dim == 2);
  CHECK(w1.fplus_fiber_dim == 0);
  CHECK(w1.fminus_exc_dim == 3);
  CHECK(w1.divisorial);
  CHECK(w1.contracted_class == DivClass{Rational(1), Rational(0)});

  const WallDatum w2 = wall_datum(2, 6, 2);
  CHECK(w2.n == 2);
  CHECK(w2.fplus_fiber_dim == 1);
  CHECK(w2.fplus_exc_dim == 3);
  CHECK(6 + 2 - 2 - w2.fplus_exc_dim == 3);
  CHECK(w2.contracted_class == DivClass{Rational(2), Rational(-1)});

  const WallDatum w3 = wall_datum(0, 6, 2);
  CHECK(w3.n == 2);
  CHECK(w3.fminus_fiber_dim == 0);
  CHECK(w3.fplus_fiber_dim == 1);

  CHECK_THROWS_AS(wall_datum(2, 6, 3), DomainError);
  CHECK_THROWS_AS(wall_datum(2, 6, 6), DomainError);
  CHECK_THROWS_AS(wall_datum(2, 6, 0), DomainError);
}

TEST_CASE("series labels of the wall maps") {
  CHECK(series_label(6, 1, SeriesDirection::FPlus) ==
        DivClass{Rational(2), Rational(-1)});
  CHECK(series_label(6, 2, SeriesDirection::FMinus) ==
        DivClass{Rational(2), Rational(-1)});
  CHECK(series_label(9, 4, SeriesDirection::Final) ==
        DivClass{Rational(9), Rational(-7)});
  for (int d = 3; d <= 12; ++d)
    CHECK(series_label(d, last_wall_index(d), SeriesDirection::Final) ==
          DivClass{Rational(d), Rational(-(d - 2))});

  CHECK_THROWS_AS(series_label(6, 2, SeriesDirection::FPlus), DomainError);
  CHECK_THROWS_AS(series_label(6, 0, SeriesDirection::FMinus), DomainError);
  CHECK_THROWS_AS(series_label(6, 1, SeriesDirection::Final), DomainError);
}

TEST_CASE("terracini fiber dimensions") {
  CHECK(terracini_fiber_dim(2, 8, 2) == 4);
  CHECK(terracini_fiber_dim(0, 7, 3) == -1);
  CHECK(terracini_fiber_dim(1, 6, 2) == 1);
  CHECK_THROWS_AS(terracini_fiber_dim(2, 8, 4), DomainError);
  CHECK_THROWS_AS(terracini_fiber_dim(2, 8, 0), DomainError);
}

TEST_CASE("secant stratum dimensions") {
  CHECK(secant_dims(2, 6, 2) == SecantDims{3, 3});
  CHECK(secant_dims(0, 6, 2) == SecantDims{3, 1});
  for (int g = 0; g <= 5; ++g)
    for (int d = 3; d <= 20; ++d) {
      CHECK(secant_dims(g, d, 1) == SecantDims{1, d + g - 3});
      for (int k = 1; 2 * k <= d - 1; ++k) {
        const SecantDims s = secant_dims(g, d, k);
        CHECK(s.dim + s.ambient_codim == d + g - 2);
      }
    }
  CHECK_THROWS_AS(secant_dims(2, 6, 3), DomainError);
  CHECK_THROWS_AS(secant_dims(2, 6, 0), DomainError);
}

TEST_CASE("wall and space bookkeeping over the full sweep") {
  for (int g = 0; g <= 5; ++g)
    for (int d = 1; d <= 20; ++d) {
      const TowerReport r = tower(g, d);
      CHECK(r.ambient_dim == d + g - 2);

      std::vector<int> cs;
      for (const WallDatum& w : r.walls) cs.push_back(w.c);
      CHECK(cs == critical_values(d));

      for (const WallDatum& w : r.walls) {
        CHECK(w.c == d - 2 * w.n);
        CHECK(w.locus_dim == w.n);
        CHECK(w.fminus_fiber_dim == w.c + g - 2);
        CHECK(w.fplus_fiber_dim == w.n - 1);
        CHECK(w.fminus_exc_dim == w.n + w.fminus_fiber_dim);
        CHECK(w.fplus_exc_dim == w.n + w.fplus_fiber_dim);
        CHECK(w.divisorial == (w.n == 1));
        CHECK(w.contracted_class ==
              DivClass{Rational(w.n), Rational(-(w.n - 1))});

        // The flipping locus with its fibers stays small, except for the
        // one genus-0 wall where the contraction is a bundle over all of
        // the ambient space.
        if (g == 0 && w.c == 1) {
          CHECK(w.locus_dim + w.fplus_fiber_dim == r.ambient_dim);
        } else {
          CHECK(w.locus_dim + w.fplus_fiber_dim < r.ambient_dim);
        }

        // Codimension two on both sides away from the blow-down wall, with
        // the three known low-genus exceptions on the f+ side.
        if (w.n >= 2) {
          CHECK(r.ambient_dim - w.fminus_exc_dim == w.n);
          const int fplus_codim = r.ambient_dim - w.fplus_exc_dim;
          CHECK(fplus_codim == w.c + g - 1);
          const bool low = (g == 0 && (w.c == 1 || w.c == 2)) ||
                           (g == 1 && w.c == 1);
          if (low) {
            CHECK(fplus_codim < 2);
          } else {
            CHECK(fplus_codim >= 2);
          }
        }
      }

      REQUIRE(static_cast<int>(r.spaces.size()) == last_wall_index(d) + 1);
      for (const SpaceDescriptor& s : r.spaces) {
        CHECK(s.chamber_lo == Rational(std::max(0, d - 2 * s.index - 2)));
        CHECK(s.chamber_hi == Rational(d - 2 * s.index));
        if (s.empty) {
          CHECK(g == 0);
          CHECK(d % 2 == 1);
          CHECK(s.chamber_hi <= Rational(1));
          CHECK(s.dim == -1);
        } else {
          CHECK(s.dim == r.ambient_dim);
          // Chamber midpoints land back on the same tower index.
          if (s.chamber_lo < s.chamber_hi && s.chamber_hi <= Rational(d)) {
            const Rational mid = (s.chamber_lo + s.chamber_hi) / Rational(2);
            if (mid > Rational(0) && mid < Rational(d))
              CHECK(chamber_of(mid, d).index == s.index);
          }
        }
      }

      CHECK(r.final_target.contraction == (d > 2 * g - 2));
      if (g == 0 && d % 2 == 1) {
        CHECK(r.final_target.label == "M_1");
        CHECK(r.final_target.dim == (d - 1) / 2);
      } else {
        CHECK(r.final_target.label == "M_C(2,D)");
        if (g == 0) CHECK(r.final_target.dim == 0);
        if (g == 1) CHECK(r.final_target.dim == (d % 2 == 0 ? 1 : 0));
        if (g >= 2) CHECK(r.final_target.dim == 3 * g - 3);
      }
    }
}

TEST_CASE("fiber dimensions match the terracini recursion") {
  for (int g = 0; g <= 5; ++g)
    for (int d = 3; d <= 20; ++d)
      for (const WallDatum& w : tower(g, d).walls)
        if (w.c > 0) CHECK(w.fminus_fiber_dim == terracini_fiber_dim(g, d, w.n));
}
