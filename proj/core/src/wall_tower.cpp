#include "pairflip/wall_tower.hpp"

#include <algorithm>

#include "pairflip/errors.hpp"
#include "pairflip/pair_stability.hpp"

namespace pairflip {

WallDatum wall_datum(int g, int d, int c) {
  if (g < 0 || d < 1) throw DomainError("wall_datum: needs g >= 0, d >= 1");
  if (c <= 0 || c >= d || (d - c) % 2 != 0)
    throw DomainError("wall_datum: c = " + std::to_string(c) +
                      " is not a critical value of d = " + std::to_string(d));
  WallDatum w;
  w.c = c;
  w.n = (d - c) / 2;
  w.locus_dim = w.n;
  w.fminus_fiber_dim = c + g - 2;
  w.fplus_fiber_dim = w.n - 1;
  w.fminus_exc_dim = w.n + w.fminus_fiber_dim;
  w.fplus_exc_dim = w.n + w.fplus_fiber_dim;
  w.divisorial = w.fminus_exc_dim == d + g - 2 - 1;
  w.contracted_class = {Rational(w.n), Rational(-(w.n - 1))};
  return w;
}

DivClass series_label(int d, int k, SeriesDirection dir) {
  switch (dir) {
    case SeriesDirection::FPlus:
      if (k < 0 || d - 2 * k - 2 < 1)
        throw DomainError("series_label: no f+ target below X_" +
                          std::to_string(k));
      return {Rational(k + 1), Rational(-k)};
    case SeriesDirection::FMinus:
      if (k < 1 || d - 2 * k < 1)
        throw DomainError("series_label: no f- target below X_" +
                          std::to_string(k));
      return {Rational(k), Rational(-(k - 1))};
    case SeriesDirection::Final:
      if (k != last_wall_index(d))
        throw DomainError("series_label: the final map leaves X_" +
                          std::to_string(last_wall_index(d)));
      return {Rational(d), Rational(-(d - 2))};
  }
  throw DomainError("series_label: bad direction");
}

int terracini_fiber_dim(int g, int d, int k) {
  if (g < 0 || k < 1 || d - 2 * k <= 0)
    throw DomainError("terracini_fiber_dim: needs k >= 1 and d - 2k > 0");
  return d - 2 * k + g - 2;
}

SecantDims secant_dims(int g, int d, int k) {
  if (g < 0 || k < 1 || 2 * k > d - 1)
    throw DomainError("secant_dims: needs 1 <= k and 2k <= d - 1");
  return {2 * k - 1, d + g - 2 * k - 1};
}

TowerReport tower(int g, int d) {
  if (g < 0 || d < 1) throw DomainError("tower: needs g >= 0, d >= 1");
  TowerReport report;
  report.g = g;
  report.d = d;
  report.ambient_dim = d + g - 2;

  for (const int c : critical_values(d)) report.walls.push_back(wall_datum(g, d, c));

  const int last = last_wall_index(d);
  for (int k = 0; k <= last; ++k) {
    SpaceDescriptor s;
    s.index = k;
    s.chamber_lo = Rational(std::max(0, d - 2 * k - 2));
    s.chamber_hi = Rational(d - 2 * k);
    // Below sigma = 1 nothing is semistable at genus 0 and odd degree.
    s.empty = g == 0 && d % 2 == 1 && s.chamber_hi <= Rational(1);
    s.dim = s.empty ? -1 : report.ambient_dim;
    report.spaces.push_back(s);
  }

  FinalTarget& fin = report.final_target;
  fin.contraction = d > 2 * g - 2;
  if (g == 0 && d % 2 == 1) {
    // The tower stops at the sigma = 1 moduli; the last nonempty space
    // fibers over it in lines.
    const int n = (d - 1) / 2;
    fin.label = "M_1";
    fin.dim = n;
    fin.series = {Rational(n), Rational(-(n - 1))};
  } else {
    fin.label = "M_C(2,D)";
    fin.series = {Rational(d), Rational(-(d - 2))};
    if (g == 0)
      fin.dim = 0;                    // even degree: a single split bundle
    else if (g == 1)
      fin.dim = d % 2 == 0 ? 1 : 0;   // even degree: a pencil
    else
      fin.dim = 3 * g - 3;
  }
  return report;
}

}  // namespace pairflip
