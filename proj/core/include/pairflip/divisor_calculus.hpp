#pragma once

#include <string>
#include <vector>

#include "pairflip/rational.hpp"

namespace pairflip {

// Index of the last wall / deepest secant stratum in play: floor((d-1)/2).
[[nodiscard]] inline int last_wall_index(int d) { return (d - 1) / 2; }

// Class a*H + b*E in the rank-2 lattice spanned by the hyperplane pullback
// H and the first exceptional divisor E.
struct DivClass {
  Rational h;
  Rational e;

  [[nodiscard]] std::string str() const;
  friend bool operator==(const DivClass&, const DivClass&) = default;
  friend DivClass operator+(const DivClass& x, const DivClass& y) {
    return {x.h + y.h, x.e + y.e};
  }
};

inline DivClass operator*(const Rational& s, const DivClass& c) {
  return {s * c.h, s * c.e};
}

enum class RaySide { Flipping, Flipped };

// Curve class on the k-th birational step, recorded through its pairings
// with H and E. Satisfies k*hB = (k-1)*eB, i.e. B is contracted by
// |kH - (k-1)E|; the flipping side has eB > 0.
struct RayClass {
  int k = 0;
  Rational hB;
  Rational eB;
  friend bool operator==(const RayClass&, const RayClass&) = default;
};

struct DiscrepancyRow {
  int j = 0;        // exceptional divisor index
  int codim = 0;    // codimension of the center, d + g - 2j - 1
  int mult_f = 0;   // multiplicity of the divisor F along it, d - 2j
  Rational coeff;   // (codim - 1) - lambda * mult_f
  friend bool operator==(const DiscrepancyRow&, const DiscrepancyRow&) = default;
};

struct FlipCertificate {
  int g = 0;
  int d = 0;
  int k = 0;
  Rational lambda;
  Rational b_pairing;
  Rational bplus_pairing;
  Rational threshold;
  std::vector<DiscrepancyRow> lc_rows;  // rows j = k .. floor((d-1)/2)
  bool b_negative = false;
  bool bplus_positive = false;
  bool lc_ok = false;
  bool certified = false;
};

// K_X = -(d+g-1)H + (d+g-4)E; requires d > 2.
DivClass canonical_class(int g, int d);

// F = dH - (d-2)E, the divisor swept by the section loci; requires d > 2.
DivClass F_class(int g, int d);

// Intersection number of aH + bE with the ray: a*hB + b*eB.
Rational pair_ray(const DivClass& c, const RayClass& r);

// Normalized ray of the k-th step, k >= 2: (k-1, k) on the flipping side,
// (-(k-1), -k) on the flipped side.
RayClass extremal_ray(int k, RaySide side);

// min over j in {max(k,2), ..., floor((d-1)/2)} of (d+g-2j-1)/(d-2j);
// requires d > 2k and a nonempty range. The quotient is monotone in j with
// the sign of g-1, so for g >= 1 the minimum sits at j = k and equals
// (d+g-2k-1)/(d-2k), while for g = 0 it moves to the deepest stratum.
Rational lc_threshold(int g, int d, int k);

// Rows j = j_lo .. j_hi; requires 1 <= j_lo <= j_hi <= floor((d-1)/2).
std::vector<DiscrepancyRow> discrepancy_table(int g, int d, const Rational& lambda,
                                              int j_lo, int j_hi);

// Checks B.(K+lambda F) < 0 < B+.(K+lambda F) and log canonicity of
// lambda*F across the exceptional rows j >= k. Requires k >= 2, d > 2k.
FlipCertificate certify_log_flip(int g, int d, int k, const Rational& lambda);

// Same, at lambda = lc_threshold(g, d, k).
FlipCertificate certify_log_flip(int g, int d, int k);

}  // namespace pairflip
