#pragma once

#include <string>
#include <vector>

#include "pairflip/divisor_calculus.hpp"
#include "pairflip/rational.hpp"

namespace pairflip {

enum class SeriesDirection { FPlus, FMinus, Final };

// One wall c = d - 2n. Fiber dimensions use -1 as the empty-series
// sentinel (a projectivized space of sections with h^0 = 0).
struct WallDatum {
  int c = 0;
  int n = 0;
  int locus_dim = 0;          // dim of the n-th symmetric product stratum
  int fminus_fiber_dim = 0;   // d - 2n + g - 2
  int fplus_fiber_dim = 0;    // n - 1
  int fminus_exc_dim = 0;     // n + fminus_fiber_dim
  int fplus_exc_dim = 0;      // n + fplus_fiber_dim
  bool divisorial = false;    // fminus side contracts a divisor (only n = 1)
  DivClass contracted_class;  // nH - (n-1)E, pulled back by both wall maps
  friend bool operator==(const WallDatum&, const WallDatum&) = default;
};

struct SpaceDescriptor {
  int index = 0;
  Rational chamber_lo;
  Rational chamber_hi;
  int dim = 0;  // -1 when the space is empty
  bool empty = false;
  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

struct FinalTarget {
  std::string label;  // "M_C(2,D)", or "M_1" for the odd-degree genus-0 end
  int dim = 0;
  bool contraction = false;  // the last map is a contraction iff d > 2g-2
  DivClass series;
  friend bool operator==(const FinalTarget&, const FinalTarget&) = default;
};

struct TowerReport {
  int g = 0;
  int d = 0;
  int ambient_dim = 0;  // d + g - 2
  std::vector<WallDatum> walls;        // ascending c, matching critical_values
  std::vector<SpaceDescriptor> spaces; // X_0 .. X_{floor((d-1)/2)}
  FinalTarget final_target;
};

// Requires g >= 0, d >= 1.
TowerReport tower(int g, int d);

// Requires c in Gamma(d).
WallDatum wall_datum(int g, int d, int c);

// Series defining the maps out of X_k: FPlus (k+1)H - kE (valid while the
// target wall d-2k-2 exists), FMinus kH - (k-1)E (k >= 1), Final
// dH - (d-2)E (k the last index).
DivClass series_label(int d, int k, SeriesDirection dir);

// Dimension of the projectivized space of sections cut twice at a
// degree-k stratum point: d - 2k + g - 2, possibly -1 (empty) at genus 0.
// Requires k >= 1 and d - 2k > 0.
int terracini_fiber_dim(int g, int d, int k);

struct SecantDims {
  int dim = 0;
  int ambient_codim = 0;
  friend bool operator==(const SecantDims&, const SecantDims&) = default;
};

// (2k-1, d+g-2k-1) for the k-th secant stratum; requires 1 <= k, 2k <= d-1.
SecantDims secant_dims(int g, int d, int k);

}  // namespace pairflip
