#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pairflip/matrix.hpp"
#include "pairflip/rational.hpp"
#include "pairflip/sampler.hpp"

namespace pairflip {

// Point of P^{d-2} in coordinates z_1..z_{d-1}, scaled so the first
// nonzero coordinate is 1.
struct ProjPoint {
  std::vector<Rational> coords;

  static ProjPoint from_coords(std::vector<Rational> c);
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

// Parameters and weights of a point written as a combination of curve
// points: sum of coeffs[m] * nu(params[m]), params distinct, coeffs nonzero.
struct SecantWitness {
  std::vector<Rational> params;
  std::vector<Rational> coeffs;

  void validate() const;
};

// nu(t) = (1, t, ..., t^{d-2}); requires d >= 3.
ProjPoint rnc_point(int d, const Rational& t);
ProjPoint rnc_point_infinity(int d);

ProjPoint secant_point(int d, const SecantWitness& w);

// k x (d-k) Hankel slice with entry(i, j) = z_{i+j-1} (1-based indices);
// requires 1 <= k <= d-1. Flat at k and d-k swapped are transposes.
RatMatrix hankel_matrix(int d, int k, const ProjPoint& p);

int hankel_rank(int d, int k, const ProjPoint& p);

// (m, d-m) with m the rank of the widest slice, k = floor(d/2): the
// stratum index of the point, and for points off the deeper strata the
// splitting degrees of the associated bundle.
struct SplittingType {
  int m = 0;
  int complement = 0;
  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

SplittingType splitting_type(int d, const ProjPoint& p);

// Vanishing order at the point of the k x k minor on the columns `cols`
// (1-based, strictly increasing), minimized over `probes` seeded random
// line directions through p. nullopt means the minor vanished identically
// along every probe.
std::optional<int> det_multiplicity(int d, int k, const std::vector<int>& cols,
                                    const ProjPoint& p, int probes,
                                    std::uint64_t seed = kDefaultSeed);

// Same along one explicit direction.
std::optional<int> det_multiplicity_along(int d, int k,
                                          const std::vector<int>& cols,
                                          const ProjPoint& p,
                                          const std::vector<Rational>& dir);

// Class of the determinant of the k-th slice at a generic twist:
// "kH - (k-1)E(1) - ... - E(k-1)". Requires 3 <= d, 1 <= k <= floor(d/2).
std::string minor_divisor_class(int d, int k);

// Rank-2 analogue: "lH - (l-2)E(1) - (l-4)E(2) - ...", coefficients
// max(l-2j, 0). Requires 3 <= d, 1 <= l <= d.
std::string w_minor_divisor_class(int d, int l);

ProjPoint random_point(int d, Sampler& s);

// Witness on the i-th stratum: i distinct parameters, i nonzero weights.
SecantWitness random_witness(int d, int i, Sampler& s);

}  // namespace pairflip
