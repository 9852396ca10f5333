#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairflip/rational.hpp"

namespace pairflip {

// Discrete shadow of a section-bundle triple: (r1, d1) for the trivial
// factor carrying the section, (r2, d2) for the bundle. The rank-2 pair
// itself is (1, 2, 0, d); its distinguished subobjects are (1, 1, 0, a),
// (0, 1, 0, b) and (0, 2, 0, d).
struct TripleInvariants {
  int r1 = 0;
  int r2 = 0;
  int d1 = 0;
  int d2 = 0;

  friend bool operator==(const TripleInvariants&, const TripleInvariants&) = default;
  friend TripleInvariants operator+(const TripleInvariants& x, const TripleInvariants& y) {
    return {x.r1 + y.r1, x.r2 + y.r2, x.d1 + y.d1, x.d2 + y.d2};
  }
};

// sigma-slope (d1 + d2 + sigma*(r1 + r2)) / r2; DomainError when r2 = 0.
Rational mu_sigma(const TripleInvariants& t, const Rational& sigma);

// Numeric invariants of a rank-2 pair: bundle degree d, degree a of the
// divisor of zeros of the section, maximal line subbundle degree b.
// Valid when 0 <= a <= b <= max(a, d - a).
struct PairInvariants {
  int d = 0;
  int a = 0;
  int b = 0;

  void validate() const;
  [[nodiscard]] TripleInvariants triple() const { return {1, 2, 0, d}; }
};

enum class Status { Stable, StrictlySemistable, Unstable };
enum class SubobjectKind { SectionLine, PlainLine, FullBundle };

[[nodiscard]] std::string to_string(Status s);
[[nodiscard]] std::string to_string(SubobjectKind k);

struct Subobject {
  SubobjectKind kind;
  TripleInvariants inv;
  Rational slope;  // at the queried sigma
};

// Associated graded at a wall: (O,s,O(A)) + (0,0,O(D-A)) with deg A = n.
struct JhGraded {
  int deg_a = 0;
  int d = 0;
  [[nodiscard]] std::string str() const;
  friend bool operator==(const JhGraded&, const JhGraded&) = default;
};

struct StabilityVerdict {
  Status status;
  // Wall index n with sigma = d - 2n, when strict semistability happens at
  // an integer sigma of that parity (so at sigma in Gamma, at sigma = d,
  // and at sigma = 0 for even d).
  std::optional<int> wall;
  // For StrictlySemistable: a subobject of equal slope (SectionLine
  // preferred over PlainLine over FullBundle when several bind).
  // For Unstable: the subobject of maximal slope, same tie order.
  std::optional<Subobject> destabilizer;
  // Absent at sigma = 0, where no Jordan-Hoelder filtration exists.
  std::optional<JhGraded> jh_graded;
};

// Critical values Gamma = { c : 0 < c < d, c == d mod 2 }, ascending.
std::vector<int> critical_values(int d);

// Requires 0 <= sigma <= d. Stable iff sigma > 0, a < (d-sigma)/2 and
// b < (d+sigma)/2; semistable with <=.
StabilityVerdict classify_pair(const PairInvariants& p, const Rational& sigma);

// Same verdict logic without the sigma range check; outside [0, d] every
// pair is unstable.
StabilityVerdict classify_pair_raw(const PairInvariants& p, const Rational& sigma);

// Two-step Harder-Narasimhan data for an unstable pair. The quotient is
// absent when the destabilizer is the full bundle (the quotient (O,0,0)
// has no bundle part, hence no slope).
struct HnFiltration {
  Subobject destabilizer;
  std::optional<TripleInvariants> quotient;
  std::optional<Rational> quotient_slope;
  Rational pair_slope;
};

HnFiltration hn_filtration(const PairInvariants& p, const Rational& sigma);
HnFiltration hn_filtration_raw(const PairInvariants& p, const Rational& sigma);

// Chamber of a non-critical sigma in (0, d): bracketing walls (or the 0/d
// boundary) and the tower index k with M_sigma = X_k.
struct Chamber {
  Rational lo;
  Rational hi;
  int index = 0;
};

Chamber chamber_of(const Rational& sigma, int d);

}  // namespace pairflip
