#include "pairflip/pair_stability.hpp"

#include <algorithm>
#include <sstream>

#include "pairflip/errors.hpp"

namespace pairflip {

namespace {

std::string pair_str(const PairInvariants& p) {
  std::ostringstream os;
  os << "(d=" << p.d << ", a=" << p.a << ", b=" << p.b << ")";
  return os.str();
}

Subobject make_sub(SubobjectKind kind, const PairInvariants& p,
                   const Rational& sigma) {
  TripleInvariants t;
  switch (kind) {
    case SubobjectKind::SectionLine: t = {1, 1, 0, p.a}; break;
    case SubobjectKind::PlainLine: t = {0, 1, 0, p.b}; break;
    case SubobjectKind::FullBundle: t = {0, 2, 0, p.d}; break;
  }
  return {kind, t, mu_sigma(t, sigma)};
}

// Highest slope wins. Ties go to the maximal subobject of that slope: the
// full bundle contains every plain line, and the section line is preferred
// among the rest because it carries the section.
Subobject max_slope_sub(const PairInvariants& p, const Rational& sigma) {
  Subobject best = make_sub(SubobjectKind::SectionLine, p, sigma);
  for (const auto kind : {SubobjectKind::FullBundle, SubobjectKind::PlainLine}) {
    Subobject s = make_sub(kind, p, sigma);
    if (s.slope > best.slope) best = s;
  }
  return best;
}

}  // namespace

Rational mu_sigma(const TripleInvariants& t, const Rational& sigma) {
  if (t.r2 == 0) throw DomainError("mu_sigma: bundle rank is zero");
  return (Rational(t.d1 + t.d2) + sigma * Rational(t.r1 + t.r2)) / Rational(t.r2);
}

void PairInvariants::validate() const {
  if (0 <= a && a <= b && b <= std::max(a, d - a)) return;
  throw DomainError("pair invariants violate 0 <= a <= b <= max(a, d-a): " +
                    pair_str(*this));
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Stable: return "Stable";
    case Status::StrictlySemistable: return "StrictlySemistable";
    case Status::Unstable: return "Unstable";
  }
  return "?";
}

std::string to_string(SubobjectKind k) {
  switch (k) {
    case SubobjectKind::SectionLine: return "SectionLine";
    case SubobjectKind::PlainLine: return "PlainLine";
    case SubobjectKind::FullBundle: return "FullBundle";
  }
  return "?";
}

std::string JhGraded::str() const {
  std::ostringstream os;
  os << "(O,s,O(A)) + (0,0,O(D-A)), deg A = " << deg_a
     << ", deg(D-A) = " << d - deg_a;
  return os.str();
}

std::vector<int> critical_values(int d) {
  std::vector<int> out;
  for (int c = (d % 2 == 0) ? 2 : 1; c < d; c += 2) out.push_back(c);
  return out;
}

StabilityVerdict classify_pair_raw(const PairInvariants& p, const Rational& sigma) {
  p.validate();
  const Rational d(p.d);
  // a < (d-sigma)/2 etc., cleared of denominators.
  const Rational lhs_a = Rational(2 * p.a) + sigma;
  const Rational lhs_b = Rational(2 * p.b) - sigma;
  const bool semistable = sigma.sign() >= 0 && lhs_a <= d && lhs_b <= d;
  const bool stable = sigma.sign() > 0 && lhs_a < d && lhs_b < d;

  StabilityVerdict v;
  if (stable) {
    v.status = Status::Stable;
    return v;
  }
  if (!semistable) {
    v.status = Status::Unstable;
    v.destabilizer = max_slope_sub(p, sigma);
    return v;
  }

  v.status = Status::StrictlySemistable;
  if (lhs_a == d) {
    v.destabilizer = make_sub(SubobjectKind::SectionLine, p, sigma);
  } else if (lhs_b == d) {
    v.destabilizer = make_sub(SubobjectKind::PlainLine, p, sigma);
  } else {
    v.destabilizer = make_sub(SubobjectKind::FullBundle, p, sigma);
  }
  // sigma = d - 2n for integer n >= 0 pins the wall; the graded object
  // (O,s,O(A)) + (0,0,O(D-A)) with deg A = n exists only for sigma > 0.
  if (sigma.is_integer()) {
    const long s = sigma.to_long();
    if ((p.d - s) % 2 == 0) {
      const int n = static_cast<int>((p.d - s) / 2);
      v.wall = n;
      if (sigma.sign() > 0) v.jh_graded = JhGraded{n, p.d};
    }
  }
  return v;
}

StabilityVerdict classify_pair(const PairInvariants& p, const Rational& sigma) {
  if (sigma.sign() < 0 || sigma > Rational(p.d))
    throw DomainError("classify_pair: sigma outside [0, d]; no semistable "
                      "pairs exist there");
  return classify_pair_raw(p, sigma);
}

HnFiltration hn_filtration_raw(const PairInvariants& p, const Rational& sigma) {
  const StabilityVerdict v = classify_pair_raw(p, sigma);
  if (v.status != Status::Unstable)
    throw DomainError("hn_filtration: pair is semistable at sigma = " +
                      sigma.str());
  HnFiltration hn{max_slope_sub(p, sigma), {}, {}, mu_sigma(p.triple(), sigma)};
  switch (hn.destabilizer.kind) {
    case SubobjectKind::SectionLine:
      hn.quotient = TripleInvariants{0, 1, 0, p.d - p.a};
      break;
    case SubobjectKind::PlainLine:
      hn.quotient = TripleInvariants{1, 1, 0, p.d - p.b};
      break;
    case SubobjectKind::FullBundle:
      break;  // quotient (O,0,0) carries no slope
  }
  if (hn.quotient) hn.quotient_slope = mu_sigma(*hn.quotient, sigma);
  return hn;
}

HnFiltration hn_filtration(const PairInvariants& p, const Rational& sigma) {
  if (sigma.sign() < 0 || sigma > Rational(p.d))
    throw DomainError("hn_filtration: sigma outside [0, d] (use the raw "
                      "variant to probe there)");
  return hn_filtration_raw(p, sigma);
}

Chamber chamber_of(const Rational& sigma, int d) {
  if (sigma.sign() <= 0 || sigma >= Rational(d))
    throw DomainError("chamber_of: sigma outside (0, d)");
  Chamber ch{0, Rational(d), 0};
  for (const int c : critical_values(d)) {
    if (sigma == Rational(c))
      throw DomainError("chamber_of: sigma lies on the wall c = " +
                        std::to_string(c));
    if (Rational(c) < sigma) {
      ch.lo = std::max(ch.lo, Rational(c));
    } else {
      ch.hi = std::min(ch.hi, Rational(c));
      ++ch.index;  // X_k sits below k walls counted from the top
    }
  }
  return ch;
}

}  // namespace pairflip
