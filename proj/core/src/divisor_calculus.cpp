#include "pairflip/divisor_calculus.hpp"

#include <algorithm>
#include <sstream>

#include "pairflip/errors.hpp"

namespace pairflip {

std::string DivClass::str() const {
  std::ostringstream os;
  os << h.str() << "H";
  if (e.sign() >= 0)
    os << " + " << e.str() << "E";
  else
    os << " - " << (-e).str() << "E";
  return os.str();
}

namespace {

void require_blowup(int d, const char* who) {
  if (d <= 2)
    throw DomainError(std::string(who) + ": needs d > 2 (no blow-up step)");
}

}  // namespace

DivClass canonical_class(int g, int d) {
  require_blowup(d, "canonical_class");
  return {Rational(-(d + g - 1)), Rational(d + g - 4)};
}

DivClass F_class(int g, int d) {
  (void)g;
  require_blowup(d, "F_class");
  return {Rational(d), Rational(-(d - 2))};
}

Rational pair_ray(const DivClass& c, const RayClass& r) {
  return c.h * r.hB + c.e * r.eB;
}

RayClass extremal_ray(int k, RaySide side) {
  if (k < 2) throw DomainError("extremal_ray: flips start at k = 2");
  if (side == RaySide::Flipping) return {k, Rational(k - 1), Rational(k)};
  return {k, Rational(-(k - 1)), Rational(-k)};
}

Rational lc_threshold(int g, int d, int k) {
  if (d <= 2 * k)
    throw DomainError("lc_threshold: undefined for d <= 2k (the divisor "
                      "multiplicity d-2k is not positive)");
  const int j_lo = std::max(k, 2);
  const int j_hi = last_wall_index(d);
  if (j_lo > j_hi)
    throw DomainError("lc_threshold: no exceptional rows in range");
  Rational best;
  bool have = false;
  for (int j = j_lo; j <= j_hi; ++j) {
    const Rational q(d + g - 2 * j - 1, d - 2 * j);
    if (!have || q < best) {
      best = q;
      have = true;
    }
  }
  return best;
}

std::vector<DiscrepancyRow> discrepancy_table(int g, int d, const Rational& lambda,
                                              int j_lo, int j_hi) {
  if (j_lo < 1 || j_hi > last_wall_index(d) || j_lo > j_hi)
    throw DomainError("discrepancy_table: row range outside 1..floor((d-1)/2)");
  std::vector<DiscrepancyRow> rows;
  rows.reserve(static_cast<std::size_t>(j_hi - j_lo + 1));
  for (int j = j_lo; j <= j_hi; ++j) {
    DiscrepancyRow r;
    r.j = j;
    r.codim = d + g - 2 * j - 1;
    r.mult_f = d - 2 * j;
    r.coeff = Rational(r.codim - 1) - lambda * Rational(r.mult_f);
    rows.push_back(r);
  }
  return rows;
}

FlipCertificate certify_log_flip(int g, int d, int k, const Rational& lambda) {
  if (k < 2) throw DomainError("certify_log_flip: flips start at k = 2");
  if (d <= 2 * k)
    throw DomainError("certify_log_flip: needs d > 2k");

  FlipCertificate cert;
  cert.g = g;
  cert.d = d;
  cert.k = k;
  cert.lambda = lambda;
  cert.threshold = lc_threshold(g, d, k);

  const DivClass adjoint = canonical_class(g, d) + lambda * F_class(g, d);
  cert.b_pairing = pair_ray(adjoint, extremal_ray(k, RaySide::Flipping));
  cert.bplus_pairing = pair_ray(adjoint, extremal_ray(k, RaySide::Flipped));
  cert.lc_rows = discrepancy_table(g, d, lambda, k, last_wall_index(d));

  cert.b_negative = cert.b_pairing.sign() < 0;
  cert.bplus_positive = cert.bplus_pairing.sign() > 0;
  cert.lc_ok = lambda <= cert.threshold;
  for (const auto& row : cert.lc_rows)
    if (row.coeff < Rational(-1)) cert.lc_ok = false;
  cert.certified = cert.b_negative && cert.bplus_positive && cert.lc_ok;
  return cert;
}

FlipCertificate certify_log_flip(int g, int d, int k) {
  return certify_log_flip(g, d, k, lc_threshold(g, d, k));
}

}  // namespace pairflip
