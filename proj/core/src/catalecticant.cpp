#include "pairflip/catalecticant.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pairflip/errors.hpp"
#include "pairflip/unipoly.hpp"

namespace pairflip {

namespace {

void require_ambient(int d, const char* who) {
  if (d < 3)
    throw DomainError(std::string(who) + ": needs d >= 3 for a curve spanning "
                      "at least a plane");
}

void check_point(int d, const ProjPoint& p, const char* who) {
  if (static_cast<int>(p.coords.size()) != d - 1)
    throw DomainError(std::string(who) + ": point needs d-1 coordinates");
}

void check_slice(int d, int k, const char* who) {
  if (k < 1 || k > d - 1)
    throw DomainError(std::string(who) + ": slice index outside 1..d-1");
}

void check_cols(int d, int k, const std::vector<int>& cols, const char* who) {
  if (static_cast<int>(cols.size()) != k)
    throw DomainError(std::string(who) + ": a k x k minor needs k columns");
  int prev = 0;
  for (const int c : cols) {
    if (c <= prev || c > d - k)
      throw DomainError(std::string(who) +
                        ": columns must be strictly increasing in 1..d-k");
    prev = c;
  }
}

}  // namespace

ProjPoint ProjPoint::from_coords(std::vector<Rational> c) {
  const auto lead = std::find_if(c.begin(), c.end(),
                                 [](const Rational& x) { return !x.is_zero(); });
  if (lead == c.end())
    throw DomainError("projective point: all coordinates are zero");
  const Rational scale = *lead;
  for (auto& x : c) x /= scale;
  return ProjPoint{std::move(c)};
}

void SecantWitness::validate() const {
  if (params.empty() || params.size() != coeffs.size())
    throw DomainError("secant witness: params/coeffs must be nonempty and "
                      "the same length");
  std::set<Rational> seen(params.begin(), params.end());
  if (seen.size() != params.size())
    throw DomainError("secant witness: parameters must be distinct");
  for (const auto& c : coeffs)
    if (c.is_zero()) throw DomainError("secant witness: zero coefficient");
}

ProjPoint rnc_point(int d, const Rational& t) {
  require_ambient(d, "rnc_point");
  std::vector<Rational> c(static_cast<std::size_t>(d - 1));
  c[0] = 1;
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = c[i - 1] * t;
  return ProjPoint{std::move(c)};
}

ProjPoint rnc_point_infinity(int d) {
  require_ambient(d, "rnc_point");
  std::vector<Rational> c(static_cast<std::size_t>(d - 1), Rational(0));
  c.back() = 1;
  return ProjPoint{std::move(c)};
}

ProjPoint secant_point(int d, const SecantWitness& w) {
  require_ambient(d, "secant_point");
  w.validate();
  std::vector<Rational> acc(static_cast<std::size_t>(d - 1), Rational(0));
  for (std::size_t m = 0; m < w.params.size(); ++m) {
    const ProjPoint nu = rnc_point(d, w.params[m]);
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] += w.coeffs[m] * nu.coords[i];
  }
  return ProjPoint::from_coords(std::move(acc));
}

RatMatrix hankel_matrix(int d, int k, const ProjPoint& p) {
  require_ambient(d, "hankel_matrix");
  check_slice(d, k, "hankel_matrix");
  check_point(d, p, "hankel_matrix");
  RatMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(d - k));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= d - k; ++j)
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          p.coords[static_cast<std::size_t>(i + j - 2)];
  return m;
}

int hankel_rank(int d, int k, const ProjPoint& p) {
  return rank(hankel_matrix(d, k, p));
}

SplittingType splitting_type(int d, const ProjPoint& p) {
  require_ambient(d, "splitting_type");
  check_point(d, p, "splitting_type");
  const int m = hankel_rank(d, d / 2, p);
  return {m, d - m};
}

std::optional<int> det_multiplicity_along(int d, int k,
                                          const std::vector<int>& cols,
                                          const ProjPoint& p,
                                          const std::vector<Rational>& dir) {
  require_ambient(d, "det_multiplicity");
  check_slice(d, k, "det_multiplicity");
  check_point(d, p, "det_multiplicity");
  check_cols(d, k, cols, "det_multiplicity");
  if (static_cast<int>(dir.size()) != d - 1)
    throw DomainError("det_multiplicity: direction needs d-1 coordinates");

  PolyMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i)
    for (int jc = 0; jc < k; ++jc) {
      const std::size_t idx = static_cast<std::size_t>(i + cols[static_cast<std::size_t>(jc)] - 2);
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jc)) =
          UniPoly(std::vector<Rational>{p.coords[idx], dir[idx]});
    }
  return vanishing_order(det(m));
}

std::optional<int> det_multiplicity(int d, int k, const std::vector<int>& cols,
                                    const ProjPoint& p, int probes,
                                    std::uint64_t seed) {
  if (probes < 1) throw DomainError("det_multiplicity: needs probes >= 1");
  Sampler sampler(seed);
  std::optional<int> best;
  for (int t = 0; t < probes; ++t) {
    std::vector<Rational> dir(static_cast<std::size_t>(d - 1));
    do {
      for (auto& x : dir) x = sampler.rational();
    } while (std::all_of(dir.begin(), dir.end(),
                         [](const Rational& x) { return x.is_zero(); }));
    const auto order = det_multiplicity_along(d, k, cols, p, dir);
    if (order && (!best || *order < *best)) best = order;
  }
  return best;
}

namespace {

std::string series_string(int lead, const std::vector<int>& drops) {
  std::ostringstream os;
  if (lead != 1) os << lead;
  os << "H";
  for (std::size_t j = 0; j < drops.size(); ++j) {
    if (drops[j] <= 0) break;
    os << " - ";
    if (drops[j] > 1) os << drops[j];
    os << "E(" << j + 1 << ")";
  }
  return os.str();
}

}  // namespace

std::string minor_divisor_class(int d, int k) {
  require_ambient(d, "minor_divisor_class");
  if (k < 1 || 2 * k > d)
    throw DomainError("minor_divisor_class: slice index outside 1..floor(d/2)");
  std::vector<int> drops;
  for (int j = 1; j < k; ++j) drops.push_back(k - j);
  return series_string(k, drops);
}

std::string w_minor_divisor_class(int d, int l) {
  require_ambient(d, "w_minor_divisor_class");
  if (l < 1 || l > d)
    throw DomainError("w_minor_divisor_class: twist outside 1..d");
  std::vector<int> drops;
  for (int j = 1; l - 2 * j > 0; ++j) drops.push_back(l - 2 * j);
  return series_string(l, drops);
}

ProjPoint random_point(int d, Sampler& s) {
  require_ambient(d, "random_point");
  for (;;) {
    std::vector<Rational> c(static_cast<std::size_t>(d - 1));
    bool nonzero = false;
    for (auto& x : c) {
      x = s.rational();
      nonzero = nonzero || !x.is_zero();
    }
    if (nonzero) return ProjPoint::from_coords(std::move(c));
  }
}

SecantWitness random_witness(int d, int i, Sampler& s) {
  require_ambient(d, "random_witness");
  if (i < 1 || 2 * i > d)
    throw DomainError("random_witness: stratum index outside 1..floor(d/2)");
  SecantWitness w;
  w.params = s.distinct_rationals(i);
  w.coeffs.reserve(static_cast<std::size_t>(i));
  for (int m = 0; m < i; ++m) w.coeffs.push_back(s.nonzero());
  return w;
}

}  // namespace pairflip
