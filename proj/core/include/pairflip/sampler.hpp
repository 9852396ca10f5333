#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "pairflip/errors.hpp"
#include "pairflip/rational.hpp"

namespace pairflip {

inline constexpr std::uint64_t kDefaultSeed = 424242;

// Deterministic source of small random rationals. Numerator and denominator
// magnitudes are bounded by byte_width bytes so exact arithmetic downstream
// stays cheap. Draws avoid std::uniform_int_distribution on purpose: its
// output is implementation-defined, and identical seeds must reproduce
// identical bytes everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed, int byte_width = 2)
      : gen_(seed) {
    if (byte_width < 1 || byte_width > 7)
      throw DomainError("sampler: byte width out of range");
    bound_ = (1L << (8 * byte_width)) - 1;
  }

  // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  long integer(long lo, long hi) {
    if (lo > hi) throw DomainError("sampler: empty integer range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }

  // Numerator in [-bound, bound], denominator in [1, bound].
  Rational rational() {
    return Rational(integer(-bound_, bound_), integer(1, bound_));
  }

  Rational nonzero() {
    for (;;) {
      Rational r = rational();
      if (!r.is_zero()) return r;
    }
  }

  std::vector<Rational> distinct_rationals(int n) {
    std::set<Rational> seen;
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < n) {
      Rational r = rational();
      if (seen.insert(r).second) out.push_back(r);
    }
    return out;
  }

 private:
  std::mt19937_64 gen_;
  long bound_;
};

}  // namespace pairflip
