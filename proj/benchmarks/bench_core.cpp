// Microbenchmarks for the hot paths: exact linear algebra, slope
// classification, tower assembly, flip certificates and probe orders.
// Inputs are drawn once from a seeded sampler so runs are comparable.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "pairflip/catalecticant.hpp"
#include "pairflip/divisor_calculus.hpp"
#include "pairflip/matrix.hpp"
#include "pairflip/pair_stability.hpp"
#include "pairflip/rational.hpp"
#include "pairflip/sampler.hpp"
#include "pairflip/wall_tower.hpp"

namespace {

using namespace pairflip;

RatMatrix random_square(std::size_t n, std::uint64_t seed) {
  Sampler s(seed);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = s.rational();
  return m;
}

void BM_MatrixRank(benchmark::State& state) {
  const auto m = random_square(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_MatrixRank)->Arg(4)->Arg(8)->Arg(12);

void BM_MatrixDet(benchmark::State& state) {
  const auto m = random_square(static_cast<std::size_t>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_MatrixDet)->Arg(4)->Arg(8)->Arg(12);

void BM_HankelRank(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Sampler s(17);
  const ProjPoint p = secant_point(d, random_witness(d, d / 4 + 1, s));
  for (auto _ : state) benchmark::DoNotOptimize(hankel_rank(d, d / 2, p));
}
BENCHMARK(BM_HankelRank)->Arg(8)->Arg(12)->Arg(16);

void BM_ClassifyGrid(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    int stable = 0;
    for (int a = 0; a <= d / 2; ++a)
      for (int j = 0; j <= 4 * d; ++j) {
        const StabilityVerdict v =
            classify_pair(PairInvariants{d, a, a}, Rational(j, 4));
        stable += v.status == Status::Stable;
      }
    benchmark::DoNotOptimize(stable);
  }
}
BENCHMARK(BM_ClassifyGrid)->Arg(10)->Arg(20);

void BM_Tower(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tower(2, d));
}
BENCHMARK(BM_Tower)->Arg(10)->Arg(40);

void BM_CertifySweep(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    int certified = 0;
    for (int k = 2; 2 * k < d; ++k)
      certified += certify_log_flip(2, d, k).certified;
    benchmark::DoNotOptimize(certified);
  }
}
BENCHMARK(BM_CertifySweep)->Arg(12)->Arg(20);

void BM_DetMultiplicity(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Sampler s(19);
  const ProjPoint p = secant_point(d, random_witness(d, 1, s));
  const std::vector<int> cols{1, 2, 3};
  for (auto _ : state)
    benchmark::DoNotOptimize(det_multiplicity(d, 3, cols, p, 5));
}
BENCHMARK(BM_DetMultiplicity)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
