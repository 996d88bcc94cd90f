#include "fusion/constructions.hpp"
#include "fusion/frame.hpp"
#include "fusion/moments.hpp"
#include "fusion/optimizer.hpp"
#include "fusion/potential.hpp"

#include <benchmark/benchmark.h>

using namespace fusion;

namespace {

WeightedFrame random_planes(int n, int k, int d, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Subspace> s;
  for (int i = 0; i < n; ++i) s.push_back(haar_random(d, k, rng));
  return WeightedFrame::uniform(std::move(s));
}

void BM_HaarRandom(benchmark::State& state) {
  Rng rng(1);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(haar_random(d, d / 2, rng));
}
BENCHMARK(BM_HaarRandom)->Arg(4)->Arg(8)->Arg(16);

void BM_Ffp(benchmark::State& state) {
  const WeightedFrame f = random_planes(static_cast<int>(state.range(0)), 2, 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ffp(f, 3));
}
BENCHMARK(BM_Ffp)->Arg(16)->Arg(64)->Arg(256);

void BM_CertifyTight(benchmark::State& state) {
  const WeightedFrame f = catalog("mub-planes-r4");
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_tight(f, p));
}
BENCHMARK(BM_CertifyTight)->DenseRange(1, 4);

void BM_Gradient(benchmark::State& state) {
  const WeightedFrame f = random_planes(static_cast<int>(state.range(0)), 2, 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ffp_gradient(f, 2));
}
BENCHMARK(BM_Gradient)->Arg(12)->Arg(48);

void BM_Quadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(t_moments_quadrature(2, 2, 6, 3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Quadrature)->Arg(20)->Arg(40);

void BM_MonteCarlo(benchmark::State& state) {
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(t_moment_monte_carlo(3, 3, 7, 2, 10000, rng));
}
BENCHMARK(BM_MonteCarlo);

void BM_CloseGroupF4(benchmark::State& state) {
  const auto gens = weyl_f4_generators();
  for (auto _ : state) benchmark::DoNotOptimize(close_group(gens));
}
BENCHMARK(BM_CloseGroupF4)->Unit(benchmark::kMillisecond);

void BM_InvarianceF4(benchmark::State& state) {
  const MatrixGroup g = close_group(weyl_f4_generators());
  for (auto _ : state) benchmark::DoNotOptimize(invariance_check(g, 2));
}
BENCHMARK(BM_InvarianceF4)->Unit(benchmark::kMillisecond);

void BM_Minimize(benchmark::State& state) {
  OptimizerConfig cfg;
  cfg.n = 3;
  cfg.k = 1;
  cfg.d = 2;
  cfg.p = 2;
  cfg.restarts = 4;
  for (auto _ : state) {
    Rng rng(5);
    benchmark::DoNotOptimize(minimize_ffp(cfg, rng));
  }
}
BENCHMARK(BM_Minimize)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
