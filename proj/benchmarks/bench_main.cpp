#include <benchmark/benchmark.h>

#include "corrgraph/density.hpp"
#include "corrgraph/detection.hpp"
#include "corrgraph/orbits.hpp"
#include "corrgraph/sampling.hpp"

namespace {

using namespace corrgraph;

void BM_SampleEr(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    Graph g = sample_er(n, 4.0 / n, RngSeed{7, stream++});
    benchmark::DoNotOptimize(g.m());
  }
}
BENCHMARK(BM_SampleEr)->Arg(1000)->Arg(2000)->Arg(5000);

void BM_DensestExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = sample_er(n, 4.0 / n, RngSeed{7, 1});
  for (auto _ : state) {
    DensestResult r = densest_exact(g);
    benchmark::DoNotOptimize(r.density.num);
  }
}
BENCHMARK(BM_DensestExact)->Arg(500)->Arg(1000)->Arg(2000);

void BM_GreedyPeel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = sample_er(n, 4.0 / n, RngSeed{7, 2});
  for (auto _ : state) {
    DensestResult r = greedy_peel(g);
    benchmark::DoNotOptimize(r.density.num);
  }
}
BENCHMARK(BM_GreedyPeel)->Arg(500)->Arg(2000);

void BM_KCore(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph g = sample_er(n, 2.0 / n, RngSeed{7, 3});
  for (auto _ : state) {
    Graph core = k_core(g, 2);
    benchmark::DoNotOptimize(core.m());
  }
}
BENCHMARK(BM_KCore)->Arg(5000);

void BM_OrbitDecomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitRng rng(RngSeed{7, 4});
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.below(i + 1)]);
  Bijection sigma(perm);
  for (auto _ : state) {
    OrbitDecomposition d = orbit_decomposition(sigma);
    benchmark::DoNotOptimize(d.orbits.size());
  }
}
BENCHMARK(BM_OrbitDecomposition)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
