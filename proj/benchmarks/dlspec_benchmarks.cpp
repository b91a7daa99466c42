#include <benchmark/benchmark.h>

#include <random>

#include "dlspec/canonical.hpp"
#include "dlspec/enumerator.hpp"
#include "dlspec/families.hpp"
#include "dlspec/spectral.hpp"
#include "dlspec/verifier.hpp"

namespace {

dlspec::Graph random_connected(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.4);
  for (;;) {
    dlspec::Graph g(n);
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (coin(rng)) g = g.with_edge(u, v);
    if (dlspec::is_connected(g)) return g;
  }
}

void BM_CanonicalForm(benchmark::State& state) {
  const auto g = random_connected(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(dlspec::canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(6, 12, 2);

void BM_CanonicalFormVertexTransitive(benchmark::State& state) {
  const auto g = dlspec::cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dlspec::canonical_form(g));
}
BENCHMARK(BM_CanonicalFormVertexTransitive)->DenseRange(6, 12, 2);

void BM_JacobiEigenvalues(benchmark::State& state) {
  const auto dl = dlspec::distance_laplacian(random_connected(static_cast<int>(state.range(0)), 11));
  for (auto _ : state) benchmark::DoNotOptimize(dlspec::symmetric_eigenvalues(dl));
}
BENCHMARK(BM_JacobiEigenvalues)->RangeMultiplier(2)->Range(8, 32);

void BM_ExactRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto dl = dlspec::distance_laplacian(random_connected(n, 13));
  for (auto _ : state) benchmark::DoNotOptimize(dlspec::exact_integer_multiplicity(dl, n));
}
BENCHMARK(BM_ExactRank)->RangeMultiplier(2)->Range(8, 32);

void BM_Classify(benchmark::State& state) {
  const auto g = random_connected(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(dlspec::classify(g));
}
BENCHMARK(BM_Classify)->DenseRange(6, 12, 2);

void BM_EnumerateConnected(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dlspec::enumerate_connected(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
