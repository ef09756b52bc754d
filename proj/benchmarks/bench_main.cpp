#include <benchmark/benchmark.h>

#include "lpl/connectivity.hpp"
#include "lpl/constructors.hpp"
#include "lpl/replacement.hpp"

namespace {

using namespace lpl;

void BM_EdgeConnectivityHypercube(benchmark::State& state) {
  Graph g = hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(edge_connectivity(g).value);
}
BENCHMARK(BM_EdgeConnectivityHypercube)->Arg(4)->Arg(6)->Arg(8);

void BM_LambdaPrimeHypercube(benchmark::State& state) {
  Graph g = hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(restricted_edge_connectivity(g).value);
}
BENCHMARK(BM_LambdaPrimeHypercube)->Arg(3)->Arg(4)->Arg(5);

void BM_LambdaPrimeCccTransitive(benchmark::State& state) {
  Graph q = hypercube(static_cast<int>(state.range(0)));
  auto rot = default_rotation_map(q, RotationStrategy::HypercubeDims);
  Graph g = replacement_product(q, rot, cycle(static_cast<int>(state.range(0)))).graph;
  LambdaPrimeOptions opts;
  opts.use_vertex_transitivity = true;
  for (auto _ : state)
    benchmark::DoNotOptimize(restricted_edge_connectivity(g, opts).value);
}
BENCHMARK(BM_LambdaPrimeCccTransitive)->Arg(4)->Arg(5)->Arg(6);

void BM_ReplacementProduct(benchmark::State& state) {
  Graph q = hypercube(static_cast<int>(state.range(0)));
  auto rot = default_rotation_map(q, RotationStrategy::HypercubeDims);
  Graph c = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(replacement_product(q, rot, c));
}
BENCHMARK(BM_ReplacementProduct)->Arg(4)->Arg(8)->Arg(10);

void BM_BruteForceLambdaPrime(benchmark::State& state) {
  Graph g = circulant(static_cast<int>(state.range(0)), {1, 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(restricted_edge_connectivity_bruteforce(g));
}
BENCHMARK(BM_BruteForceLambdaPrime)->Arg(10)->Arg(13)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
