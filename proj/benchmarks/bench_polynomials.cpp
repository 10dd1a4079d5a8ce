#include <benchmark/benchmark.h>

#include "nbpoly/classic_polys.hpp"
#include "nbpoly/complex_engine.hpp"
#include "nbpoly/graph_io.hpp"

using namespace nbpoly;

namespace {

void BM_NeighborhoodFastSparse(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.1, 99);
  for (auto _ : state) benchmark::DoNotOptimize(neighborhood_polynomial(g, Method::Fast));
}
BENCHMARK(BM_NeighborhoodFastSparse)->Arg(24)->Arg(40)->Arg(64);

void BM_NeighborhoodFastCycle(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(neighborhood_polynomial(g, Method::Fast));
}
BENCHMARK(BM_NeighborhoodFastCycle)->Arg(32)->Arg(64);

void BM_NeighborhoodOracle(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 99);
  for (auto _ : state) benchmark::DoNotOptimize(neighborhood_polynomial(g, Method::Oracle));
}
BENCHMARK(BM_NeighborhoodOracle)->Arg(14)->Arg(18);

void BM_IndependentNeighborhoodFast(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.1, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(independent_neighborhood_polynomial(g, Method::Fast));
}
BENCHMARK(BM_IndependentNeighborhoodFast)->Arg(24)->Arg(40);

void BM_IndependenceRecursion(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 13);
  for (auto _ : state) benchmark::DoNotOptimize(independence_polynomial(g));
}
BENCHMARK(BM_IndependenceRecursion)->Arg(20)->Arg(28);

void BM_SubgraphGrowth(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 17);
  for (auto _ : state) benchmark::DoNotOptimize(subgraph_polynomial(g));
}
BENCHMARK(BM_SubgraphGrowth)->Arg(14)->Arg(18);

void BM_SubgraphComponentSweep(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 19);
  for (auto _ : state) benchmark::DoNotOptimize(subgraph_component_polynomial(g));
}
BENCHMARK(BM_SubgraphComponentSweep)->Arg(12)->Arg(16);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 23);
  const std::string bytes = write_graph6(g);
  for (auto _ : state) benchmark::DoNotOptimize(write_graph6(parse_graph6(bytes)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(20)->Arg(64);

}  // namespace
