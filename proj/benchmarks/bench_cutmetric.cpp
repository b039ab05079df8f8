#include <benchmark/benchmark.h>

#include "crosskit/cutmetric.hpp"
#include "crosskit/graph.hpp"

using namespace crosskit;

static void BM_cut_distance_exact(benchmark::State& state) {
  int n = int(state.range(0));
  WeightedGraph a = random_graph(n, 0.5, 1);
  WeightedGraph b = random_graph(n, 0.5, 2);
  for (auto _ : state) {
    auto w = cut_distance_exact(a, b, n);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_cut_distance_exact)->Arg(12)->Arg(16)->Arg(20);

static void BM_cut_distance_heuristic(benchmark::State& state) {
  int n = int(state.range(0));
  WeightedGraph a = random_graph(n, 0.5, 1);
  WeightedGraph b = random_graph(n, 0.5, 2);
  for (auto _ : state) {
    auto w = cut_distance_heuristic(a, b, 8, 7);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_cut_distance_heuristic)->Arg(40)->Arg(80)->Arg(120);

static void BM_fk_partition(benchmark::State& state) {
  int n = int(state.range(0));
  WeightedGraph g = random_graph(n, 0.5, 3);
  FkOptions opt;
  opt.epsilon = 0.10;
  for (auto _ : state) {
    auto rep = fk_partition(g, opt);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_fk_partition)->Arg(40)->Arg(80);

BENCHMARK_MAIN();
