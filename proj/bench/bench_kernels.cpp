// Benchmarks of the OpenMP-parallel kernels against their single-threaded
// reference implementations: all-pairs shortest paths (path_metric vs
// path_metric_serial) and the Fourier quadrature (fourier_identity_check vs
// fourier_identity_check_serial). Both pairs are bit-identical by contract;
// these benchmarks measure the speedup only.

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "csnd/continuous.hpp"
#include "csnd/graph.hpp"
#include "csnd/graph_metric.hpp"

namespace {

// Connected random graph: a spanning random tree plus `extra` chords.
csnd::Graph random_graph(int n, int extra, unsigned seed) {
  std::mt19937 rng(seed);
  csnd::Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    g.add_edge(i, parent(rng));
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int added = 0; added < extra;) {
    int u = any(rng), v = any(rng);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    ++added;
  }
  return g;
}

void bm_path_metric(benchmark::State& state) {
  csnd::Graph g = random_graph(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(csnd::path_metric(g));
}

void bm_path_metric_serial(benchmark::State& state) {
  csnd::Graph g = random_graph(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(csnd::path_metric_serial(g));
}

void bm_fourier(benchmark::State& state) {
  for (auto _ : state)
    for (double t : {0.1, 0.5, 1.0, 2.0, 10.0})
      for (double xi : {0.0, 0.5, 1.0, 5.0, 10.0})
        benchmark::DoNotOptimize(csnd::fourier_identity_check(t, xi));
}

void bm_fourier_serial(benchmark::State& state) {
  for (auto _ : state)
    for (double t : {0.1, 0.5, 1.0, 2.0, 10.0})
      for (double xi : {0.0, 0.5, 1.0, 5.0, 10.0})
        benchmark::DoNotOptimize(csnd::fourier_identity_check_serial(t, xi));
}

}  // namespace

BENCHMARK(bm_path_metric)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_path_metric_serial)
    ->Arg(500)
    ->Arg(1000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(bm_fourier)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_fourier_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
