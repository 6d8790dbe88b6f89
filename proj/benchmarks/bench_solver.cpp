#include <benchmark/benchmark.h>

#include "kforest/generate.hpp"
#include "kforest/kforest_exact.hpp"
#include "kforest/pseudoforest.hpp"
#include "kforest/solver.hpp"

namespace {

void BM_solve_gnm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  kforest::MultiGraph g = kforest::generate_gnm(n, 10 * n, 42);
  for (auto _ : state) {
    auto [fam, stats] = kforest::forests(g, k);
    benchmark::DoNotOptimize(fam.size());
  }
}
BENCHMARK(BM_solve_gnm)
    ->Args({200, 2})
    ->Args({1000, 3})
    ->Args({5000, 3})
    ->Unit(benchmark::kMillisecond);

void BM_solve_ktrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  kforest::MultiGraph g = kforest::generate_ktrees(n, k, 42);
  for (auto _ : state) {
    auto [fam, stats] = kforest::forests(g, k);
    benchmark::DoNotOptimize(fam.size());
  }
}
BENCHMARK(BM_solve_ktrees)->Args({200, 5})->Unit(benchmark::kMillisecond);

void BM_pseudoforest_maxflow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = 3;
  kforest::MultiGraph g = kforest::generate_gnm(n, 10 * n, 7);
  for (auto _ : state) {
    kforest::Orientation empty(g);
    auto res = kforest::pseudoforests(g, empty, k);
    benchmark::DoNotOptimize(res.edges.size());
  }
}
BENCHMARK(BM_pseudoforest_maxflow)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_solve_kforest_exact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = 3;
  kforest::MultiGraph g = kforest::generate_gnm(n, 10 * n, 9);
  for (auto _ : state) {
    auto fam = kforest::solve_kforest(g, k);
    benchmark::DoNotOptimize(fam.size());
  }
}
BENCHMARK(BM_solve_kforest_exact)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
