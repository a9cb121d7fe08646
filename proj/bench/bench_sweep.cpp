#include <benchmark/benchmark.h>

#include <cmath>

#include "histkit/sweep.hpp"

using namespace histkit;

namespace {

SweepSpec spec_for(std::size_t n) {
  SweepSpec s;
  s.g = GridAxis{0.0, 1.0, n};
  s.theta = GridAxis{0.0, M_PI, n};
  s.outputs.boundary = true;
  return s;
}

void BM_SweepSerial(benchmark::State& state) {
  const SweepSpec spec = spec_for(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_grid_serial(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
  const SweepSpec spec = spec_for(static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_grid(spec, threads));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_Point(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_point(0.6, 1.2));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)
    ->ArgsProduct({{20, 50}, {1, 2, 4, 0}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_Point)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
