#include <benchmark/benchmark.h>

#include "phonograd/emit.hpp"
#include "phonograd/report.hpp"
#include "phonograd/sweep.hpp"

using namespace phonograd;

static void BM_SolveProfile(benchmark::State& state) {
  const Scenario s = preset("earth-1e8");
  const auto trap = perturb_trap(s.trap, s.source);
  for (auto _ : state) benchmark::DoNotOptimize(solve_profile(s.condensate, trap));
}
BENCHMARK(BM_SolveProfile);

static void BM_RunReport(benchmark::State& state) {
  const Scenario s = preset("earth-1e6");
  for (auto _ : state) benchmark::DoNotOptimize(run_report(s));
}
BENCHMARK(BM_RunReport);

static void BM_RunComparison(benchmark::State& state) {
  const Scenario s = preset("earth-1e8");
  for (auto _ : state) benchmark::DoNotOptimize(run_comparison(s));
}
BENCHMARK(BM_RunComparison);

static void BM_EmitCsv(benchmark::State& state) {
  const auto r = run_report(preset("earth-1e6"));
  for (auto _ : state) benchmark::DoNotOptimize(emit(r, Format::kCsv));
}
BENCHMARK(BM_EmitCsv);

// Includes the YAML round trip each row makes through sweep_point.
static void BM_Sweep(benchmark::State& state) {
  SweepSpec spec;
  spec.base = preset("sphere20mg-1e8");
  spec.axis = "source.R";
  spec.values = log_range(8e-4, 1e-1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, static_cast<unsigned>(state.range(1))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Args({256, 1})->Args({256, 4})->UseRealTime();

BENCHMARK_MAIN();
