// Serial reference vs OpenMP paths of the grid kernels.

#include "unicob/kernels.hpp"

#include <benchmark/benchmark.h>

namespace {

using unicob::Exec;

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "openmp" : "serial"); }

void BM_MilnorGridX(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(unicob::milnor_grid_x(9, exec_of(state)));
  label(state);
}
BENCHMARK(BM_MilnorGridX)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BlowupGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(unicob::blowup_grid(10, exec_of(state)));
  label(state);
}
BENCHMARK(BM_BlowupGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GeneratorSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(unicob::verify_generators(2, 30, false, 0, exec_of(state)));
  label(state);
}
BENCHMARK(BM_GeneratorSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ResidueSweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(unicob::residue_sweep_exhaustive(150, {2, 3, 5, 7}, 3, exec_of(state)));
  }
  label(state);
}
BENCHMARK(BM_ResidueSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Congruences(benchmark::State& state) {
  const auto jobs = unicob::congruence_jobs({2, 3, 5, 7, 11, 13}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(unicob::run_congruences(jobs, exec_of(state)));
  label(state);
}
BENCHMARK(BM_Congruences)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
