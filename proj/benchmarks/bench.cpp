#include <benchmark/benchmark.h>

#include "ringecho/ringecho.hpp"

using namespace ringecho;

namespace {

TimeGrid grid_of(std::size_t count) { return TimeGrid{-24.0, 0.125, count}; }

void BM_cavity_reflection(benchmark::State& state) {
  const CavityParams c{0.3, 0.0005, 0.1, 0};
  double w = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cavity_reflection(w, c));
    w += 1e-6;
  }
}
BENCHMARK(BM_cavity_reflection);

void BM_array_transfer(benchmark::State& state) {
  const ArraySpec spec = build_comb_array(61, 0.1, 0.0005, 0.1, true);
  const TimeGrid grid = grid_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(array_transfer(spec, grid));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_array_transfer)->RangeMultiplier(4)->Range(1 << 12, 1 << 20)->Complexity();

void BM_fourier_round_trip(benchmark::State& state) {
  const TimeGrid grid = grid_of(static_cast<std::size_t>(state.range(0)));
  const SampledSignal x = gaussian_pulse(grid, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(synthesize(analyze(x)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_fourier_round_trip)->RangeMultiplier(4)->Range(1 << 12, 1 << 20)->Complexity();

void BM_propagate(benchmark::State& state) {
  const ArraySpec spec = build_comb_array(61, 0.1, 0.0005, 0.1, true);
  const TimeGrid grid = grid_of(static_cast<std::size_t>(state.range(0)));
  const SampledSignal in = gaussian_pulse(grid, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(spec, in));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_propagate)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Complexity();

void BM_integrate(benchmark::State& state) {
  const ArraySpec spec = build_comb_array(61, 0.1, 0.0005, 0.1, true);
  const TimeGrid grid{-24.0, 0.03125,
                      static_cast<std::size_t>(state.range(0))};
  const SampledSignal in = gaussian_pulse(grid, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(spec, in));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_integrate)->RangeMultiplier(4)->Range(1 << 12, 1 << 16)->Complexity();

}  // namespace

BENCHMARK_MAIN();
