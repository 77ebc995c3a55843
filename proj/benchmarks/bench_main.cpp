#include <benchmark/benchmark.h>

#include "shuffle_spectra/chain.hpp"
#include "shuffle_spectra/mixing.hpp"
#include "shuffle_spectra/montecarlo.hpp"
#include "shuffle_spectra/spectrum.hpp"

namespace ss = shuffle_spectra;

static void BM_NuScaled(benchmark::State& state) {
  const ss::NuKey key(ss::Partition({6, 4, 3, 2, 1}), 4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ss::nu(key, ss::NumericMode::scaled));
}
BENCHMARK(BM_NuScaled)->Arg(1)->Arg(8)->Arg(64);

static void BM_NuExact(benchmark::State& state) {
  const ss::NuKey key(ss::Partition({6, 4, 3, 2, 1}), 4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ss::nu(key, ss::NumericMode::exact));
}
BENCHMARK(BM_NuExact)->Arg(1)->Arg(8)->Arg(64);

static void BM_FormulaSpectrum(benchmark::State& state) {
  ss::SpectrumOptions options;
  options.mode = ss::NumericMode::scaled;
  options.use_cache = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(ss::formula_spectrum(static_cast<int>(state.range(0)), 4, options));
}
BENCHMARK(BM_FormulaSpectrum)->Args({8, 0})->Args({8, 1})->Args({10, 0})->Args({10, 1})->Unit(benchmark::kMillisecond);

static void BM_FirstRowHookSpectrum(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ss::first_row_hook_spectrum(static_cast<int>(state.range(0)), 32, ss::NumericMode::scaled));
  }
}
BENCHMARK(BM_FirstRowHookSpectrum)->Arg(100)->Arg(10000);

static void BM_OracleSpectrum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ss::oracle_spectrum(static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_OracleSpectrum)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_StepDistribution(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ss::step_distribution(7, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_StepDistribution)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_L2LowerCurve(benchmark::State& state) {
  const std::vector<long> grid{1000, 10000, 100000};
  for (auto _ : state) benchmark::DoNotOptimize(ss::l2_lower_sq(static_cast<int>(state.range(0)), 8, grid));
}
BENCHMARK(BM_L2LowerCurve)->Arg(100)->Arg(1000);

static void BM_UntouchedStatistic(benchmark::State& state) {
  ss::SimConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.k = 4;
  cfg.t = cfg.n;
  cfg.trials = 200;
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(ss::untouched_statistic(cfg));
}
BENCHMARK(BM_UntouchedStatistic)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
