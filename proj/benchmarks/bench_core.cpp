#include <benchmark/benchmark.h>

#include "moran/exactmath.hpp"
#include "moran/measure.hpp"
#include "moran/oracle.hpp"
#include "moran/spectra.hpp"

using namespace moran;

static void BM_Truncate(benchmark::State& state) {
  const SystemConfig config({{12, 2, 1}, {2, 3, 4}, {6, 2, 1}});
  const SymbolicWord word({1}, {2, 3});
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncate(config, word, depth));
}
BENCHMARK(BM_Truncate)->Arg(2)->Arg(4)->Arg(6);

static void BM_RootSum(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  std::vector<std::int64_t> exps;
  for (std::int64_t k = 0; k < n; k += 3) exps.push_back(k);
  for (std::int64_t k = 0; k < n; k += 5) exps.push_back(k);
  const RootSum sum(n, exps);
  for (auto _ : state) benchmark::DoNotOptimize(root_sum_is_zero(sum));
}
BENCHMARK(BM_RootSum)->Arg(60)->Arg(210)->Arg(420);

static void BM_TowerVerify(benchmark::State& state) {
  std::vector<StagePair> stages;
  for (std::int64_t k = 0; k < state.range(0); ++k) stages.push_back(k % 2 ? StagePair{6, 3, 1} : StagePair{4, 2, 3});
  const DiscreteMeasure mu = convolve_stages(std::span<const StagePair>(stages));
  const SpectrumCandidate tower = build_tower_spectrum(stages);
  for (auto _ : state) benchmark::DoNotOptimize(verify_spectrum_finite(mu, tower, stages));
}
BENCHMARK(BM_TowerVerify)->Arg(2)->Arg(3)->Arg(4);

static void BM_CompatibleSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_compatible_L(12, 3, 5, 180));
}
BENCHMARK(BM_CompatibleSearch);

BENCHMARK_MAIN();
