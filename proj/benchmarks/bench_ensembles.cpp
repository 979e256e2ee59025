#include <benchmark/benchmark.h>

#include "sjack/ensembles.hpp"

using namespace sjack;

static void BM_SampleJacobi(benchmark::State& state) {
  EnsembleSpec spec;
  spec.N = static_cast<int>(state.range(0));
  spec.lambda1 = 0.5;
  spec.lambda2 = 1.5;
  std::mt19937_64 rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(sample_ensemble(spec, rng));
}
BENCHMARK(BM_SampleJacobi)->Range(2, 64);

static void BM_SampleCircularJacobi(benchmark::State& state) {
  EnsembleSpec spec;
  spec.family = Family::CircularJacobi;
  spec.N = static_cast<int>(state.range(0));
  spec.b_cj = 1;
  std::mt19937_64 rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(sample_ensemble(spec, rng));
}
BENCHMARK(BM_SampleCircularJacobi)->Range(2, 64);

static void BM_MonteCarloRatio(benchmark::State& state) {
  EnsembleSpec spec;
  spec.N = 3;
  const RatioQuery q{{0.3}, {0.2}, RatioForm::OneMinusTX};
  for (auto _ : state) benchmark::DoNotOptimize(mc_ratio_expectation(spec, q, state.range(0), 1, 1).mean);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloRatio)->Range(1 << 10, 1 << 16);
