#include <benchmark/benchmark.h>

#include "sjack/jack.hpp"

using namespace sjack;

// Fresh alpha per iteration so the expansion cache never hits.
static void BM_JackInMonomial(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  const Partition k = partitions_of(w)[static_cast<std::size_t>(w) / 2];
  long salt = 1;
  for (auto _ : state) {
    auto p = jack_in_monomial(k, Scalar(2 * salt + 1, salt + 2));
    benchmark::DoNotOptimize(p.terms.size());
    ++salt;
  }
}
BENCHMARK(BM_JackInMonomial)->DenseRange(2, 10, 2);

static void BM_SuperJackEval(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  const SuperPoint pt{{Scalar(1, 3), Scalar(2, 7)}, {Scalar(1, 5)}};
  const auto shapes = enumerate_partitions(w, FatHook{2, 1});
  for (auto _ : state)
    for (const auto& k : shapes) benchmark::DoNotOptimize(super_jack_eval(k, Scalar(2), pt));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(shapes.size()));
}
BENCHMARK(BM_SuperJackEval)->DenseRange(2, 8, 2);

static void BM_PartitionEnumeration(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(w, FatHook{2, 2}).size());
}
BENCHMARK(BM_PartitionEnumeration)->Range(8, 32);

BENCHMARK_MAIN();
