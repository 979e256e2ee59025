#include <benchmark/benchmark.h>

#include "sjack/series.hpp"

using namespace sjack;

static void BM_Series2SF1Exact(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  auto spec = SeriesSpec::standard({Scalar(1, 2), Scalar(1, 3)}, {Scalar(5, 2)}, Scalar(2));
  const SuperPoint pt{{Scalar(1, 25)}, {Scalar(1, 40)}};
  for (auto _ : state) benchmark::DoNotOptimize(eval_series(spec, pt, degree, {.compute_tail = false}).value);
}
BENCHMARK(BM_Series2SF1Exact)->DenseRange(4, 16, 4);

static void BM_Series2SF1Float(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  auto spec = SeriesSpec::standard({Scalar(1, 2), Scalar(1, 3)}, {Scalar(5, 2)}, Scalar(2));
  const SuperPoint pt{{Scalar::from_double(0.04), Scalar::from_double(0.03)}, {Scalar::from_double(0.02)}};
  for (auto _ : state) benchmark::DoNotOptimize(eval_series(spec, pt, degree, {.compute_tail = false}).value);
}
BENCHMARK(BM_Series2SF1Float)->Range(8, 24);
