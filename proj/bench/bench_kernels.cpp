// Serial reference vs OpenMP kernels on the inner loops that dominate runtime.

#include <benchmark/benchmark.h>

#include "deltamat/gf2.hpp"
#include "deltamat/kernels.hpp"
#include "deltamat/random.hpp"
#include "deltamat/search.hpp"

namespace {

using namespace deltamat;

void BM_WidthHistogramSerial(benchmark::State& state) {
  const DeltaMatroid d = build_dn(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::width_histogram_serial(d.feasible(), d.size()));
  }
}

void BM_WidthHistogramParallel(benchmark::State& state) {
  const DeltaMatroid d = build_dn(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::width_histogram_parallel(d.feasible(), d.size(), static_cast<int>(state.range(1))));
  }
}

void BM_SeaSerial(benchmark::State& state) {
  const DeltaMatroid d = build_dn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sea_violation_serial(d.feasible(), d.size()));
}

void BM_SeaParallel(benchmark::State& state) {
  const DeltaMatroid d = build_dn(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::sea_violation_parallel(d.feasible(), d.size(), static_cast<int>(state.range(1))));
  }
}

Gf2SymMatrix bench_matrix(int n) {
  sampling::Engine rng(7);
  return sampling::random_symmetric_matrix(rng, n);
}

void BM_InvertibleSerial(benchmark::State& state) {
  const Gf2SymMatrix a = bench_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::invertible_principal_serial(a.rows(), a.dimension()));
  }
}

void BM_InvertibleParallel(benchmark::State& state) {
  const Gf2SymMatrix a = bench_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::invertible_principal_parallel(
        a.rows(), a.dimension(), static_cast<int>(state.range(1))));
  }
}

}  // namespace

BENCHMARK(BM_WidthHistogramSerial)->Arg(10)->Arg(12);
BENCHMARK(BM_WidthHistogramParallel)->Args({10, 1})->Args({10, 4})->Args({12, 1})->Args({12, 4});
BENCHMARK(BM_SeaSerial)->Arg(8)->Arg(10);
BENCHMARK(BM_SeaParallel)->Args({8, 1})->Args({8, 4})->Args({10, 1})->Args({10, 4});
BENCHMARK(BM_InvertibleSerial)->Arg(14)->Arg(18);
BENCHMARK(BM_InvertibleParallel)->Args({14, 1})->Args({14, 4})->Args({18, 1})->Args({18, 4});

BENCHMARK_MAIN();
