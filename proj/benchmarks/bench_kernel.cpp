// Microbenchmarks for the hot exact-arithmetic paths: the Psi convolution,
// Z evaluation, q-expansion products and the truncated Cohen sum.

#include <benchmark/benchmark.h>

#include "dkernel/kernel.hpp"
#include "dkernel/modforms.hpp"
#include "dkernel/numerics.hpp"

using namespace dk;

static void BM_psi_values_k12(benchmark::State& state) {
  KernelPoint pt = make_kernel_point(12, 3, 4);
  for (auto _ : state) {
    auto v = psi_values(pt, state.range(0));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_psi_values_k12)->Arg(20)->Arg(50)->Arg(100);

static void BM_psi_values_k26(benchmark::State& state) {
  KernelPoint pt = make_kernel_point(26, 11, 14);
  for (auto _ : state) {
    auto v = psi_values(pt, state.range(0));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_psi_values_k26)->Arg(20)->Arg(60);

static void BM_z_polynomial(benchmark::State& state) {
  KernelPoint pt = make_kernel_point(static_cast<int>(state.range(0)), 5, 8);
  for (auto _ : state) {
    auto z = z_polynomial(pt);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_z_polynomial)->Arg(16)->Arg(28)->Arg(40);

static void BM_kohnen_zagier_sweep(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Rational acc(0);
    for (int m = 0; m <= k - 2; ++m)
      for (int n = (m + 1) % 2; n <= k - 2; n += 2) acc += kohnen_zagier_value(k, m, n);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_kohnen_zagier_sweep)->Arg(12)->Arg(24)->Arg(40);

static void BM_delta_qexp(benchmark::State& state) {
  for (auto _ : state) {
    auto d = delta_qexp(state.range(0));
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_delta_qexp)->Arg(60)->Arg(200);

static void BM_miller_basis_k24(benchmark::State& state) {
  for (auto _ : state) {
    auto b = miller_basis(24, state.range(0));
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_miller_basis_k24)->Arg(30)->Arg(60);

static void BM_hsw_form_k16(benchmark::State& state) {
  KernelPoint pt = make_kernel_point(16, 7, 10);
  for (auto _ : state) {
    auto h = hsw_form(pt, state.range(0));
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_hsw_form_k16)->Arg(30)->Arg(60);

static void BM_cohen_series(benchmark::State& state) {
  for (auto _ : state) {
    auto c = cohen_series_numeric(12, {6, 0}, {0, 2}, state.range(0));
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_cohen_series)->Unit(benchmark::kMillisecond)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
