#include <benchmark/benchmark.h>

#include "permlab/series.hpp"
#include "permlab/totals.hpp"

namespace {

using namespace permlab;

void BM_TotalsU2D(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(totals_u2d(n).beta.back().get_ui());
}
BENCHMARK(BM_TotalsU2D)->RangeMultiplier(2)->Range(128, 1024)
    ->Unit(benchmark::kMillisecond);

void BM_TotalsU3D(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(totals_u3d(n).gtilde.back().get_ui());
}
BENCHMARK(BM_TotalsU3D)->RangeMultiplier(2)->Range(128, 1024)
    ->Unit(benchmark::kMillisecond);

void BM_SeriesExactMul(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto cat = catalan_series(order);
  for (auto _ : state)
    benchmark::DoNotOptimize(mul(cat, cat).coeff(order).get_d());
  state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesExactMul)->RangeMultiplier(2)->Range(64, 512)->Complexity();

void BM_SeriesScaledClosedG(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(series_g_u3d_scaled(order).coeff(order));
  state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesScaledClosedG)->RangeMultiplier(4)->Range(1024, 65536)
    ->Complexity();

void BM_SeriesExactRoutesB(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        series_b_u2d(order, SeriesRoute::Compositional).coeff(order).get_d());
  }
}
BENCHMARK(BM_SeriesExactRoutesB)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
