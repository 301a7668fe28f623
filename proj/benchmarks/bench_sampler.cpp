#include <benchmark/benchmark.h>

#include "permlab/catalan.hpp"
#include "permlab/rng.hpp"

namespace {

using namespace permlab;

void BM_SampleAvoider(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    CounterRng rng(777, stream++);
    benchmark::DoNotOptimize(sample_avoider_132(n, rng).size());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleAvoider)->RangeMultiplier(10)->Range(1000, 100000);

void BM_SampleUniform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    CounterRng rng(777, stream++);
    benchmark::DoNotOptimize(sample_uniform(n, rng).size());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleUniform)->RangeMultiplier(10)->Range(1000, 100000);

void BM_EnumerateAvoiders(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    enumerate_avoiders(n, Permutation({1, 3, 2}),
                       [&](const Permutation&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateAvoiders)->DenseRange(8, 12, 2);

}  // namespace
