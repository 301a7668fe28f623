#include <benchmark/benchmark.h>

#include "permlab/catalan.hpp"
#include "permlab/perm.hpp"
#include "permlab/rng.hpp"
#include "permlab/updown_dp.hpp"

namespace {

using namespace permlab;

Permutation random_perm(int n) {
  CounterRng rng(12345, static_cast<std::uint64_t>(n));
  return sample_uniform(n, rng);
}

void BM_MaxStepsQuadratic(benchmark::State& state) {
  const auto sigma = random_perm(static_cast<int>(state.range(0)));
  const auto pat = UpDownPattern::parse("UUD");
  for (auto _ : state)
    benchmark::DoNotOptimize(max_steps(sigma, pat).first);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxStepsQuadratic)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_MaxStepsFenwick(benchmark::State& state) {
  const auto sigma = random_perm(static_cast<int>(state.range(0)));
  const auto pat = UpDownPattern::parse("UUD");
  for (auto _ : state)
    benchmark::DoNotOptimize(max_steps_value(sigma, pat));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxStepsFenwick)->RangeMultiplier(4)->Range(64, 262144)->Complexity();

void BM_OracleStatistics(benchmark::State& state) {
  const auto sigma = random_perm(static_cast<int>(state.range(0)));
  const auto pat = UpDownPattern::parse("UUD");
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle_statistics(sigma, pat).max_steps);
}
BENCHMARK(BM_OracleStatistics)->DenseRange(8, 14, 2);

}  // namespace
