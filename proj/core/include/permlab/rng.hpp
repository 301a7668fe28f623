#pragma once

// Deterministic counter-based randomness. Each (master seed, stream index)
// pair names an independent stream whose k-th output depends only on
// (seed, stream, k), so parallel Monte Carlo reps are reproducible
// regardless of execution order.

#include <cstdint>

namespace permlab {

class CounterRng {
 public:
  CounterRng(std::uint64_t master_seed, std::uint64_t stream);

  std::uint64_t next();

  // Uniform in [0, bound); unbiased via rejection. bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [0, 1).
  double next_unit();

  // UniformRandomBitGenerator interface.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~0ULL; }
  result_type operator()() { return next(); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace permlab
