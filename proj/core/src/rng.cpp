#include "permlab/rng.hpp"

namespace permlab {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

// Finalizer of the splitmix64 generator.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t master_seed, std::uint64_t stream)
    : key_(mix64(mix64(master_seed + kGamma) ^ mix64(stream * kGamma + 1))) {}

std::uint64_t CounterRng::next() {
  return mix64(key_ + ++counter_ * kGamma);
}

std::uint64_t CounterRng::below(std::uint64_t bound) {
  // Rejection below the largest multiple of bound; every accepted draw is
  // exactly uniform.
  const std::uint64_t limit = -bound % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= limit) return r % bound;
  }
}

double CounterRng::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

}  // namespace permlab
