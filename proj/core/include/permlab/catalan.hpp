#pragma once

// Catalan numbers, enumeration of pattern-avoiding permutations, and the
// exactly-uniform sampler for 132-avoiders via random Dyck paths.

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "permlab/perm.hpp"
#include "permlab/rng.hpp"

namespace permlab {

// Exact Catalan numbers C_0..C_N computed by the ratio recurrence
// C_{n+1} (n+2) = C_n 2 (2n+1) and cross-checked against the binomial
// closed form (1/(n+1)) binom(2n, n) at small n and at N.
class CatalanTable {
 public:
  explicit CatalanTable(int max_index);

  const mpz_class& at(int n) const { return c_[static_cast<size_t>(n)]; }
  int max_index() const { return static_cast<int>(c_.size()) - 1; }

 private:
  std::vector<mpz_class> c_;
};

// Lattice path of +1/-1 steps with nonnegative prefix sums ending at 0.
class DyckPath {
 public:
  DyckPath() = default;
  // Validates the prefix-sum invariants; throws std::invalid_argument.
  explicit DyckPath(std::vector<std::int8_t> steps);

  int semilength() const { return static_cast<int>(steps_.size()) / 2; }
  const std::vector<std::int8_t>& steps() const { return steps_; }

  bool operator==(const DyckPath&) const = default;

 private:
  std::vector<std::int8_t> steps_;
};

// Streams every permutation of [n] (n <= 12).
void enumerate_permutations(int n,
                            const std::function<void(const Permutation&)>& visit);

// Streams each tau-avoider of length n exactly once; |tau| must be 3.
// For tau = 132 the stream follows the block decomposition around the
// position of the maximum (n <= 14); other patterns filter S_n (n <= 12).
void enumerate_avoiders(int n, const Permutation& tau,
                        const std::function<void(const Permutation&)>& visit);

std::uint64_t count_avoiders(int n, const Permutation& tau);

// Uniform Dyck path of semilength n by the cycle lemma: shuffle n up-steps
// and n+1 down-steps, rotate to start after the first prefix-sum minimum,
// drop the trailing down-step. Each path arises from exactly 2n+1
// arrangements, so the result is exactly uniform.
DyckPath sample_dyck_path(int n, CounterRng& rng);

// First-return decoding: path = Up P1 Down P2 maps to the permutation with
// the maximum at position |P1|+1, the left block decoded from P1 on the top
// remaining values and the right block from P2 on the bottom values. The
// image is exactly S_n(132) and the map is a bijection. Iterative (explicit
// work stack), so n = 1e5 is fine.
Permutation dyck_to_avoider(const DyckPath& path);

// Inverse of dyck_to_avoider; input must avoid 132 (unchecked here beyond
// structural failure: throws std::invalid_argument if the block structure
// of a 132-avoider is violated).
DyckPath avoider_to_dyck(const Permutation& sigma);

// Exactly uniform over S_n(132).
Permutation sample_avoider_132(int n, CounterRng& rng);

// Uniform over S_n by an unbiased Fisher-Yates shuffle.
Permutation sample_uniform(int n, CounterRng& rng);

bool has_increasing_triple(const Permutation& sigma);

// Counts sigma in S_l(132) with no increasing subsequence of length three,
// by enumeration (l <= 14). Equals 2^(l-1) for l >= 1.
mpz_class count_no_increasing_triple(int l);

}  // namespace permlab
