#pragma once

// The phase dynamic program: for a permutation and a repeated up/down
// pattern of length l, compute the maximal number of matched steps M and the
// statistics derived from it (repeated-pattern length L, complete-block
// count B, and the per-offset suffix statistics).
//
// A "chain" is a subsequence whose up/down word is a prefix of the pattern
// repeated cyclically. Every statistic here is a function of M alone: a
// prefix of a chain is again a chain, so the best chain with s = kl + r
// steps is obtained by truncating a maximal one, and the per-residue maxima
// follow from M by rounding down.

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "permlab/perm.hpp"

namespace permlab {

// DP table of the quadratic reference algorithm. Cell (i, p) holds the
// maximal step count s with s = p (mod l) over chains ending at position i,
// or -1 if no such chain exists. parent packs the predecessor cell as
// i * l + p (-1 at chain starts); ties are broken toward the smallest
// predecessor position.
struct PhaseTable {
  int n = 0;
  int period = 0;
  std::vector<std::int32_t> steps;
  std::vector<std::int32_t> parent;

  std::int32_t at(int pos, int phase) const {
    return steps[static_cast<size_t>(pos) * period + phase];
  }
};

struct PhaseStats {
  std::int64_t max_steps = 0;              // M
  std::int64_t length = 0;                 // L: 0 or of the form k*l + 1
  std::int64_t blocks = 0;                 // B = floor(M / l)
  std::map<int, std::int64_t> suffix;      // r -> floor((M - r)/l) + 1, or 0

  bool operator==(const PhaseStats&) const = default;
};

// Quadratic reference DP: O(n^2 * l) time, O(n * l) space, with parent
// pointers for witness extraction.
std::pair<std::int64_t, PhaseTable> max_steps(const Permutation& sigma,
                                              const UpDownPattern& pattern);

// Fenwick-tree DP computing only M in O(n * l * log n); used by statistics()
// so the Monte Carlo path scales to n = 1e5. Cross-checked against the
// quadratic table and the oracle in the verification suite.
std::int64_t max_steps_value(const Permutation& sigma,
                             const UpDownPattern& pattern);

// Derives L, B, and suffix statistics from M via the closed forms.
// Offsets must lie in [0, period); throws std::invalid_argument otherwise.
PhaseStats stats_from_max_steps(std::int64_t max_steps, int period,
                                std::span<const int> offsets);

PhaseStats statistics(const Permutation& sigma, const UpDownPattern& pattern,
                      std::span<const int> offsets = {});

// Independent oracle: enumerates all 2^n subsequences, keeps the best step
// count per residue class, and reports the same statistics. The zero-step
// chain always counts (so suffix(0) is at least 1, matching the closed
// form). Guarded to n <= 14; throws std::domain_error beyond.
PhaseStats oracle_statistics(const Permutation& sigma,
                             const UpDownPattern& pattern,
                             std::span<const int> offsets = {});

// One maximizing chain (0-based positions) for diagnostics, extracted from
// the quadratic table's parent pointers.
std::vector<int> witness_positions(const Permutation& sigma,
                                   const UpDownPattern& pattern);

// Length of a longest increasing subsequence by patience sorting,
// O(n log n). Independent check for the pattern "U".
int longest_increasing_run(const Permutation& sigma);

}  // namespace permlab
