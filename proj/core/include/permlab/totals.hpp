#pragma once

// Exact integer recurrences for the Catalan-weighted statistic totals over
// S_n(132). For a statistic X, the table stores sum_{sigma in S_n(132)} X(sigma)
// = C_n * E[X]; working with these integer totals keeps every recurrence step
// exact and defers rational arithmetic to extraction time.

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "permlab/catalan.hpp"

namespace permlab {

enum class PatternKind { U2D, U3D };

inline int pattern_period(PatternKind kind) {
  return kind == PatternKind::U2D ? 3 : 4;
}

// beta[n] totals the complete-block count. The prefix-statistic totals sit
// in alpha (suffix offset 1 for U2D, offset 2 for U3D) and gtilde (offset 1,
// U3D only); expected_suffix maps offsets back to columns.
struct TotalsTable {
  PatternKind kind = PatternKind::U2D;
  int max_index = 0;
  std::vector<mpz_class> alpha;
  std::vector<mpz_class> beta;
  std::vector<mpz_class> gtilde;  // empty for U2D
  CatalanTable catalan;
};

// k[0] = 1, k[l] = sum of k[0..l-1]; asserted equal to the closed form
// 2^(l-1) for l >= 1. k[l] counts the 132-avoiders of length l with no
// increasing subsequence of length three.
std::vector<mpz_class> k_sequence(int max_index);

// Totals for the pattern UUD, n <= n_max (n_max >= 2). O(n_max^2) integer
// work; the inner convolutions run over fixed-size blocks so parallel
// execution is bit-identical to sequential.
TotalsTable totals_u2d(int n_max);

// Totals for the pattern UUUD.
TotalsTable totals_u3d(int n_max);

// beta[n] / C_n as an exact rational. Throws std::out_of_range beyond the
// table.
mpq_class expected_blocks(const TotalsTable& table, int n);

// Expected suffix statistic at the given offset: for U2D, offset 1 is the
// alpha total; for U3D, offset 1 is gtilde and offset 2 is alpha. Throws
// std::invalid_argument for any other offset.
mpq_class expected_suffix(const TotalsTable& table, int n, int offset);

struct LengthBounds {
  mpq_class lo;                    // l * beta[n] / C_n
  mpq_class hi;                    // lo + 1
  std::optional<mpq_class> exact;  // by enumeration, for n <= 11
};

// Brackets E[L] by [l*E[B], l*E[B] + 1] (L = l*B + 1 exactly when B >= 1);
// for n <= 11 the exact expectation is also computed by enumerating
// S_n(132).
LengthBounds expected_length_bounds(const TotalsTable& table, int n);

}  // namespace permlab
