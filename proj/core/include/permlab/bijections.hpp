#pragma once

// Left-to-right minima, the classical bijection S_n(132) -> S_n(123) that
// fixes the minima and rearranges everything else in descending order, and
// the (pattern, avoided-pattern) pair tables it transports statistics over.

#include <vector>

#include "permlab/perm.hpp"

namespace permlab {

// Positions are 0-based; position 0 is always a left-to-right minimum.
// minima_values is strictly decreasing.
struct LrMinimaDecomposition {
  std::vector<int> minima_positions;
  std::vector<int> minima_values;
  std::vector<int> other_positions;
};

// Throws std::invalid_argument on empty input. The span overload accepts any
// sequence of distinct values, e.g. a window of a larger permutation.
LrMinimaDecomposition left_to_right_minima(const Permutation& sigma);
LrMinimaDecomposition left_to_right_minima(std::span<const int> values);

// Keeps the left-to-right minima (positions and values) fixed and places the
// remaining values into the remaining positions in descending order. Maps
// S_n(132) bijectively onto S_n(123); throws std::invalid_argument if the
// input contains 132.
Permutation to_123_avoider(const Permutation& sigma);

struct PatternTauPair {
  UpDownPattern pattern;
  Permutation tau;
};

// The five (up/down pattern, avoided length-3 pattern) pairs sharing the
// asymptotic constant of UUD (length 3) or UUUD (length 4). Supported
// lengths: 3 and 4; throws std::invalid_argument otherwise.
std::vector<PatternTauPair> corollary_pairs(int length);

}  // namespace permlab
