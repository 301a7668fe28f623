#include "permlab/bijections.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace permlab {

LrMinimaDecomposition left_to_right_minima(std::span<const int> values) {
  if (values.empty())
    throw std::invalid_argument("left-to-right minima of an empty sequence");
  LrMinimaDecomposition out;
  long running_min = LONG_MAX;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] < running_min) {
      running_min = values[i];
      out.minima_positions.push_back(static_cast<int>(i));
      out.minima_values.push_back(values[i]);
    } else {
      out.other_positions.push_back(static_cast<int>(i));
    }
  }
  return out;
}

LrMinimaDecomposition left_to_right_minima(const Permutation& sigma) {
  return left_to_right_minima(std::span<const int>(sigma.values()));
}

Permutation to_123_avoider(const Permutation& sigma) {
  if (contains_132(sigma))
    throw std::invalid_argument("to_123_avoider requires a 132-avoiding input");
  if (sigma.empty()) return sigma;
  const auto decomp = left_to_right_minima(sigma);

  std::vector<int> others;
  others.reserve(decomp.other_positions.size());
  for (int pos : decomp.other_positions) others.push_back(sigma.at(pos));
  std::sort(others.rbegin(), others.rend());

  std::vector<int> out(static_cast<size_t>(sigma.size()));
  for (size_t i = 0; i < decomp.minima_positions.size(); ++i)
    out[static_cast<size_t>(decomp.minima_positions[i])] = decomp.minima_values[i];
  for (size_t i = 0; i < decomp.other_positions.size(); ++i)
    out[static_cast<size_t>(decomp.other_positions[i])] = others[i];
  return Permutation(std::move(out));
}

std::vector<PatternTauPair> corollary_pairs(int length) {
  const auto pat = [](const char* s) { return UpDownPattern::parse(s); };
  const auto tau = [](std::vector<int> v) { return Permutation(std::move(v)); };
  if (length == 3)
    return {{pat("UDD"), tau({2, 3, 1})},
            {pat("DDU"), tau({3, 1, 2})},
            {pat("DUU"), tau({2, 1, 3})},
            {pat("UDD"), tau({1, 2, 3})},
            {pat("UUD"), tau({3, 2, 1})}};
  if (length == 4)
    return {{pat("UDDD"), tau({2, 3, 1})},
            {pat("DDDU"), tau({3, 1, 2})},
            {pat("DUUU"), tau({2, 1, 3})},
            {pat("UDDD"), tau({1, 2, 3})},
            {pat("UUUD"), tau({3, 2, 1})}};
  throw std::invalid_argument("corollary_pairs supports lengths 3 and 4, got " +
                              std::to_string(length));
}

}  // namespace permlab
