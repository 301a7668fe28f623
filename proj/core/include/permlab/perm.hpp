#pragma once

// Permutations of [n] with 1-based values, their up/down words, pattern
// containment, and the reverse/complement symmetries.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace permlab {

// A validated bijection of {1,...,n}. Values are 1-based to match the usual
// combinatorial notation; positions are 0-based like any C++ index.
// Immutable after construction, so freely shareable across threads.
class Permutation {
 public:
  Permutation() = default;

  // Validates that `values` is a bijection of {1..n}; throws
  // std::invalid_argument naming the offending value otherwise.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  // Parses whitespace-separated 1-based values, e.g. "2 3 1 4".
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  int at(int pos) const { return v_[static_cast<size_t>(pos)]; }
  const std::vector<int>& values() const { return v_; }

  std::string str() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> v_;
};

enum class Step : std::uint8_t { Up, Down };

// A finite word over {U, D}. May be empty.
class UpDownWord {
 public:
  UpDownWord() = default;
  explicit UpDownWord(std::vector<Step> letters) : w_(std::move(letters)) {}

  // Parses a string over {U, D}; throws std::invalid_argument otherwise.
  static UpDownWord parse(const std::string& text);

  int size() const { return static_cast<int>(w_.size()); }
  bool empty() const { return w_.empty(); }
  Step at(int i) const { return w_[static_cast<size_t>(i)]; }
  const std::vector<Step>& letters() const { return w_; }

  std::string str() const;

  bool operator==(const UpDownWord&) const = default;

 private:
  std::vector<Step> w_;
};

// A nonempty up/down word used as the repeated pattern of the phase DP.
class UpDownPattern {
 public:
  // Throws std::invalid_argument if `word` is empty.
  explicit UpDownPattern(UpDownWord word);
  static UpDownPattern parse(const std::string& text);

  int size() const { return word_.size(); }
  Step at(int i) const { return word_.at(i); }
  const UpDownWord& word() const { return word_; }
  std::string str() const { return word_.str(); }

  bool operator==(const UpDownPattern&) const = default;

 private:
  UpDownWord word_;
};

// Order-isomorphic relabeling of a sequence of distinct integers into a
// permutation of [m]. Throws std::invalid_argument on duplicates.
Permutation reduce(std::span<const int> values);

// The word of adjacent comparisons: letter j is Up iff values[j+1] > values[j].
// Throws std::invalid_argument on an empty input or duplicate values.
UpDownWord updown_word(std::span<const int> values);
UpDownWord updown_word(const Permutation& sigma);

// Reference containment test: scans position tuples for a subsequence
// order-isomorphic to tau. |tau| must be in [1, 4].
bool contains_exhaustive(const Permutation& sigma, const Permutation& tau);

// Linear-time scan for an occurrence of the pattern 132, i.e. positions
// i < j < k with sigma_i < sigma_k < sigma_j. Used on large sampled inputs.
bool contains_132(const Permutation& sigma);

// Containment with fast paths: all six length-3 patterns run in O(n) (132 by
// the stack scan, 123/321 by monotone-triple scans, the rest through the
// reverse/complement symmetries); length-4 patterns fall back to the
// exhaustive scan. |tau| must be in [1, 4].
bool contains(const Permutation& sigma, const Permutation& tau);
inline bool avoids(const Permutation& sigma, const Permutation& tau) {
  return !contains(sigma, tau);
}

Permutation reverse(const Permutation& sigma);
Permutation complement(const Permutation& sigma);

enum class SymmetryOp { Reverse, Complement, ReverseComplement };

// How each permutation symmetry acts on the up/down word of a subsequence:
// Complement flips each letter, ReverseComplement reverses the letter order,
// Reverse does both.
UpDownWord transform_pattern(const UpDownWord& word, SymmetryOp op);
UpDownPattern transform_pattern(const UpDownPattern& pattern, SymmetryOp op);

}  // namespace permlab
