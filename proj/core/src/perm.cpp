#include "permlab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace permlab {

Permutation::Permutation(std::vector<int> values) : v_(std::move(values)) {
  const int n = size();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int x : v_) {
    if (x < 1 || x > n)
      throw std::invalid_argument("permutation value out of range 1..n: " +
                                  std::to_string(x));
    if (seen[static_cast<size_t>(x - 1)])
      throw std::invalid_argument("duplicate permutation value: " +
                                  std::to_string(x));
    seen[static_cast<size_t>(x - 1)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> v;
  int x;
  while (in >> x) v.push_back(x);
  if (!in.eof())
    throw std::invalid_argument("permutation parse error near: " + text);
  return Permutation(std::move(v));
}

std::string Permutation::str() const {
  std::string out;
  for (size_t i = 0; i < v_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v_[i]);
  }
  return out;
}

UpDownWord UpDownWord::parse(const std::string& text) {
  std::vector<Step> w;
  w.reserve(text.size());
  for (char c : text) {
    if (c == 'U')
      w.push_back(Step::Up);
    else if (c == 'D')
      w.push_back(Step::Down);
    else
      throw std::invalid_argument(std::string("up/down word letter must be U or D, got '") +
                                  c + "'");
  }
  return UpDownWord(std::move(w));
}

std::string UpDownWord::str() const {
  std::string out;
  out.reserve(w_.size());
  for (Step s : w_) out += (s == Step::Up ? 'U' : 'D');
  return out;
}

UpDownPattern::UpDownPattern(UpDownWord word) : word_(std::move(word)) {
  if (word_.empty())
    throw std::invalid_argument("up/down pattern must be nonempty");
}

UpDownPattern UpDownPattern::parse(const std::string& text) {
  return UpDownPattern(UpDownWord::parse(text));
}

namespace {

void require_distinct(std::span<const int> values) {
  std::unordered_set<int> seen(values.begin(), values.end());
  if (seen.size() != values.size())
    throw std::invalid_argument("values must be pairwise distinct");
}

}  // namespace

Permutation reduce(std::span<const int> values) {
  require_distinct(values);
  const int m = static_cast<int>(values.size());
  std::vector<int> idx(static_cast<size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return values[static_cast<size_t>(a)] < values[static_cast<size_t>(b)]; });
  std::vector<int> out(static_cast<size_t>(m));
  for (int rank = 0; rank < m; ++rank)
    out[static_cast<size_t>(idx[static_cast<size_t>(rank)])] = rank + 1;
  return Permutation(std::move(out));
}

UpDownWord updown_word(std::span<const int> values) {
  if (values.empty())
    throw std::invalid_argument("up/down word needs at least one value");
  require_distinct(values);
  std::vector<Step> w;
  w.reserve(values.size() - 1);
  for (size_t i = 0; i + 1 < values.size(); ++i)
    w.push_back(values[i + 1] > values[i] ? Step::Up : Step::Down);
  return UpDownWord(std::move(w));
}

UpDownWord updown_word(const Permutation& sigma) {
  // Already a bijection; skip the distinctness scan.
  std::vector<Step> w;
  if (sigma.size() > 0) {
    w.reserve(static_cast<size_t>(sigma.size()) - 1);
    for (int i = 0; i + 1 < sigma.size(); ++i)
      w.push_back(sigma.at(i + 1) > sigma.at(i) ? Step::Up : Step::Down);
  }
  return UpDownWord(std::move(w));
}

namespace {

// Do the chosen positions realize tau? Order-isomorphism over the picked
// values.
bool matches_at(const Permutation& sigma, const Permutation& tau,
                const int* pos) {
  const int m = tau.size();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const bool sig_less = sigma.at(pos[a]) < sigma.at(pos[b]);
      const bool tau_less = tau.at(a) < tau.at(b);
      if (sig_less != tau_less) return false;
    }
  return true;
}

bool contains_scan(const Permutation& sigma, const Permutation& tau, int depth,
                   int* pos) {
  const int m = tau.size();
  if (depth == m) return matches_at(sigma, tau, pos);
  const int start = depth == 0 ? 0 : pos[depth - 1] + 1;
  for (int i = start; i <= sigma.size() - (m - depth); ++i) {
    pos[depth] = i;
    if (contains_scan(sigma, tau, depth + 1, pos)) return true;
  }
  return false;
}

bool has_monotone_triple(const Permutation& sigma, bool increasing) {
  // Track the best pair seen so far: smallest tail of an increasing pair
  // (resp. largest tail of a decreasing pair).
  const int n = sigma.size();
  if (increasing) {
    int best_single = INT32_MAX, best_pair_tail = INT32_MAX;
    for (int i = 0; i < n; ++i) {
      const int x = sigma.at(i);
      if (x > best_pair_tail) return true;
      if (x > best_single) best_pair_tail = std::min(best_pair_tail, x);
      best_single = std::min(best_single, x);
    }
  } else {
    int best_single = INT32_MIN, best_pair_tail = INT32_MIN;
    for (int i = 0; i < n; ++i) {
      const int x = sigma.at(i);
      if (x < best_pair_tail) return true;
      if (x < best_single) best_pair_tail = std::max(best_pair_tail, x);
      best_single = std::max(best_single, x);
    }
  }
  return false;
}

}  // namespace

bool contains_exhaustive(const Permutation& sigma, const Permutation& tau) {
  const int m = tau.size();
  if (m < 1 || m > 4)
    throw std::domain_error("containment test supports |tau| in [1, 4], got " +
                            std::to_string(m));
  if (sigma.size() < m) return false;
  int pos[4];
  return contains_scan(sigma, tau, 0, pos);
}

bool contains_132(const Permutation& sigma) {
  // Right-to-left scan with a decreasing stack. `middle` is the largest
  // value seen that has some larger element to its left; it is the best
  // candidate for the pattern's final element. Any value scanned later
  // (i.e. further left) that is below `middle` completes an occurrence.
  const int n = sigma.size();
  std::vector<int> stack;
  int middle = INT32_MIN;
  for (int i = n - 1; i >= 0; --i) {
    const int x = sigma.at(i);
    if (x < middle) return true;
    while (!stack.empty() && x > stack.back()) {
      middle = stack.back();
      stack.pop_back();
    }
    stack.push_back(x);
  }
  return false;
}

bool contains(const Permutation& sigma, const Permutation& tau) {
  const int m = tau.size();
  if (m < 1 || m > 4)
    throw std::domain_error("containment test supports |tau| in [1, 4], got " +
                            std::to_string(m));
  if (sigma.size() < m) return false;
  if (m == 3) {
    const auto& t = tau.values();
    if (t == std::vector<int>{1, 2, 3}) return has_monotone_triple(sigma, true);
    if (t == std::vector<int>{3, 2, 1}) return has_monotone_triple(sigma, false);
    if (t == std::vector<int>{1, 3, 2}) return contains_132(sigma);
    // The symmetries map the remaining three patterns onto 132:
    // rev(231) = 132, com(312) = 132, rev-com(213) = 132.
    if (t == std::vector<int>{2, 3, 1}) return contains_132(reverse(sigma));
    if (t == std::vector<int>{3, 1, 2}) return contains_132(complement(sigma));
    if (t == std::vector<int>{2, 1, 3})
      return contains_132(reverse(complement(sigma)));
  }
  return contains_exhaustive(sigma, tau);
}

Permutation reverse(const Permutation& sigma) {
  std::vector<int> v(sigma.values().rbegin(), sigma.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n));
  for (int x : sigma.values()) v.push_back(n + 1 - x);
  return Permutation(std::move(v));
}

UpDownWord transform_pattern(const UpDownWord& word, SymmetryOp op) {
  const auto flip = [](Step s) { return s == Step::Up ? Step::Down : Step::Up; };
  std::vector<Step> out;
  out.reserve(static_cast<size_t>(word.size()));
  switch (op) {
    case SymmetryOp::Complement:
      for (Step s : word.letters()) out.push_back(flip(s));
      break;
    case SymmetryOp::ReverseComplement:
      out.assign(word.letters().rbegin(), word.letters().rend());
      break;
    case SymmetryOp::Reverse:
      for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it)
        out.push_back(flip(*it));
      break;
  }
  return UpDownWord(std::move(out));
}

UpDownPattern transform_pattern(const UpDownPattern& pattern, SymmetryOp op) {
  return UpDownPattern(transform_pattern(pattern.word(), op));
}

}  // namespace permlab
