#include "permlab/updown_dp.hpp"

#include <algorithm>
#include <stdexcept>

namespace permlab {

namespace {

void check_offsets(std::span<const int> offsets, int period) {
  for (int r : offsets)
    if (r < 0 || r >= period)
      throw std::invalid_argument("suffix offset must lie in [0, l), got " +
                                  std::to_string(r));
}

}  // namespace

// Keeping only the maximal step count per (position, phase) is sound: a
// transition out of a cell depends only on the current value and the phase's
// pattern letter, so any extension of a shorter chain ending in the cell
// extends the longer chain as well.
std::pair<std::int64_t, PhaseTable> max_steps(const Permutation& sigma,
                                              const UpDownPattern& pattern) {
  const int n = sigma.size();
  const int l = pattern.size();
  PhaseTable table;
  table.n = n;
  table.period = l;
  table.steps.assign(static_cast<size_t>(n) * l, -1);
  table.parent.assign(static_cast<size_t>(n) * l, -1);

  std::int64_t best = 0;
  for (int j = 0; j < n; ++j) {
    auto* row = &table.steps[static_cast<size_t>(j) * l];
    auto* par = &table.parent[static_cast<size_t>(j) * l];
    row[0] = 0;  // the single-element chain
    for (int i = 0; i < j; ++i) {
      const bool up = sigma.at(i) < sigma.at(j);
      const auto* prev = &table.steps[static_cast<size_t>(i) * l];
      for (int p = 0; p < l; ++p) {
        if (prev[p] < 0) continue;
        if ((pattern.at(p) == Step::Up) != up) continue;
        const int q = (p + 1) % l;
        if (prev[p] + 1 > row[q]) {
          row[q] = prev[p] + 1;
          par[q] = i * l + p;  // first improvement = smallest predecessor
        }
      }
    }
    for (int p = 0; p < l; ++p) best = std::max<std::int64_t>(best, row[p]);
  }
  return {best, std::move(table)};
}

namespace {

// Fenwick tree for prefix maxima over 1..n.
class MaxFenwick {
 public:
  explicit MaxFenwick(int n) : t_(static_cast<size_t>(n) + 1, -1) {}

  void raise(int pos, std::int32_t value) {
    for (; pos < static_cast<int>(t_.size()); pos += pos & -pos)
      t_[static_cast<size_t>(pos)] = std::max(t_[static_cast<size_t>(pos)], value);
  }

  std::int32_t prefix_max(int pos) const {
    std::int32_t m = -1;
    for (; pos > 0; pos -= pos & -pos)
      m = std::max(m, t_[static_cast<size_t>(pos)]);
    return m;
  }

 private:
  std::vector<std::int32_t> t_;
};

}  // namespace

std::int64_t max_steps_value(const Permutation& sigma,
                             const UpDownPattern& pattern) {
  const int n = sigma.size();
  const int l = pattern.size();
  if (n == 0) return 0;

  // One tree per phase p, holding chains waiting to consume letter V_{p+1}.
  // For an Up letter the tree is indexed by value (query below sigma_j);
  // for Down, by flipped value, which turns "above sigma_j" into a prefix.
  std::vector<MaxFenwick> trees(static_cast<size_t>(l), MaxFenwick(n));
  std::vector<std::int32_t> here(static_cast<size_t>(l));

  std::int64_t best = 0;
  for (int j = 0; j < n; ++j) {
    const int v = sigma.at(j);
    for (int q = 0; q < l; ++q) {
      const int p = (q + l - 1) % l;
      const bool up = pattern.at(p) == Step::Up;
      const int query_pos = up ? v - 1 : n - v;
      const std::int32_t m = trees[static_cast<size_t>(p)].prefix_max(query_pos);
      here[static_cast<size_t>(q)] = m < 0 ? -1 : m + 1;
    }
    here[0] = std::max(here[0], 0);  // the single-element chain
    for (int p = 0; p < l; ++p) {
      if (here[static_cast<size_t>(p)] < 0) continue;
      best = std::max<std::int64_t>(best, here[static_cast<size_t>(p)]);
      const bool up = pattern.at(p) == Step::Up;
      const int store_pos = up ? v : n + 1 - v;
      trees[static_cast<size_t>(p)].raise(store_pos, here[static_cast<size_t>(p)]);
    }
  }
  return best;
}

PhaseStats stats_from_max_steps(std::int64_t max_steps, int period,
                                std::span<const int> offsets) {
  check_offsets(offsets, period);
  PhaseStats s;
  s.max_steps = max_steps;
  s.blocks = max_steps / period;
  s.length = s.blocks >= 1 ? period * s.blocks + 1 : 0;
  for (int r : offsets)
    s.suffix[r] = max_steps >= r ? (max_steps - r) / period + 1 : 0;
  return s;
}

PhaseStats statistics(const Permutation& sigma, const UpDownPattern& pattern,
                      std::span<const int> offsets) {
  return stats_from_max_steps(max_steps_value(sigma, pattern), pattern.size(),
                              offsets);
}

PhaseStats oracle_statistics(const Permutation& sigma,
                             const UpDownPattern& pattern,
                             std::span<const int> offsets) {
  const int n = sigma.size();
  const int l = pattern.size();
  if (n > 14)
    throw std::domain_error("oracle_statistics is guarded to n <= 14, got n = " +
                            std::to_string(n));
  check_offsets(offsets, l);

  // residue_best[r] = max steps s with s = r (mod l) over all chains; the
  // zero-step chain is always counted.
  std::vector<std::int64_t> residue_best(static_cast<size_t>(l), -1);
  residue_best[0] = 0;

  std::vector<int> sub(static_cast<size_t>(n));
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int len = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) sub[static_cast<size_t>(len++)] = sigma.at(i);
    bool chain = true;
    for (int s = 0; s + 1 < len && chain; ++s) {
      const bool up = sub[static_cast<size_t>(s + 1)] > sub[static_cast<size_t>(s)];
      chain = (pattern.at(s % l) == Step::Up) == up;
    }
    if (!chain) continue;
    const int s = len - 1;
    auto& slot = residue_best[static_cast<size_t>(s % l)];
    slot = std::max<std::int64_t>(slot, s);
  }

  PhaseStats out;
  for (int r = 0; r < l; ++r)
    out.max_steps = std::max(out.max_steps, residue_best[static_cast<size_t>(r)]);
  const std::int64_t s0 = residue_best[0];
  out.blocks = s0 / l;
  out.length = s0 >= l ? s0 + 1 : 0;
  for (int r : offsets) {
    const std::int64_t sr = residue_best[static_cast<size_t>(r)];
    out.suffix[r] = sr < 0 ? 0 : (sr - r) / l + 1;
  }
  return out;
}

std::vector<int> witness_positions(const Permutation& sigma,
                                   const UpDownPattern& pattern) {
  const auto [best, table] = max_steps(sigma, pattern);
  std::vector<int> chain;
  if (table.n == 0) return chain;

  int cell = -1;
  for (int i = 0; i < table.n && cell < 0; ++i)
    for (int p = 0; p < table.period; ++p)
      if (table.at(i, p) == best) {
        cell = i * table.period + p;
        break;
      }
  while (cell >= 0) {
    chain.push_back(cell / table.period);
    cell = table.parent[static_cast<size_t>(cell)];
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

int longest_increasing_run(const Permutation& sigma) {
  std::vector<int> tails;
  for (int x : sigma.values()) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return static_cast<int>(tails.size());
}

}  // namespace permlab
