#include "permlab/catalan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permlab {

CatalanTable::CatalanTable(int max_index) {
  if (max_index < 0)
    throw std::invalid_argument("Catalan table needs max_index >= 0");
  c_.reserve(static_cast<size_t>(max_index) + 1);
  c_.emplace_back(1);
  for (int n = 0; n < max_index; ++n) {
    mpz_class next = c_.back() * 2 * (2 * n + 1);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(),
                    static_cast<unsigned long>(n + 2));
    c_.push_back(std::move(next));
  }
  // Cross-check the ratio recurrence against the closed form.
  for (int n = 0; n <= max_index; ++n) {
    if (n > 20 && n < max_index) continue;
    mpz_class direct;
    mpz_bin_uiui(direct.get_mpz_t(), static_cast<unsigned long>(2 * n),
                 static_cast<unsigned long>(n));
    direct /= n + 1;
    if (direct != c_[static_cast<size_t>(n)])
      throw std::logic_error("Catalan recurrence disagrees with binomial form at n = " +
                             std::to_string(n));
  }
}

DyckPath::DyckPath(std::vector<std::int8_t> steps) : steps_(std::move(steps)) {
  int height = 0;
  for (auto s : steps_) {
    if (s != 1 && s != -1)
      throw std::invalid_argument("Dyck path steps must be +1 or -1");
    height += s;
    if (height < 0)
      throw std::invalid_argument("Dyck path prefix sum went negative");
  }
  if (height != 0)
    throw std::invalid_argument("Dyck path must end at height 0");
}

void enumerate_permutations(int n,
                            const std::function<void(const Permutation&)>& visit) {
  if (n < 0 || n > 12)
    throw std::domain_error("permutation enumeration is guarded to n <= 12");
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

namespace {

struct Segment {
  int pos_lo, pos_hi;  // positions [pos_lo, pos_hi)
  int val_hi;          // values are val_hi - len + 1 .. val_hi
};

// Depth-first generation over the block decomposition: the maximum of a
// segment sits at some position j, everything before it takes the top j-1
// remaining values, everything after takes the rest.
void gen_avoiders(std::vector<int>& buf, std::vector<Segment>& work,
                  const std::function<void(const Permutation&)>& visit) {
  if (work.empty()) {
    visit(Permutation(buf));
    return;
  }
  const Segment seg = work.back();
  work.pop_back();
  const int len = seg.pos_hi - seg.pos_lo;
  if (len == 0) {
    gen_avoiders(buf, work, visit);
  } else {
    for (int j = 0; j < len; ++j) {
      buf[static_cast<size_t>(seg.pos_lo + j)] = seg.val_hi;
      // Right block first so the left block is on top of the work stack;
      // emission order is immaterial, each avoider appears exactly once.
      work.push_back({seg.pos_lo + j + 1, seg.pos_hi, seg.val_hi - 1 - j});
      work.push_back({seg.pos_lo, seg.pos_lo + j, seg.val_hi - 1});
      gen_avoiders(buf, work, visit);
      work.pop_back();
      work.pop_back();
    }
  }
  work.push_back(seg);
}

}  // namespace

void enumerate_avoiders(int n, const Permutation& tau,
                        const std::function<void(const Permutation&)>& visit) {
  if (tau.size() != 3)
    throw std::invalid_argument("avoider enumeration expects |tau| = 3");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const bool is_132 = tau.values() == std::vector<int>{1, 3, 2};
  if (is_132) {
    if (n > 14)
      throw std::domain_error("132-avoider enumeration is guarded to n <= 14");
    std::vector<int> buf(static_cast<size_t>(n));
    std::vector<Segment> work{{0, n, n}};
    gen_avoiders(buf, work, visit);
  } else {
    if (n > 12)
      throw std::domain_error("filter-mode avoider enumeration is guarded to n <= 12");
    enumerate_permutations(n, [&](const Permutation& sigma) {
      if (avoids(sigma, tau)) visit(sigma);
    });
  }
}

std::uint64_t count_avoiders(int n, const Permutation& tau) {
  std::uint64_t count = 0;
  enumerate_avoiders(n, tau, [&](const Permutation&) { ++count; });
  return count;
}

DyckPath sample_dyck_path(int n, CounterRng& rng) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const int m = 2 * n + 1;
  std::vector<std::int8_t> w(static_cast<size_t>(m), -1);
  std::fill(w.begin(), w.begin() + n, std::int8_t{1});
  // Fisher-Yates over the n up-steps and n+1 down-steps.
  for (int i = m - 1; i > 0; --i) {
    const auto j = static_cast<size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(w[static_cast<size_t>(i)], w[j]);
  }
  // Cycle lemma: the total is -1, so rotating to just after the first
  // prefix-sum minimum makes every proper prefix sum nonnegative and parks
  // the lone excess down-step at the end. Dropping it leaves a Dyck path,
  // and each path corresponds to exactly 2n+1 arrangements.
  int height = 0, min_height = 1, min_pos = -1;
  for (int i = 0; i < m; ++i) {
    height += w[static_cast<size_t>(i)];
    if (height < min_height) {
      min_height = height;
      min_pos = i;
    }
  }
  std::vector<std::int8_t> steps;
  steps.reserve(static_cast<size_t>(2 * n));
  for (int i = 1; i < m; ++i)
    steps.push_back(w[static_cast<size_t>((min_pos + i) % m)]);
  return DyckPath(std::move(steps));
}

Permutation dyck_to_avoider(const DyckPath& path) {
  const auto& steps = path.steps();
  const int n = path.semilength();
  std::vector<int> out(static_cast<size_t>(n));

  // match[i] = index of the down-step closing the up-step at i.
  std::vector<int> match(steps.size());
  {
    std::vector<int> open;
    for (size_t i = 0; i < steps.size(); ++i) {
      if (steps[i] == 1) {
        open.push_back(static_cast<int>(i));
      } else {
        match[static_cast<size_t>(open.back())] = static_cast<int>(i);
        open.pop_back();
      }
    }
  }

  struct Frame {
    int step_lo, step_hi;  // path slice [step_lo, step_hi)
    int pos_lo;            // first output position of this slice
    int val_hi;            // largest value available to this slice
  };
  std::vector<Frame> work{{0, static_cast<int>(steps.size()), 0, n}};
  while (!work.empty()) {
    const Frame f = work.back();
    work.pop_back();
    if (f.step_lo >= f.step_hi) continue;
    const int close = match[static_cast<size_t>(f.step_lo)];
    const int left_semilength = (close - f.step_lo - 1) / 2;
    const int max_pos = f.pos_lo + left_semilength;
    out[static_cast<size_t>(max_pos)] = f.val_hi;
    // Left block: values directly below the maximum; right block: the rest.
    work.push_back({f.step_lo + 1, close, f.pos_lo, f.val_hi - 1});
    work.push_back({close + 1, f.step_hi, max_pos + 1, f.val_hi - 1 - left_semilength});
  }
  return Permutation(std::move(out));
}

DyckPath avoider_to_dyck(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> pos_of(static_cast<size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pos_of[static_cast<size_t>(sigma.at(i))] = i;

  std::vector<std::int8_t> steps(static_cast<size_t>(2 * n));

  struct Frame {
    int pos_lo, pos_hi;  // positions [pos_lo, pos_hi)
    int val_hi;
    int step_lo;         // where this slice's encoding starts
  };
  std::vector<Frame> work{{0, n, n, 0}};
  while (!work.empty()) {
    const Frame f = work.back();
    work.pop_back();
    const int len = f.pos_hi - f.pos_lo;
    if (len == 0) continue;
    const int max_pos = pos_of[static_cast<size_t>(f.val_hi)];
    if (max_pos < f.pos_lo || max_pos >= f.pos_hi)
      throw std::invalid_argument(
          "input does not avoid 132: block structure violated at value " +
          std::to_string(f.val_hi));
    const int left_len = max_pos - f.pos_lo;
    const int close = f.step_lo + 1 + 2 * left_len;
    steps[static_cast<size_t>(f.step_lo)] = 1;
    steps[static_cast<size_t>(close)] = -1;
    work.push_back({f.pos_lo, max_pos, f.val_hi - 1, f.step_lo + 1});
    work.push_back({max_pos + 1, f.pos_hi, f.val_hi - 1 - left_len, close + 1});
  }
  return DyckPath(std::move(steps));
}

Permutation sample_avoider_132(int n, CounterRng& rng) {
  return dyck_to_avoider(sample_dyck_path(n, rng));
}

Permutation sample_uniform(int n, CounterRng& rng) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(v[static_cast<size_t>(i)], v[j]);
  }
  return Permutation(std::move(v));
}

bool has_increasing_triple(const Permutation& sigma) {
  int best_single = INT32_MAX, best_pair_tail = INT32_MAX;
  for (int x : sigma.values()) {
    if (x > best_pair_tail) return true;
    if (x > best_single) best_pair_tail = std::min(best_pair_tail, x);
    best_single = std::min(best_single, x);
  }
  return false;
}

mpz_class count_no_increasing_triple(int l) {
  if (l < 0 || l > 14)
    throw std::domain_error("count_no_increasing_triple is guarded to l <= 14");
  mpz_class count = 0;
  enumerate_avoiders(l, Permutation({1, 3, 2}), [&](const Permutation& sigma) {
    if (!has_increasing_triple(sigma)) ++count;
  });
  return count;
}

}  // namespace permlab
