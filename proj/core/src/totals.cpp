#include "permlab/totals.hpp"

#include <stdexcept>

#include "permlab/parallel.hpp"
#include "permlab/updown_dp.hpp"

namespace permlab {

std::vector<mpz_class> k_sequence(int max_index) {
  if (max_index < 0) throw std::invalid_argument("k_sequence needs max_index >= 0");
  std::vector<mpz_class> k;
  k.reserve(static_cast<size_t>(max_index) + 1);
  k.emplace_back(1);
  mpz_class running = 1;  // sum of k[0..l-1]
  for (int l = 1; l <= max_index; ++l) {
    k.push_back(running);
    running += k.back();
  }
  for (int l = 1; l <= max_index; ++l) {
    mpz_class closed = 1;
    closed <<= l - 1;
    if (k[static_cast<size_t>(l)] != closed)
      throw std::logic_error("k recurrence disagrees with 2^(l-1) at l = " +
                             std::to_string(l));
  }
  return k;
}

namespace {

constexpr std::int64_t kConvolutionBlock = 64;
constexpr std::int64_t kParallelCutoff = 256;

// Per-block partial sums of the convolution terms for one n, reduced in
// block order afterwards.
struct Partials {
  mpz_class beta, gtilde, alpha;
};

}  // namespace

TotalsTable totals_u2d(int n_max) {
  if (n_max < 2) throw std::invalid_argument("totals need n_max >= 2");
  TotalsTable t{PatternKind::U2D, n_max, {}, {}, {}, CatalanTable(n_max)};
  t.alpha.assign(static_cast<size_t>(n_max) + 1, mpz_class(0));
  t.beta.assign(static_cast<size_t>(n_max) + 1, mpz_class(0));

  // C_m - 1 appears in the alpha convolution: it encodes that exactly one of
  // the C_m right blocks (the decreasing one) contributes the beta branch
  // instead.
  std::vector<mpz_class> cat_minus_one(static_cast<size_t>(n_max) + 1);
  for (int m = 0; m <= n_max; ++m)
    cat_minus_one[static_cast<size_t>(m)] = t.catalan.at(m) - 1;

  mpz_class beta_prefix = 0;  // sum of beta[1..n-1]
  mpz_class cat_prefix = 0;   // sum of C_1..C_{n-1}
  const auto& C = t.catalan;

  for (int n = 2; n <= n_max; ++n) {
    beta_prefix += t.beta[static_cast<size_t>(n - 1)];
    cat_prefix += C.at(n - 1);

    std::vector<Partials> parts(block_count(1, n + 1, kConvolutionBlock));
    const auto convolve = [&](std::int64_t lo, std::int64_t hi, std::size_t blk) {
      auto& acc = parts[blk];
      for (std::int64_t j = lo; j < hi; ++j) {
        const auto nj = static_cast<size_t>(n - j);
        const auto j1 = static_cast<size_t>(j - 1);
        if (j <= n - 1) {
          // beta_n terms: alpha_{j-1} C_{n-j} + C_{j-1} beta_{n-j}
          mpz_addmul(acc.beta.get_mpz_t(), t.alpha[j1].get_mpz_t(),
                     C.at(static_cast<int>(nj)).get_mpz_t());
          mpz_addmul(acc.beta.get_mpz_t(), C.at(static_cast<int>(j1)).get_mpz_t(),
                     t.beta[nj].get_mpz_t());
        }
        if (j >= 2) {
          // alpha_n terms: alpha_{j-1} (C_{n-j} - 1) + C_{j-1} alpha_{n-j}
          mpz_addmul(acc.alpha.get_mpz_t(), t.alpha[j1].get_mpz_t(),
                     cat_minus_one[nj].get_mpz_t());
          mpz_addmul(acc.alpha.get_mpz_t(), C.at(static_cast<int>(j1)).get_mpz_t(),
                     t.alpha[nj].get_mpz_t());
        }
      }
    };
    if (n >= kParallelCutoff)
      for_blocks(1, n + 1, kConvolutionBlock, convolve);
    else
      for (std::size_t b = 0; b < parts.size(); ++b) {
        const std::int64_t lo = 1 + static_cast<std::int64_t>(b) * kConvolutionBlock;
        convolve(lo, std::min<std::int64_t>(lo + kConvolutionBlock, n + 1), b);
      }

    mpz_class beta_n = t.beta[static_cast<size_t>(n - 1)];
    mpz_class alpha_n = t.alpha[static_cast<size_t>(n - 1)];
    for (auto& p : parts) {
      beta_n += p.beta;
      alpha_n += p.alpha;
    }
    alpha_n += beta_prefix + cat_prefix;  // sum_{j=2..n} (beta_{j-1} + C_{j-1})
    t.beta[static_cast<size_t>(n)] = std::move(beta_n);
    t.alpha[static_cast<size_t>(n)] = std::move(alpha_n);
  }
  return t;
}

TotalsTable totals_u3d(int n_max) {
  if (n_max < 2) throw std::invalid_argument("totals need n_max >= 2");
  TotalsTable t{PatternKind::U3D, n_max, {}, {}, {}, CatalanTable(n_max)};
  t.alpha.assign(static_cast<size_t>(n_max) + 1, mpz_class(0));
  t.beta.assign(static_cast<size_t>(n_max) + 1, mpz_class(0));
  t.gtilde.assign(static_cast<size_t>(n_max) + 1, mpz_class(0));

  const auto k = k_sequence(n_max);
  std::vector<mpz_class> cat_minus_one(static_cast<size_t>(n_max) + 1);
  std::vector<mpz_class> cat_minus_k(static_cast<size_t>(n_max) + 1);
  for (int m = 0; m <= n_max; ++m) {
    cat_minus_one[static_cast<size_t>(m)] = t.catalan.at(m) - 1;
    cat_minus_k[static_cast<size_t>(m)] = t.catalan.at(m) - k[static_cast<size_t>(m)];
  }

  mpz_class beta_prefix = 0, cat_prefix = 0;
  const auto& C = t.catalan;

  for (int n = 2; n <= n_max; ++n) {
    beta_prefix += t.beta[static_cast<size_t>(n - 1)];
    cat_prefix += C.at(n - 1);

    std::vector<Partials> parts(block_count(1, n + 1, kConvolutionBlock));
    const auto convolve = [&](std::int64_t lo, std::int64_t hi, std::size_t blk) {
      auto& acc = parts[blk];
      for (std::int64_t j = lo; j < hi; ++j) {
        const auto nj = static_cast<size_t>(n - j);
        const auto j1 = static_cast<size_t>(j - 1);
        if (j <= n - 1) {
          mpz_addmul(acc.beta.get_mpz_t(), t.alpha[j1].get_mpz_t(),
                     C.at(static_cast<int>(nj)).get_mpz_t());
          mpz_addmul(acc.beta.get_mpz_t(), C.at(static_cast<int>(j1)).get_mpz_t(),
                     t.beta[nj].get_mpz_t());
        }
        if (j >= 2) {
          // gtilde_n terms: alpha_{j-1} (C_{n-j} - 1) + C_{j-1} gtilde_{n-j}
          mpz_addmul(acc.gtilde.get_mpz_t(), t.alpha[j1].get_mpz_t(),
                     cat_minus_one[nj].get_mpz_t());
          mpz_addmul(acc.gtilde.get_mpz_t(), C.at(static_cast<int>(j1)).get_mpz_t(),
                     t.gtilde[nj].get_mpz_t());
          // alpha_n terms: alpha_{j-1} (C_{n-j} - k_{n-j}) + C_{j-1} alpha_{n-j}
          //              + gtilde_{j-1} k_{n-j}
          mpz_addmul(acc.alpha.get_mpz_t(), t.alpha[j1].get_mpz_t(),
                     cat_minus_k[nj].get_mpz_t());
          mpz_addmul(acc.alpha.get_mpz_t(), C.at(static_cast<int>(j1)).get_mpz_t(),
                     t.alpha[nj].get_mpz_t());
          mpz_addmul(acc.alpha.get_mpz_t(), t.gtilde[j1].get_mpz_t(),
                     k[nj].get_mpz_t());
        }
      }
    };
    if (n >= kParallelCutoff)
      for_blocks(1, n + 1, kConvolutionBlock, convolve);
    else
      for (std::size_t b = 0; b < parts.size(); ++b) {
        const std::int64_t lo = 1 + static_cast<std::int64_t>(b) * kConvolutionBlock;
        convolve(lo, std::min<std::int64_t>(lo + kConvolutionBlock, n + 1), b);
      }

    mpz_class beta_n = t.beta[static_cast<size_t>(n - 1)];
    mpz_class gtilde_n = t.gtilde[static_cast<size_t>(n - 1)];
    mpz_class alpha_n = t.alpha[static_cast<size_t>(n - 1)];
    for (auto& p : parts) {
      beta_n += p.beta;
      gtilde_n += p.gtilde;
      alpha_n += p.alpha;
    }
    gtilde_n += beta_prefix + cat_prefix;
    t.beta[static_cast<size_t>(n)] = std::move(beta_n);
    t.gtilde[static_cast<size_t>(n)] = std::move(gtilde_n);
    t.alpha[static_cast<size_t>(n)] = std::move(alpha_n);
  }
  return t;
}

namespace {

void check_index(const TotalsTable& table, int n) {
  if (n < 0 || n > table.max_index)
    throw std::out_of_range("totals index out of range: " + std::to_string(n));
}

}  // namespace

mpq_class expected_blocks(const TotalsTable& table, int n) {
  check_index(table, n);
  mpq_class q(table.beta[static_cast<size_t>(n)], table.catalan.at(n));
  q.canonicalize();
  return q;
}

mpq_class expected_suffix(const TotalsTable& table, int n, int offset) {
  check_index(table, n);
  const mpz_class* total = nullptr;
  if (table.kind == PatternKind::U2D && offset == 1)
    total = &table.alpha[static_cast<size_t>(n)];
  else if (table.kind == PatternKind::U3D && offset == 1)
    total = &table.gtilde[static_cast<size_t>(n)];
  else if (table.kind == PatternKind::U3D && offset == 2)
    total = &table.alpha[static_cast<size_t>(n)];
  else
    throw std::invalid_argument("no stored total for suffix offset " +
                                std::to_string(offset));
  mpq_class q(*total, table.catalan.at(n));
  q.canonicalize();
  return q;
}

LengthBounds expected_length_bounds(const TotalsTable& table, int n) {
  check_index(table, n);
  const int l = pattern_period(table.kind);
  LengthBounds out;
  out.lo = expected_blocks(table, n) * l;
  out.hi = out.lo + 1;
  if (n <= 11) {
    const auto pattern =
        UpDownPattern::parse(table.kind == PatternKind::U2D ? "UUD" : "UUUD");
    mpz_class total_length = 0;
    enumerate_avoiders(n, Permutation({1, 3, 2}), [&](const Permutation& sigma) {
      total_length += statistics(sigma, pattern).length;
    });
    mpq_class exact(total_length, table.catalan.at(n));
    exact.canonicalize();
    out.exact = std::move(exact);
  }
  return out;
}

}  // namespace permlab
