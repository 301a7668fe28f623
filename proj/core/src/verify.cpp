#include "permlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "permlab/bijections.hpp"
#include "permlab/catalan.hpp"
#include "permlab/io.hpp"
#include "permlab/perm.hpp"
#include "permlab/rng.hpp"
#include "permlab/series.hpp"
#include "permlab/stats.hpp"
#include "permlab/totals.hpp"
#include "permlab/updown_dp.hpp"

namespace permlab {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { report_.suite = std::move(name); }

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    report_.checks.push_back({name, pass, detail});
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

const std::vector<Permutation>& six_patterns() {
  static const std::vector<Permutation> taus = {
      Permutation({1, 2, 3}), Permutation({1, 3, 2}), Permutation({2, 1, 3}),
      Permutation({2, 3, 1}), Permutation({3, 1, 2}), Permutation({3, 2, 1})};
  return taus;
}

std::string perm_witness(const Permutation& sigma, const std::string& extra) {
  return "witness sigma = [" + sigma.str() + "] " + extra;
}

}  // namespace

SuiteReport verify_permcore(int n_max) {
  Suite suite("permcore");

  {
    bool pass = true;
    std::string detail;
    for (int n = 0; n <= std::min(n_max, 6) && pass; ++n) {
      enumerate_permutations(n, [&](const Permutation& sigma) {
        if (!pass) return;
        const auto word = updown_word(sigma);
        const struct {
          SymmetryOp op;
          Permutation image;
        } cases[] = {{SymmetryOp::Reverse, reverse(sigma)},
                     {SymmetryOp::Complement, complement(sigma)},
                     {SymmetryOp::ReverseComplement, reverse(complement(sigma))}};
        for (const auto& c : cases)
          if (updown_word(c.image) != transform_pattern(word, c.op)) {
            pass = false;
            detail = perm_witness(sigma, "symmetry word mismatch");
            return;
          }
      });
    }
    suite.check("updown word commutes with symmetries (exhaustive)", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    CounterRng rng(20240811, 0);
    for (int rep = 0; rep < 500 && pass; ++rep) {
      const int n = 1 + static_cast<int>(rng.below(10));
      std::vector<int> vals;
      std::set<int> used;
      while (static_cast<int>(vals.size()) < n) {
        const int v = static_cast<int>(rng.below(1000)) - 500;
        if (used.insert(v).second) vals.push_back(v);
      }
      const auto reduced = reduce(vals);
      if (reduce(reduced.values()) != reduced ||
          updown_word(std::span<const int>(vals)) != updown_word(reduced)) {
        pass = false;
        detail = "witness values of length " + std::to_string(n);
      }
    }
    suite.check("reduce is idempotent and word-preserving", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (int n = 0; n <= std::min(n_max, 6) && pass; ++n) {
      enumerate_permutations(n, [&](const Permutation& sigma) {
        if (!pass) return;
        for (const auto& tau : six_patterns()) {
          const bool direct = contains(sigma, tau);
          if (direct != contains(reverse(sigma), reverse(tau)) ||
              direct != contains(complement(sigma), complement(tau))) {
            pass = false;
            detail = perm_witness(sigma, "tau = [" + tau.str() + "]");
            return;
          }
        }
      });
    }
    suite.check("containment commutes with symmetries (exhaustive)", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (int n = 0; n <= std::min(n_max, 7) && pass; ++n) {
      enumerate_permutations(n, [&](const Permutation& sigma) {
        if (!pass) return;
        for (const auto& tau : six_patterns())
          if (contains(sigma, tau) != contains_exhaustive(sigma, tau)) {
            pass = false;
            detail = perm_witness(sigma, "tau = [" + tau.str() + "]");
            return;
          }
      });
    }
    suite.check("fast containment path matches exhaustive scan", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    const CatalanTable cat(std::min(n_max, 8));
    for (int n = 0; n <= std::min(n_max, 8) && pass; ++n) {
      for (const auto& tau : six_patterns()) {
        std::uint64_t count = 0;
        enumerate_permutations(n, [&](const Permutation& sigma) {
          if (avoids(sigma, tau)) ++count;
        });
        if (mpz_class(static_cast<unsigned long>(count)) != cat.at(n)) {
          pass = false;
          detail = "n = " + std::to_string(n) + ", tau = [" + tau.str() +
                   "], count = " + std::to_string(count);
          break;
        }
      }
    }
    suite.check("avoider counts match Catalan numbers (filter)", pass, detail);
  }

  return suite.take();
}

SuiteReport verify_updown(int n_max, std::uint64_t seed) {
  Suite suite("updown");
  const std::vector<UpDownPattern> patterns = {
      UpDownPattern::parse("U"),    UpDownPattern::parse("UD"),
      UpDownPattern::parse("UUD"),  UpDownPattern::parse("UUUD"),
      UpDownPattern::parse("UDD"),  UpDownPattern::parse("UDDD")};

  {
    bool pass = true;
    std::string detail;
    for (int n = 0; n <= std::min(n_max, 8) && pass; ++n) {
      enumerate_permutations(n, [&](const Permutation& sigma) {
        if (!pass) return;
        for (const auto& pat : patterns) {
          std::vector<int> offsets;
          for (int r = 0; r < pat.size(); ++r) offsets.push_back(r);
          const auto fast = statistics(sigma, pat, offsets);
          const auto slow = oracle_statistics(sigma, pat, offsets);
          const auto quad = max_steps(sigma, pat).first;
          if (fast != slow || quad != fast.max_steps) {
            pass = false;
            detail = perm_witness(sigma, "pattern " + pat.str());
            return;
          }
        }
      });
    }
    suite.check("DP matches subsequence oracle (exhaustive)", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (int n : {10, 12}) {
      for (int rep = 0; rep < 1000 && pass; ++rep) {
        CounterRng rng(seed, static_cast<std::uint64_t>(n) * 100000 + rep);
        const auto sigma = sample_uniform(n, rng);
        for (const auto& pat : patterns) {
          std::vector<int> offsets;
          for (int r = 0; r < pat.size(); ++r) offsets.push_back(r);
          if (statistics(sigma, pat, offsets) !=
              oracle_statistics(sigma, pat, offsets)) {
            pass = false;
            detail = perm_witness(sigma, "pattern " + pat.str());
            break;
          }
        }
      }
    }
    suite.check("DP matches oracle on random permutations (n = 10, 12)", pass,
                detail);
  }

  {
    // For the pattern U the repeated-pattern length is the longest increasing
    // subsequence length, except that a bare single element counts as an
    // incomplete pattern (L = 0 exactly when the permutation is decreasing).
    bool pass = true;
    std::string detail;
    const auto pat_u = UpDownPattern::parse("U");
    for (int n = 0; n <= std::min(n_max, 7) && pass; ++n) {
      enumerate_permutations(n, [&](const Permutation& sigma) {
        if (!pass) return;
        const int lis = longest_increasing_run(sigma);
        const auto expect = lis >= 2 ? lis : 0;
        if (statistics(sigma, pat_u).length != expect) {
          pass = false;
          detail = perm_witness(sigma, "LIS = " + std::to_string(lis));
        }
      });
    }
    CounterRng rng(seed, 777);
    for (int rep = 0; rep < 50 && pass; ++rep) {
      const auto sigma = sample_uniform(200, rng);
      if (statistics(sigma, pat_u).length != longest_increasing_run(sigma)) {
        pass = false;
        detail = "random witness at n = 200";
      }
    }
    suite.check("pattern U reduces to longest increasing subsequence", pass,
                detail);
  }

  {
    bool pass = true;
    std::string detail;
    const auto pat = UpDownPattern::parse("UUUD");
    const std::vector<int> offsets = {1, 2};
    for (int n = 0; n <= std::min(n_max, 8) && pass; ++n) {
      enumerate_permutations(n, [&](const Permutation& sigma) {
        if (!pass) return;
        const auto s = statistics(sigma, pat, offsets);
        const auto g = s.suffix.at(1);
        const auto a = s.suffix.at(2);
        if (std::abs(g - s.blocks) > 1 || std::abs(a - s.blocks) > 1) {
          pass = false;
          detail = perm_witness(sigma, "");
        }
      });
    }
    suite.check("UUUD prefix statistics stay within one block of B", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (int n = 0; n <= std::min(n_max, 6) && pass; ++n) {
      enumerate_permutations(n, [&](const Permutation& sigma) {
        if (!pass) return;
        for (const auto& pat : {UpDownPattern::parse("UUD"),
                                UpDownPattern::parse("UUUD")}) {
          const auto base = statistics(sigma, pat).length;
          const struct {
            SymmetryOp op;
            Permutation image;
          } cases[] = {{SymmetryOp::Reverse, reverse(sigma)},
                       {SymmetryOp::Complement, complement(sigma)},
                       {SymmetryOp::ReverseComplement, reverse(complement(sigma))}};
          for (const auto& c : cases)
            if (statistics(c.image, transform_pattern(pat, c.op)).length != base) {
              pass = false;
              detail = perm_witness(sigma, "pattern " + pat.str());
              return;
            }
        }
      });
    }
    suite.check("L transports through the symmetries (exhaustive)", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (int n = 1; n <= std::min(n_max, 7) && pass; ++n) {
      enumerate_permutations(n, [&](const Permutation& sigma) {
        if (!pass) return;
        bool decreasing = true;
        for (int i = 0; i + 1 < sigma.size(); ++i)
          decreasing = decreasing && sigma.at(i) > sigma.at(i + 1);
        const std::vector<int> off1 = {1};
        const std::vector<int> off2 = {2};
        const bool a2_zero =
            statistics(sigma, UpDownPattern::parse("UUD"), off1).suffix.at(1) == 0;
        const bool g3_zero =
            statistics(sigma, UpDownPattern::parse("UUUD"), off1).suffix.at(1) == 0;
        const bool a3_zero =
            statistics(sigma, UpDownPattern::parse("UUUD"), off2).suffix.at(2) == 0;
        if (a2_zero != decreasing || g3_zero != decreasing ||
            a3_zero != !has_increasing_triple(sigma)) {
          pass = false;
          detail = perm_witness(sigma, "");
        }
      });
    }
    suite.check("suffix-vanishing characterizations", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (int n = 0; n <= std::min(n_max, 7) && pass; ++n) {
      enumerate_permutations(n, [&](const Permutation& sigma) {
        if (!pass) return;
        for (const auto& pat : patterns) {
          const auto s = statistics(sigma, pat);
          const bool ok = (s.length == 0) == (s.blocks == 0) &&
                          (s.length == 0 || (s.length - 1) % pat.size() == 0);
          if (!ok) {
            pass = false;
            detail = perm_witness(sigma, "pattern " + pat.str());
            return;
          }
        }
      });
    }
    suite.check("L = 0 iff B = 0, and L = 1 (mod l) otherwise", pass, detail);
  }

  return suite.take();
}

SuiteReport verify_catalan(int n_max, std::uint64_t seed) {
  Suite suite("catalan");

  {
    const CatalanTable cat(10);
    const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    bool pass = true;
    for (int n = 0; n <= 10; ++n)
      pass = pass && cat.at(n) == expected[n];
    suite.check("Catalan table prefix", pass);
  }

  {
    bool pass = true;
    std::string detail;
    const int cap = std::min(n_max, 8);
    const CatalanTable cat(cap);
    for (int n = 0; n <= cap && pass; ++n)
      for (const auto& tau : six_patterns()) {
        const auto count = count_avoiders(n, tau);
        if (mpz_class(static_cast<unsigned long>(count)) != cat.at(n)) {
          pass = false;
          detail = "n = " + std::to_string(n) + ", tau = [" + tau.str() + "]";
          break;
        }
      }
    suite.check("enumerated avoider counts equal Catalan numbers", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (int rep = 0; rep < 200 && pass; ++rep) {
      CounterRng rng(seed, 5000 + rep);
      const int n = rep % 2 == 0 ? 50 : 1000;
      const auto sigma = sample_avoider_132(n, rng);
      if (sigma.size() != n || contains_132(sigma)) {
        pass = false;
        detail = "rep " + std::to_string(rep);
      }
    }
    suite.check("sampled avoiders avoid 132", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    for (int rep = 0; rep < 10000 && pass; ++rep) {
      CounterRng rng(seed, 90000 + rep);
      const int n = static_cast<int>(rng.below(65));
      const auto path = sample_dyck_path(n, rng);
      if (avoider_to_dyck(dyck_to_avoider(path)) != path) {
        pass = false;
        detail = "semilength " + std::to_string(n) + ", rep " + std::to_string(rep);
      }
    }
    suite.check("Dyck decoding round-trips (10^4 random paths)", pass, detail);
  }

  {
    // Position of the maximum at n = 8 against C_{j-1} C_{n-j} / C_n.
    const int n = 8;
    const int reps = 1000000;
    const CatalanTable cat(n);
    std::vector<double> freq(static_cast<size_t>(n), 0.0);
    CounterRng rng(seed, 31337);
    for (int rep = 0; rep < reps; ++rep) {
      const auto sigma = sample_avoider_132(n, rng);
      for (int i = 0; i < n; ++i)
        if (sigma.at(i) == n) {
          freq[static_cast<size_t>(i)] += 1.0;
          break;
        }
    }
    bool pass = true;
    std::string detail;
    for (int j = 1; j <= n; ++j) {
      const double p = mpq_class(cat.at(j - 1) * cat.at(n - j), cat.at(n)).get_d();
      const double se = std::sqrt(p * (1 - p) / reps);
      const double obs = freq[static_cast<size_t>(j - 1)] / reps;
      if (std::fabs(obs - p) > 3 * se) {
        pass = false;
        detail = "position " + std::to_string(j) + ": observed " +
                 std::to_string(obs) + ", expected " + std::to_string(p);
      }
    }
    suite.check("position of maximum matches the split law (3 SE)", pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    const auto k = k_sequence(std::min(n_max, 12));
    for (int l = 1; l <= std::min(n_max, 12) && pass; ++l) {
      mpz_class expected = 1;
      expected <<= l - 1;
      if (count_no_increasing_triple(l) != expected ||
          k[static_cast<size_t>(l)] != expected) {
        pass = false;
        detail = "l = " + std::to_string(l);
      }
    }
    suite.check("no-increasing-triple counts equal 2^(l-1)", pass, detail);
  }

  {
    CounterRng rng(seed, 424242);
    int first = 0;
    const int reps = 100000;
    for (int rep = 0; rep < reps; ++rep)
      if (sample_uniform(2, rng).at(0) == 1) ++first;
    const double f = static_cast<double>(first) / reps;
    suite.check("uniform shuffle is balanced at n = 2",
                std::fabs(f - 0.5) < 0.01, "frequency " + std::to_string(f));
  }

  return suite.take();
}

SuiteReport verify_bijections(int n_max) {
  Suite suite("bijections");
  const int cap = std::min(n_max, 9);

  {
    bool pass = true;
    std::string detail;
    const auto tau132 = Permutation({1, 3, 2});
    const auto tau123 = Permutation({1, 2, 3});
    for (int n = 0; n <= cap && pass; ++n) {
      std::multiset<std::string> image, expected;
      enumerate_avoiders(n, tau132, [&](const Permutation& sigma) {
        image.insert(to_123_avoider(sigma).str());
      });
      enumerate_avoiders(n, tau123, [&](const Permutation& sigma) {
        expected.insert(sigma.str());
      });
      if (image != expected) {
        pass = false;
        detail = "n = " + std::to_string(n);
      }
    }
    suite.check("132 -> 123 map is a bijection onto the 123-avoiders", pass,
                detail);
  }

  {
    // Falsifiable by design, reported rather than asserted: the bijection
    // preserves pattern copies per minima segment, but a chain in the image
    // can span several minima, so the global L may differ. Witnesses are
    // counted and the first one is recorded.
    const auto tau132 = Permutation({1, 3, 2});
    const struct {
      const char* from;
      const char* to;
    } pairs[] = {{"UUD", "UDD"}, {"UUUD", "UDDD"}};
    std::uint64_t mismatches = 0;
    std::string first;
    for (int n = 0; n <= cap; ++n) {
      enumerate_avoiders(n, tau132, [&](const Permutation& sigma) {
        const auto image = to_123_avoider(sigma);
        for (const auto& p : pairs) {
          const auto lhs = statistics(sigma, UpDownPattern::parse(p.from)).length;
          const auto rhs = statistics(image, UpDownPattern::parse(p.to)).length;
          if (lhs != rhs) {
            ++mismatches;
            if (first.empty())
              first = perm_witness(sigma, std::string("pattern ") + p.from +
                                              " image [" + image.str() + "]");
          }
        }
      });
    }
    suite.check("L transport through the 132 -> 123 bijection (reported only)",
                true,
                mismatches == 0
                    ? "no mismatches"
                    : std::to_string(mismatches) + " mismatches; first " + first);
  }

  {
    bool pass = true;
    std::string detail;
    const auto tau132 = Permutation({1, 3, 2});
    for (int n = 0; n <= cap && pass; ++n) {
      enumerate_avoiders(n, tau132, [&](const Permutation& sigma) {
        if (!pass) return;
        for (const char* base : {"UUD", "UUUD"}) {
          const auto pat = UpDownPattern::parse(base);
          const auto l0 = statistics(sigma, pat).length;
          if (statistics(reverse(sigma),
                         transform_pattern(pat, SymmetryOp::Reverse)).length != l0 ||
              statistics(complement(sigma),
                         transform_pattern(pat, SymmetryOp::Complement)).length != l0 ||
              statistics(reverse(complement(sigma)),
                         transform_pattern(pat, SymmetryOp::ReverseComplement)).length != l0) {
            pass = false;
            detail = perm_witness(sigma, std::string("pattern ") + base);
            return;
          }
        }
      });
    }
    suite.check("L transports through reverse/complement on avoiders", pass,
                detail);
  }

  {
    const std::vector<int> window{4, 3, 5, 7, 6, 8};
    const auto d = left_to_right_minima(std::span<const int>(window));
    const bool pass = d.minima_positions == std::vector<int>{0, 1} &&
                      d.minima_values == std::vector<int>{4, 3} &&
                      d.other_positions == std::vector<int>{2, 3, 4, 5};
    suite.check("left-to-right minima of 435768", pass);
  }

  {
    const auto p3 = corollary_pairs(3);
    const auto p4 = corollary_pairs(4);
    const bool pass =
        p3.size() == 5 && p4.size() == 5 && p3[0].pattern.str() == "UDD" &&
        p3[0].tau == Permutation({2, 3, 1}) && p3[4].pattern.str() == "UUD" &&
        p3[4].tau == Permutation({3, 2, 1}) && p4[2].pattern.str() == "DUUU" &&
        p4[2].tau == Permutation({2, 1, 3});
    suite.check("corollary pair tables", pass);
  }

  return suite.take();
}

SuiteReport verify_totals(int n_max) {
  Suite suite("totals");
  const int cap = std::min(n_max, 11);

  const auto u2d = totals_u2d(std::max(cap, 2));
  const auto u3d = totals_u3d(std::max(cap, 2));

  {
    bool pass = true;
    std::string detail;
    const auto tau132 = Permutation({1, 3, 2});
    const auto uud = UpDownPattern::parse("UUD");
    const auto uuud = UpDownPattern::parse("UUUD");
    const std::vector<int> off1 = {1};
    const std::vector<int> off12 = {1, 2};
    for (int n = 0; n <= cap && pass; ++n) {
      mpz_class a2 = 0, b2 = 0, a3 = 0, b3 = 0, g3 = 0;
      enumerate_avoiders(n, tau132, [&](const Permutation& sigma) {
        const auto s2 = statistics(sigma, uud, off1);
        const auto s3 = statistics(sigma, uuud, off12);
        b2 += s2.blocks;
        a2 += s2.suffix.at(1);
        b3 += s3.blocks;
        g3 += s3.suffix.at(1);
        a3 += s3.suffix.at(2);
      });
      if (a2 != u2d.alpha[static_cast<size_t>(n)] ||
          b2 != u2d.beta[static_cast<size_t>(n)] ||
          a3 != u3d.alpha[static_cast<size_t>(n)] ||
          b3 != u3d.beta[static_cast<size_t>(n)] ||
          g3 != u3d.gtilde[static_cast<size_t>(n)]) {
        pass = false;
        detail = "n = " + std::to_string(n);
      }
    }
    suite.check("recurrence totals equal enumeration totals", pass, detail);
  }

  {
    // Reported, not asserted: the expectation is monotone over the computed
    // range but that is not a theorem here.
    std::string detail;
    for (int n = 1; n <= u2d.max_index; ++n)
      if (expected_blocks(u2d, n) < expected_blocks(u2d, n - 1)) {
        detail = "U2D decrease at n = " + std::to_string(n);
        break;
      }
    suite.check("expected blocks nondecreasing (reported only)", true,
                detail.empty() ? "no violations" : detail);
  }

  {
    const bool pass =
        expected_blocks(u2d, 3) == 0 &&
        expected_blocks(u2d, 4) == mpq_class(1, 14) &&
        expected_suffix(u3d, 2, 1) == mpq_class(1, 2);
    suite.check("expected-value spot checks", pass);
  }

  {
    const auto b3 = expected_length_bounds(u2d, 3);
    const auto b4 = expected_length_bounds(u2d, 4);
    const bool pass = b3.lo == 0 && b3.hi == 1 && b3.exact.has_value() &&
                      *b3.exact == 0 && b4.lo == mpq_class(3, 14) &&
                      b4.hi == mpq_class(17, 14) && b4.exact.has_value() &&
                      *b4.exact == mpq_class(2, 7);
    suite.check("expected-length bracket spot checks", pass);
  }

  return suite.take();
}

SuiteReport verify_series(int order) {
  Suite suite("series");
  const int cap = std::max(order, 16);

  {
    const auto comp = series_b_u2d(cap, SeriesRoute::Compositional);
    const auto closed = series_b_u2d(cap, SeriesRoute::Closed);
    bool pass = true;
    std::string detail;
    for (int n = 0; n <= cap; ++n)
      if (comp.coeff(n) != closed.coeff(n)) {
        pass = false;
        detail = "first mismatch at n = " + std::to_string(n);
        break;
      }
    suite.check("B routes agree to order " + std::to_string(cap), pass, detail);
  }

  {
    const auto comp = series_g_u3d(cap, SeriesRoute::Compositional);
    const auto closed = series_g_u3d(cap, SeriesRoute::Closed);
    bool pass = true;
    std::string detail;
    for (int n = 0; n <= cap; ++n)
      if (comp.coeff(n) != closed.coeff(n)) {
        pass = false;
        detail = "first mismatch at n = " + std::to_string(n);
        break;
      }
    suite.check("G routes agree to order " + std::to_string(cap), pass, detail);
  }

  {
    const int tot_cap = std::min(cap, 200);
    const auto b = series_b_u2d(tot_cap, SeriesRoute::Closed);
    const auto g = series_g_u3d(tot_cap, SeriesRoute::Closed);
    const auto u2d = totals_u2d(std::max(tot_cap, 2));
    const auto u3d = totals_u3d(std::max(tot_cap, 2));
    bool pass = true;
    std::string detail;
    for (int n = 0; n <= tot_cap; ++n) {
      if (b.coeff(n).get_den() != 1 || g.coeff(n).get_den() != 1 ||
          b.coeff(n).get_num() != u2d.beta[static_cast<size_t>(n)] ||
          g.coeff(n).get_num() != u3d.gtilde[static_cast<size_t>(n)]) {
        pass = false;
        detail = "n = " + std::to_string(n);
        break;
      }
    }
    suite.check("series coefficients equal recurrence totals", pass, detail);
  }

  {
    const int k_cap = std::min(cap, 64);
    const auto kt = k_generating_series(k_cap);
    const auto k = k_sequence(k_cap);
    bool pass = true;
    for (int l = 0; l <= k_cap; ++l)
      pass = pass && kt.coeff(l) == mpq_class(k[static_cast<size_t>(l)]);
    suite.check("K(t) coefficients match the k recurrence", pass);
  }

  {
    const int f_cap = std::min(cap, 512);
    const auto exact_b = series_b_u2d(f_cap, SeriesRoute::Closed);
    const auto scaled_b = series_b_u2d_scaled(f_cap);
    bool pass = true;
    std::string detail;
    mpq_class four_n = 1;
    for (int n = 0; n <= f_cap; ++n) {
      const double e = mpq_class(exact_b.coeff(n) / four_n).get_d();
      const double s = scaled_b.coeff(n);
      const double denom = std::max(std::fabs(e), 1e-300);
      if (e != 0.0 && std::fabs(s - e) / denom > 1e-9) {
        pass = false;
        detail = "n = " + std::to_string(n);
        break;
      }
      four_n *= 4;
    }
    suite.check("scaled mode tracks exact mode to 1e-9", pass, detail);
  }

  {
    // 7 r_n for B and 11 r_n for G over n = 2^4 .. 2^14; monotone approach is
    // reported and the threshold is asserted at the largest n.
    const int top = 1 << 14;
    const auto b = series_b_u2d_scaled(top);
    const auto g = series_g_u3d_scaled(top);
    std::string trend;
    double prev_b = 0.0, prev_g = 0.0;
    bool monotone = true;
    for (int e = 4; e <= 14; ++e) {
      const int n = 1 << e;
      const double rb = 7.0 * asymptotic_ratio(b, n);
      const double rg = 11.0 * asymptotic_ratio(g, n);
      if (e > 4 && (std::fabs(rb - 1) > std::fabs(prev_b - 1) ||
                    std::fabs(rg - 1) > std::fabs(prev_g - 1)))
        monotone = false;
      prev_b = rb;
      prev_g = rg;
    }
    std::ostringstream os;
    os << "at n = 2^14: 7r = " << prev_b << ", 11r = " << prev_g
       << (monotone ? " (monotone approach)" : " (non-monotone approach)");
    const bool pass = std::fabs(prev_b - 1) <= 0.01 && std::fabs(prev_g - 1) <= 0.01;
    suite.check("asymptotic ratios approach 1/7 and 1/11", pass, os.str());
  }

  return suite.take();
}

std::vector<SuiteReport> verify_all(int n_max, std::uint64_t seed, int order) {
  return {verify_permcore(n_max),  verify_updown(n_max, seed),
          verify_catalan(n_max, seed), verify_bijections(n_max),
          verify_totals(n_max),    verify_series(order)};
}

}  // namespace permlab
