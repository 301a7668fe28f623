#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permlab/catalan.hpp"
#include "permlab/perm.hpp"
#include "permlab/rng.hpp"
#include "permlab/updown_dp.hpp"

using namespace permlab;

namespace {

const UpDownPattern kUUD = UpDownPattern::parse("UUD");
const UpDownPattern kUUUD = UpDownPattern::parse("UUUD");

PhaseStats stats(const std::string& sigma_digits, const UpDownPattern& pat,
                 std::vector<int> offsets = {}) {
  std::vector<int> v;
  for (char c : sigma_digits) v.push_back(c - '0');
  return statistics(Permutation(v), pat, offsets);
}

}  // namespace

TEST_CASE("worked examples for the repeated pattern UUD") {
  CHECK(stats("342617985", kUUD).length == 7);
  CHECK(stats("342617985", kUUD).blocks == 2);
  CHECK(stats("319652478", kUUD).length == 0);
  CHECK(stats("435768921", kUUD).blocks == 2);
  CHECK(stats("213546", kUUD, {1}).suffix.at(1) == 2);
  CHECK(stats("435786921", kUUD, {1}).suffix.at(1) == 2);
  CHECK(stats("213564", kUUD).blocks == 1);
  CHECK(stats("213564", kUUD, {1}).suffix.at(1) == 1);
}

TEST_CASE("worked examples for the repeated pattern UUUD") {
  CHECK(stats("213564", kUUUD).max_steps == 4);
  CHECK(stats("213564", kUUUD).blocks == 1);
  CHECK(stats("213564", kUUUD, {2}).suffix.at(2) == 1);
  CHECK(stats("435786921", kUUUD, {1}).suffix.at(1) == 2);
  CHECK(stats("564321", kUUUD, {1}).suffix.at(1) == 1);
  CHECK(stats("564321", kUUUD, {2}).suffix.at(2) == 0);
  CHECK(stats("786543921", kUUUD, {2}).suffix.at(2) == 1);
  CHECK(stats("21", kUUUD, {1}).suffix.at(1) == 0);
}

TEST_CASE("degenerate inputs") {
  CHECK(statistics(Permutation(), kUUD).max_steps == 0);
  CHECK(statistics(Permutation({1}), kUUD).length == 0);
  const auto dec = Permutation({5, 4, 3, 2, 1});
  CHECK(statistics(dec, kUUD).max_steps == 0);
  CHECK(statistics(dec, kUUUD).max_steps == 0);
  // A single ascent is an incomplete UD.
  CHECK(statistics(Permutation({1, 2}), UpDownPattern::parse("UD")).length == 0);
  CHECK(statistics(Permutation({1, 2}), UpDownPattern::parse("UD")).max_steps == 1);
}

TEST_CASE("offset validation") {
  CHECK_THROWS_AS(stats("123", kUUD, {3}), std::invalid_argument);
  CHECK_THROWS_AS(stats("123", kUUD, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(oracle_statistics(Permutation::identity(15), kUUD),
                  std::domain_error);
}

TEST_CASE("oracle golden cases") {
  const auto p = Permutation({3, 4, 2, 6, 1, 7, 9, 8, 5});
  CHECK(oracle_statistics(p, kUUD).length == 7);
  CHECK(oracle_statistics(Permutation({1, 2}), UpDownPattern::parse("UD")).length == 0);
}

TEST_CASE("DP agrees with the oracle exhaustively through n = 7") {
  const std::vector<UpDownPattern> patterns = {
      UpDownPattern::parse("U"),   UpDownPattern::parse("UD"),
      UpDownPattern::parse("UUD"), UpDownPattern::parse("UUUD"),
      UpDownPattern::parse("UDD"), UpDownPattern::parse("UDDD")};
  for (int n = 0; n <= 7; ++n) {
    enumerate_permutations(n, [&](const Permutation& sigma) {
      for (const auto& pat : patterns) {
        std::vector<int> offsets;
        for (int r = 0; r < pat.size(); ++r) offsets.push_back(r);
        const auto fast = statistics(sigma, pat, offsets);
        const auto slow = oracle_statistics(sigma, pat, offsets);
        CAPTURE(sigma.str());
        CAPTURE(pat.str());
        REQUIRE(fast == slow);
        REQUIRE(max_steps(sigma, pat).first == fast.max_steps);
      }
    });
  }
}

TEST_CASE("DP agrees with the oracle on random inputs at n = 10 and 12") {
  const std::vector<UpDownPattern> patterns = {
      UpDownPattern::parse("U"), UpDownPattern::parse("UD"), kUUD, kUUUD};
  for (int n : {10, 12}) {
    for (int rep = 0; rep < 1000; ++rep) {
      CounterRng rng(99, static_cast<std::uint64_t>(n) * 10000 + rep);
      const auto sigma = sample_uniform(n, rng);
      for (const auto& pat : patterns) {
        std::vector<int> offsets;
        for (int r = 0; r < pat.size(); ++r) offsets.push_back(r);
        CAPTURE(sigma.str());
        REQUIRE(statistics(sigma, pat, offsets) ==
                oracle_statistics(sigma, pat, offsets));
      }
    }
  }
}

TEST_CASE("quadratic and Fenwick paths agree on larger random inputs") {
  const std::vector<UpDownPattern> patterns = {
      UpDownPattern::parse("U"), UpDownPattern::parse("UD"), kUUD, kUUUD,
      UpDownPattern::parse("UDDD"), UpDownPattern::parse("DUU")};
  CounterRng rng(123, 0);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 1 + static_cast<int>(rng.below(300));
    const auto sigma = sample_uniform(n, rng);
    for (const auto& pat : patterns)
      REQUIRE(max_steps(sigma, pat).first == max_steps_value(sigma, pat));
  }
}

TEST_CASE("pattern U matches longest increasing subsequence") {
  CounterRng rng(5, 5);
  const auto pat_u = UpDownPattern::parse("U");
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + static_cast<int>(rng.below(400));
    const auto sigma = sample_uniform(n, rng);
    const int lis = longest_increasing_run(sigma);
    CHECK(statistics(sigma, pat_u).length == (lis >= 2 ? lis : 0));
  }
  // Decreasing input: the bare single element is an incomplete pattern.
  CHECK(statistics(Permutation({3, 2, 1}), pat_u).length == 0);
  CHECK(longest_increasing_run(Permutation({3, 2, 1})) == 1);
}

TEST_CASE("phase table invariants") {
  CounterRng rng(19, 4);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = static_cast<int>(rng.below(30));
    const auto sigma = sample_uniform(n, rng);
    for (const auto& pat : {kUUD, kUUUD, UpDownPattern::parse("DU")}) {
      const auto [m, table] = max_steps(sigma, pat);
      REQUIRE(table.n == n);
      REQUIRE(table.period == pat.size());
      for (int i = 0; i < n; ++i) {
        REQUIRE(table.at(i, 0) >= 0);  // the single-element chain
        for (int p = 0; p < table.period; ++p) {
          const auto f = table.at(i, p);
          if (f < 0) continue;
          REQUIRE(f % table.period == p);
          REQUIRE(f <= i);
          REQUIRE(f <= m);
        }
      }
    }
  }
}

TEST_CASE("witness chains are valid and maximal") {
  const std::vector<UpDownPattern> patterns = {kUUD, kUUUD,
                                               UpDownPattern::parse("UD")};
  CounterRng rng(31, 7);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = static_cast<int>(rng.below(40));
    const auto sigma = sample_uniform(n, rng);
    for (const auto& pat : patterns) {
      const auto chain = witness_positions(sigma, pat);
      const auto m = max_steps(sigma, pat).first;
      if (n == 0) {
        CHECK(chain.empty());
        continue;
      }
      REQUIRE(static_cast<std::int64_t>(chain.size()) == m + 1);
      for (size_t i = 0; i + 1 < chain.size(); ++i) {
        REQUIRE(chain[i] < chain[i + 1]);
        const bool up = sigma.at(chain[i + 1]) > sigma.at(chain[i]);
        REQUIRE((pat.at(static_cast<int>(i) % pat.size()) == Step::Up) == up);
      }
    }
  }
}

TEST_CASE("pattern U agrees with patience sorting at n = 1e5") {
  // Independent large-scale check of the Fenwick DP through the one pattern
  // with a classical O(n log n) oracle.
  const auto pat_u = UpDownPattern::parse("U");
  for (std::uint64_t stream : {0ULL, 1ULL}) {
    CounterRng rng(2718, stream);
    const auto uniform = sample_uniform(100000, rng);
    CHECK(statistics(uniform, pat_u).length == longest_increasing_run(uniform));
    const auto avoider = sample_avoider_132(100000, rng);
    CHECK(statistics(avoider, pat_u).length == longest_increasing_run(avoider));
  }
}

TEST_CASE("suffix(0) extension equals blocks + 1") {
  // Artifact extension checked against the oracle: residue-0 chains include
  // the zero-step chain, so the statistic is B + 1.
  CounterRng rng(41, 9);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = static_cast<int>(rng.below(10));
    const auto sigma = sample_uniform(n, rng);
    const std::vector<int> offsets = {0};
    const auto fast = statistics(sigma, kUUD, offsets);
    const auto slow = oracle_statistics(sigma, kUUD, offsets);
    CHECK(fast.suffix.at(0) == slow.suffix.at(0));
    CHECK(fast.suffix.at(0) == fast.blocks + 1);
  }
}
