#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "permlab/catalan.hpp"
#include "permlab/perm.hpp"
#include "permlab/rng.hpp"

using namespace permlab;

TEST_CASE("permutation validation") {
  CHECK(Permutation({4, 3, 5, 7, 6, 8, 9, 2, 1}).size() == 9);
  CHECK(Permutation().size() == 0);
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({-2, 1}), std::invalid_argument);
}

TEST_CASE("permutation text round trip") {
  const auto p = Permutation::parse("2 3 1 4");
  CHECK(p == Permutation({2, 3, 1, 4}));
  CHECK(p.str() == "2 3 1 4");
  CHECK(Permutation::parse("") == Permutation());
  CHECK_THROWS_AS(Permutation::parse("1 x 2"), std::invalid_argument);
}

TEST_CASE("reduce") {
  const std::vector<int> a{4, 3, 5, 7, 6, 8};
  CHECK(reduce(a) == Permutation({2, 1, 3, 5, 4, 6}));
  const std::vector<int> b{7, 8, 6, 5, 4, 3};
  CHECK(reduce(b) == Permutation({5, 6, 4, 3, 2, 1}));
  const std::vector<int> c{1, 2, 3};
  CHECK(reduce(c) == Permutation({1, 2, 3}));
  const std::vector<int> dup{2, 2};
  CHECK_THROWS_AS(reduce(dup), std::invalid_argument);
}

TEST_CASE("updown word") {
  CHECK(updown_word(Permutation({3, 4, 2, 6, 1, 7, 9, 8, 5})).str() == "UDUDUUDD");
  CHECK(updown_word(Permutation({2, 1})).str() == "D");
  const std::vector<int> single{5};
  CHECK(updown_word(single).empty());
  CHECK(updown_word(Permutation()).empty());
  const std::vector<int> empty{};
  CHECK_THROWS_AS(updown_word(empty), std::invalid_argument);
}

TEST_CASE("updown word parse/str") {
  CHECK(UpDownWord::parse("UUD").str() == "UUD");
  CHECK(UpDownWord::parse("").empty());
  CHECK_THROWS_AS(UpDownWord::parse("UXD"), std::invalid_argument);
  CHECK_THROWS_AS(UpDownPattern{UpDownWord{}}, std::invalid_argument);
}

TEST_CASE("containment golden cases") {
  CHECK_FALSE(contains(Permutation({1, 2, 3, 4, 5, 6}), Permutation({1, 3, 2})));
  CHECK_FALSE(contains(Permutation({2, 3, 4, 1}), Permutation({1, 3, 2})));
  CHECK(contains(Permutation({4, 3, 5, 7, 6, 8, 9, 2, 1}), Permutation({1, 3, 2})));
  CHECK(contains_132(Permutation({4, 3, 5, 7, 6, 8, 9, 2, 1})));
  CHECK_FALSE(contains(Permutation({1, 2}), Permutation({1, 3, 2})));
  CHECK_THROWS_AS(contains(Permutation({1, 2, 3, 4, 5}),
                           Permutation({1, 2, 3, 4, 5})),
                  std::domain_error);
}

TEST_CASE("containment at other pattern lengths") {
  CHECK(contains(Permutation({2, 1}), Permutation({1})));
  CHECK_FALSE(contains(Permutation(), Permutation({1})));
  CHECK(contains(Permutation({1, 3, 2}), Permutation({2, 1})));
  CHECK_FALSE(contains(Permutation({1, 2, 3}), Permutation({2, 1})));
  CHECK(contains(Permutation({2, 1, 4, 3}), Permutation({2, 1, 4, 3})));
  CHECK_FALSE(contains(Permutation({2, 1, 4, 3}), Permutation({1, 2, 3, 4})));
  CHECK(contains(Permutation({5, 1, 4, 2, 3}), Permutation({3, 1, 2})));
}

TEST_CASE("fast containment matches exhaustive scan on all of S_n, n <= 7") {
  const std::vector<Permutation> taus = {
      Permutation({1, 2, 3}), Permutation({1, 3, 2}), Permutation({2, 1, 3}),
      Permutation({2, 3, 1}), Permutation({3, 1, 2}), Permutation({3, 2, 1})};
  for (int n = 0; n <= 7; ++n) {
    enumerate_permutations(n, [&](const Permutation& sigma) {
      for (const auto& tau : taus) {
        CAPTURE(sigma.str());
        CAPTURE(tau.str());
        REQUIRE(contains(sigma, tau) == contains_exhaustive(sigma, tau));
        REQUIRE((contains_132(sigma) ==
                 contains_exhaustive(sigma, Permutation({1, 3, 2}))));
      }
    });
  }
}

TEST_CASE("containment is invariant under joint symmetries") {
  CounterRng rng(7, 0);
  const std::vector<Permutation> taus = {
      Permutation({1, 2, 3}), Permutation({1, 3, 2}), Permutation({2, 1, 3}),
      Permutation({2, 3, 1}), Permutation({3, 1, 2}), Permutation({3, 2, 1})};
  for (int rep = 0; rep < 300; ++rep) {
    const auto sigma = sample_uniform(1 + static_cast<int>(rng.below(9)), rng);
    for (const auto& tau : taus) {
      const bool direct = contains(sigma, tau);
      CHECK(direct == contains(reverse(sigma), reverse(tau)));
      CHECK(direct == contains(complement(sigma), complement(tau)));
    }
  }
}

TEST_CASE("symmetries") {
  CHECK(reverse(Permutation({1, 3, 2})) == Permutation({2, 3, 1}));
  CHECK(complement(Permutation({1, 3, 2})) == Permutation({3, 1, 2}));
  CHECK(reverse(complement(Permutation({1, 3, 2}))) == Permutation({2, 1, 3}));

  // Both are involutions.
  CounterRng rng(11, 1);
  for (int rep = 0; rep < 50; ++rep) {
    const auto sigma = sample_uniform(static_cast<int>(rng.below(30)), rng);
    CHECK(reverse(reverse(sigma)) == sigma);
    CHECK(complement(complement(sigma)) == sigma);
  }
}

TEST_CASE("pattern transforms") {
  const auto uud = UpDownWord::parse("UUD");
  CHECK(transform_pattern(uud, SymmetryOp::Reverse).str() == "UDD");
  CHECK(transform_pattern(uud, SymmetryOp::Complement).str() == "DDU");
  CHECK(transform_pattern(uud, SymmetryOp::ReverseComplement).str() == "DUU");
}

TEST_CASE("updown word commutes with symmetries") {
  CounterRng rng(13, 2);
  for (int rep = 0; rep < 200; ++rep) {
    const auto sigma = sample_uniform(static_cast<int>(rng.below(20)), rng);
    const auto word = updown_word(sigma);
    CHECK(updown_word(reverse(sigma)) ==
          transform_pattern(word, SymmetryOp::Reverse));
    CHECK(updown_word(complement(sigma)) ==
          transform_pattern(word, SymmetryOp::Complement));
    CHECK(updown_word(reverse(complement(sigma))) ==
          transform_pattern(word, SymmetryOp::ReverseComplement));
  }
}

TEST_CASE("reduce is idempotent and preserves the word") {
  CounterRng rng(17, 3);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng.below(12));
    std::vector<int> vals;
    std::set<int> used;
    while (static_cast<int>(vals.size()) < n) {
      const int v = static_cast<int>(rng.below(200)) - 100;
      if (used.insert(v).second) vals.push_back(v);
    }
    const auto red = reduce(vals);
    CHECK(reduce(red.values()) == red);
    CHECK(updown_word(std::span<const int>(vals)) == updown_word(red));
  }
}
