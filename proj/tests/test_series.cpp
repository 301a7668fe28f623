#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "permlab/series.hpp"
#include "permlab/totals.hpp"

using namespace permlab;

TEST_CASE("series arithmetic basics") {
  // (1 - t) * sum t^n = 1.
  const int order = 32;
  const auto ones = div(RationalSeries::polynomial(order, {{1, 1}}),
                        RationalSeries::polynomial(order, {{1, 1}, {-1, 1}}));
  for (int n = 0; n <= order; ++n) CHECK(ones.coeff(n) == 1);
  const auto telescoped = mul(RationalSeries::polynomial(order, {{1, 1}, {-1, 1}}), ones);
  CHECK(telescoped.coeff(0) == 1);
  for (int n = 1; n <= order; ++n) CHECK(telescoped.coeff(n) == 0);

  CHECK_THROWS_AS(div(ones, RationalSeries::polynomial(order, {{0, 1}, {1, 1}})),
                  std::domain_error);
  CHECK_THROWS_AS(shift_down(ones, 1), std::domain_error);
}

TEST_CASE("shift and scale") {
  const int order = 8;
  const auto t_cubed = shift_up(RationalSeries::polynomial(order, {{1, 1}}), 3);
  CHECK(t_cubed.coeff(3) == 1);
  CHECK(t_cubed.coeff(0) == 0);
  const auto back = shift_down(t_cubed, 3);
  CHECK(back.order() == order - 3);
  CHECK(back.coeff(0) == 1);
  const auto doubled = scale(t_cubed, {2, 1});
  CHECK(doubled.coeff(3) == 2);
}

TEST_CASE("binomial square-root series") {
  const auto minus = binomial_sqrt_series(-1, 10);
  // Central binomial coefficients.
  CHECK(minus.coeff(0) == 1);
  CHECK(minus.coeff(1) == 2);
  CHECK(minus.coeff(2) == 6);
  CHECK(minus.coeff(3) == 20);

  const auto plus = binomial_sqrt_series(1, 10);
  const long expected[] = {1, -2, -2, -4, -10};
  for (int n = 0; n <= 4; ++n) CHECK(plus.coeff(n) == expected[n]);

  // Defining identity at full order.
  const auto square = mul(plus, plus);
  CHECK(square.coeff(0) == 1);
  CHECK(square.coeff(1) == -4);
  for (int n = 2; n <= square.order(); ++n) CHECK(square.coeff(n) == 0);

  const auto product = mul(plus, minus);
  CHECK(product.coeff(0) == 1);
  for (int n = 1; n <= product.order(); ++n) CHECK(product.coeff(n) == 0);

  CHECK_THROWS_AS(binomial_sqrt_series(2, 4), std::invalid_argument);
}

TEST_CASE("catalan series") {
  const auto cat = catalan_series(50);
  const long expected[] = {1, 1, 2, 5, 14};
  for (int n = 0; n <= 4; ++n) CHECK(cat.coeff(n) == expected[n]);
  CHECK(cat.coeff(6) == 132);

  // Functional equation C = 1 + t C^2.
  const auto rhs = add(RationalSeries::polynomial(50, {{1, 1}}),
                       shift_up(mul(cat, cat), 1));
  for (int n = 0; n <= 50; ++n) CHECK(cat.coeff(n) == rhs.coeff(n));
}

TEST_CASE("squared catalan series matches its closed form to order 50") {
  const int order = 50;
  const auto cat = catalan_series(order);
  const auto lhs = mul(cat, cat);
  // (1 - 2t - sqrt(1-4t)) / (2 t^2), assembled one order higher.
  const auto root = binomial_sqrt_series(1, order + 2);
  const auto num = sub(RationalSeries::polynomial(order + 2, {{1, 1}, {-2, 1}}), root);
  const auto rhs = scale(shift_down(num, 2), {1, 2});
  for (int n = 0; n <= order; ++n) CHECK(lhs.coeff(n) == rhs.coeff(n));
}

TEST_CASE("cubed catalan series matches its closed form to order 50") {
  const int order = 50;
  const auto cat = catalan_series(order);
  const auto lhs = mul(mul(cat, cat), cat);
  // (1 - 3t - (1-t) sqrt(1-4t)) / (2 t^3).
  const auto root = binomial_sqrt_series(1, order + 3);
  const auto num = sub(RationalSeries::polynomial(order + 3, {{1, 1}, {-3, 1}}),
                       mul(RationalSeries::polynomial(order + 3, {{1, 1}, {-1, 1}}), root));
  const auto rhs = scale(shift_down(num, 3), {1, 2});
  for (int n = 0; n <= order; ++n) CHECK(lhs.coeff(n) == rhs.coeff(n));
}

TEST_CASE("K series") {
  const auto k = k_generating_series(64);
  CHECK(k.coeff(0) == 1);
  CHECK(k.coeff(1) == 1);
  CHECK(k.coeff(2) == 2);
  CHECK(k.coeff(3) == 4);
  const auto ks = k_sequence(64);
  for (int l = 0; l <= 64; ++l)
    CHECK(k.coeff(l) == mpq_class(ks[static_cast<size_t>(l)]));
}

TEST_CASE("B series: routes agree and low coefficients are the frozen totals") {
  const int order = 64;
  const auto comp = series_b_u2d(order, SeriesRoute::Compositional);
  const auto closed = series_b_u2d(order, SeriesRoute::Closed);
  for (int n = 0; n <= order; ++n) {
    CAPTURE(n);
    REQUIRE(comp.coeff(n) == closed.coeff(n));
  }
  for (int n = 0; n <= 3; ++n) CHECK(closed.coeff(n) == 0);
  CHECK(closed.coeff(4) == 1);
  CHECK(closed.coeff(5) == 8);
  CHECK(closed.coeff(6) == 43);
  CHECK(closed.coeff(7) == 199);
  CHECK(closed.coeff(8) == 861);
}

TEST_CASE("G series: routes agree and low coefficients are the frozen totals") {
  const int order = 64;
  const auto comp = series_g_u3d(order, SeriesRoute::Compositional);
  const auto closed = series_g_u3d(order, SeriesRoute::Closed);
  for (int n = 0; n <= order; ++n) {
    CAPTURE(n);
    REQUIRE(comp.coeff(n) == closed.coeff(n));
  }
  CHECK(closed.coeff(0) == 0);
  CHECK(closed.coeff(1) == 0);
  CHECK(closed.coeff(2) == 1);
  CHECK(closed.coeff(3) == 4);
  CHECK(closed.coeff(4) == 13);
  CHECK(closed.coeff(5) == 41);
  CHECK(closed.coeff(6) == 133);
}

TEST_CASE("series coefficients equal recurrence totals to order 128") {
  const int order = 128;
  const auto b = series_b_u2d(order, SeriesRoute::Closed);
  const auto g = series_g_u3d(order, SeriesRoute::Closed);
  const auto u2d = totals_u2d(order);
  const auto u3d = totals_u3d(order);
  for (int n = 0; n <= order; ++n) {
    REQUIRE(b.coeff(n).get_den() == 1);
    REQUIRE(g.coeff(n).get_den() == 1);
    REQUIRE(b.coeff(n).get_num() == u2d.beta[static_cast<size_t>(n)]);
    REQUIRE(g.coeff(n).get_num() == u3d.gtilde[static_cast<size_t>(n)]);
  }
}

TEST_CASE("auxiliary generating functions match the other totals") {
  // A(t) = t (B + C - 1) / ((1-t)(1-2tC) + t) reproduces the alpha totals,
  // and the U3D system's A and B functions reproduce theirs; this exercises
  // the full linear system, not just the solved-out components.
  const int order = 48;
  const auto cat = catalan_series(order);
  const auto one = RationalSeries::polynomial(order, {{1, 1}});
  const auto t = RationalSeries::polynomial(order, {{0, 1}, {1, 1}});
  const auto one_minus_t = RationalSeries::polynomial(order, {{1, 1}, {-1, 1}});
  const auto two_t_cat = mul(RationalSeries::polynomial(order, {{0, 1}, {2, 1}}), cat);

  const auto b = series_b_u2d(order, SeriesRoute::Closed);
  const auto a2 = div(mul(t, sub(add(b, cat), one)),
                      add(mul(one_minus_t, sub(one, two_t_cat)), t));
  const auto u2d = totals_u2d(order);
  for (int n = 0; n <= order; ++n)
    REQUIRE(a2.coeff(n) == mpq_class(u2d.alpha[static_cast<size_t>(n)]));

  const auto g = series_g_u3d(order, SeriesRoute::Closed);
  const auto half_pole = div(mul(t, one_minus_t),
                             RationalSeries::polynomial(order, {{1, 1}, {-2, 1}}));
  const auto a3 = div(mul(half_pole, g),
                      add(sub(one, two_t_cat), half_pole));
  const auto b3 = div(mul(mul(t, sub(cat, one)), a3),
                      sub(sub(one, t), mul(t, cat)));
  const auto u3d = totals_u3d(order);
  for (int n = 0; n <= order; ++n) {
    REQUIRE(a3.coeff(n) == mpq_class(u3d.alpha[static_cast<size_t>(n)]));
    REQUIRE(b3.coeff(n) == mpq_class(u3d.beta[static_cast<size_t>(n)]));
  }
}

TEST_CASE("scaled mode tracks exact mode") {
  const int order = 512;
  const auto exact_b = series_b_u2d(order, SeriesRoute::Closed);
  const auto scaled_b = series_b_u2d_scaled(order);
  const auto exact_g = series_g_u3d(order, SeriesRoute::Closed);
  const auto scaled_g = series_g_u3d_scaled(order);
  mpq_class four_n = 1;
  for (int n = 0; n <= order; ++n) {
    const double eb = mpq_class(exact_b.coeff(n) / four_n).get_d();
    const double eg = mpq_class(exact_g.coeff(n) / four_n).get_d();
    if (eb != 0.0)
      CHECK(std::fabs(scaled_b.coeff(n) - eb) / std::fabs(eb) < 1e-9);
    if (eg != 0.0)
      CHECK(std::fabs(scaled_g.coeff(n) - eg) / std::fabs(eg) < 1e-9);
    four_n *= 4;
  }
}

TEST_CASE("asymptotic ratios") {
  // Central binomial: r_n -> 1.
  const auto central = binomial_sqrt_series_scaled(-1, 4096);
  CHECK(std::fabs(asymptotic_ratio(central, 4096) - 1.0) < 1e-3);

  // Catalan: r_n -> 0 but n r_n -> 1. Use the exact series at its guard cap.
  const auto cat = catalan_series(512);
  const double r512 = asymptotic_ratio(cat, 512);
  CHECK(r512 < 0.01);
  CHECK(std::fabs(512 * r512 - 1.0) < 0.01);
  CHECK_THROWS_AS(asymptotic_ratio(catalan_series(600), 600), std::domain_error);

  // The target constants at moderate order.
  const auto b = series_b_u2d_scaled(1 << 14);
  const auto g = series_g_u3d_scaled(1 << 14);
  CHECK(std::fabs(7.0 * asymptotic_ratio(b, 1 << 14) - 1.0) < 0.01);
  CHECK(std::fabs(11.0 * asymptotic_ratio(g, 1 << 14) - 1.0) < 0.01);
}

TEST_CASE("scaled polynomial embedding") {
  // 1 - 4t in scaled mode stores {1, -1}.
  const auto p = ScaledSeries::polynomial(4, {{1, 1}, {-4, 1}});
  CHECK(p.coeff(0) == 1.0);
  CHECK(p.coeff(1) == -1.0);
  CHECK(p.coeff(2) == 0.0);
}
