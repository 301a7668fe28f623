#include "permlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace permlab {

namespace series_detail {

double ScaledCoeffs::term(const Ratio& r, int k) {
  return from_ratio(r) / std::exp2(2.0 * k);  // divide by 4^k
}

double ScaledCoeffs::reindexed(const value_type& v, int k) {
  return v / std::exp2(2.0 * k);
}

}  // namespace series_detail

template <class C>
BasicSeries<C> BasicSeries<C>::polynomial(int order,
                                          const std::vector<Ratio>& coeffs) {
  BasicSeries out(order);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (static_cast<int>(k) > order) break;
    out.coeff(static_cast<int>(k)) = C::term(coeffs[k], static_cast<int>(k));
  }
  return out;
}

template <class C>
BasicSeries<C> add(const BasicSeries<C>& a, const BasicSeries<C>& b) {
  BasicSeries<C> out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) out.coeff(n) = a.coeff(n) + b.coeff(n);
  return out;
}

template <class C>
BasicSeries<C> sub(const BasicSeries<C>& a, const BasicSeries<C>& b) {
  BasicSeries<C> out(std::min(a.order(), b.order()));
  for (int n = 0; n <= out.order(); ++n) out.coeff(n) = a.coeff(n) - b.coeff(n);
  return out;
}

template <class C>
BasicSeries<C> mul(const BasicSeries<C>& a, const BasicSeries<C>& b) {
  const int order = std::min(a.order(), b.order());
  // Run the outer loop over the sparser operand; multiplying by a polynomial
  // then costs O(order * deg) instead of O(order^2).
  int nnz_a = 0, nnz_b = 0;
  for (int n = 0; n <= order; ++n) {
    nnz_a += !C::is_zero(a.coeff(n));
    nnz_b += !C::is_zero(b.coeff(n));
  }
  const auto& outer = nnz_a <= nnz_b ? a : b;
  const auto& inner = nnz_a <= nnz_b ? b : a;
  BasicSeries<C> out(order);
  for (int i = 0; i <= order; ++i) {
    if (C::is_zero(outer.coeff(i))) continue;
    for (int j = 0; j + i <= order; ++j)
      out.coeff(i + j) += outer.coeff(i) * inner.coeff(j);
  }
  return out;
}

template <class C>
BasicSeries<C> div(const BasicSeries<C>& a, const BasicSeries<C>& b) {
  if (C::is_zero(b.coeff(0)))
    throw std::domain_error("series division requires a nonzero constant term");
  const int order = std::min(a.order(), b.order());
  std::vector<int> b_support;
  for (int m = 1; m <= order; ++m)
    if (!C::is_zero(b.coeff(m))) b_support.push_back(m);
  BasicSeries<C> out(order);
  for (int n = 0; n <= order; ++n) {
    auto acc = a.coeff(n);
    for (int m : b_support) {
      if (m > n) break;
      acc -= b.coeff(m) * out.coeff(n - m);
    }
    out.coeff(n) = acc / b.coeff(0);
  }
  return out;
}

template <class C>
BasicSeries<C> scale(const BasicSeries<C>& a, const Ratio& factor) {
  BasicSeries<C> out(a.order());
  const auto f = C::from_ratio(factor);
  for (int n = 0; n <= a.order(); ++n) out.coeff(n) = a.coeff(n) * f;
  return out;
}

template <class C>
BasicSeries<C> shift_up(const BasicSeries<C>& a, int k) {
  BasicSeries<C> out(a.order());
  for (int n = a.order(); n >= k; --n)
    out.coeff(n) = C::reindexed(a.coeff(n - k), k);
  return out;
}

template <class C>
BasicSeries<C> shift_down(const BasicSeries<C>& a, int k) {
  if (a.order() < k)
    throw std::domain_error("shift_down exceeds series order");
  for (int n = 0; n < k; ++n)
    if (!C::is_zero(a.coeff(n)))
      throw std::domain_error("shift_down requires vanishing low coefficients");
  // The top k coefficients of the input are unknown at this order, so the
  // result is shorter.
  BasicSeries<C> out(a.order() - k);
  for (int n = 0; n <= out.order(); ++n)
    out.coeff(n) = C::reindexed(a.coeff(n + k), -k);
  return out;
}

namespace {

using series_detail::ExactCoeffs;
using series_detail::ScaledCoeffs;

template <class C>
BasicSeries<C> binomial_impl(int half_exponent, int order) {
  if (half_exponent != 1 && half_exponent != -1)
    throw std::invalid_argument("binomial series exponent must be +1/2 or -1/2");
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  BasicSeries<C> out(order);
  out.coeff(0) = C::from_ratio({1, 1});
  for (int n = 0; n < order; ++n)
    out.coeff(n + 1) = C::binomial_step(out.coeff(n), n, half_exponent);
  return out;
}

// Sanity prefix-check that the square reproduces 1 - 4t; the full-order
// identity is covered by the test suite.
template <class C>
void check_binomial_square(const BasicSeries<C>& s, int half_exponent) {
  const int check_order = std::min(s.order(), 48);
  BasicSeries<C> trunc(check_order);
  for (int n = 0; n <= check_order; ++n) trunc.coeff(n) = s.coeff(n);
  const auto square = mul(trunc, trunc);
  const auto target = half_exponent == 1
                          ? BasicSeries<C>::polynomial(check_order, {{1, 1}, {-4, 1}})
                          : div(BasicSeries<C>::polynomial(check_order, {{1, 1}}),
                                BasicSeries<C>::polynomial(check_order, {{1, 1}, {-4, 1}}));
  for (int n = 0; n <= check_order; ++n) {
    if constexpr (std::is_same_v<C, ExactCoeffs>) {
      if (square.coeff(n) != target.coeff(n))
        throw std::logic_error("binomial series failed its square self-check");
    } else {
      if (std::fabs(square.coeff(n) - target.coeff(n)) > 1e-12)
        throw std::logic_error("binomial series failed its square self-check");
    }
  }
}

// Shared builders for both coefficient modes.

template <class C>
BasicSeries<C> sqrt_series(int half_exponent, int order) {
  auto s = binomial_impl<C>(half_exponent, order);
  check_binomial_square(s, half_exponent);
  return s;
}

template <class C>
BasicSeries<C> catalan_impl(int order) {
  // C(t) = (1 - sqrt(1 - 4t)) / (2t); the numerator is computed one order
  // higher so the division by t keeps full precision.
  const auto root = sqrt_series<C>(1, order + 1);
  const auto one = BasicSeries<C>::polynomial(order + 1, {{1, 1}});
  return scale(shift_down(sub(one, root), 1), {1, 2});
}

// Closed form of the UUD block-total generating function: with
// S = (1-4t)^{1/2}, the function is N(t) / D(t) where
//   t N(t) = (2t^2-4t+1)(1-t) + (2t-1)(1-t) S
//          - (2t^2-4t+1)(2t^2-t+1) S^{-1} - (2t-1)(2t^2-t+1)
//   D(t)   = -4 (t^3 - t + 1).
template <class C>
BasicSeries<C> b_u2d_closed(int order) {
  const int inner = order + 1;
  const auto root = sqrt_series<C>(1, inner);
  const auto root_inv = sqrt_series<C>(-1, inner);
  const auto p1 = BasicSeries<C>::polynomial(inner, {{1, 1}, {-4, 1}, {2, 1}});
  const auto p2 = BasicSeries<C>::polynomial(inner, {{-1, 1}, {2, 1}});
  const auto p3 = BasicSeries<C>::polynomial(inner, {{1, 1}, {-1, 1}, {2, 1}});
  const auto one_minus_t = BasicSeries<C>::polynomial(inner, {{1, 1}, {-1, 1}});

  auto t_num = sub(sub(add(mul(p1, one_minus_t), mul(mul(p2, one_minus_t), root)),
                       mul(mul(p1, p3), root_inv)),
                   mul(p2, p3));
  const auto numerator = shift_down(t_num, 1);
  const auto denominator =
      BasicSeries<C>::polynomial(order, {{-4, 1}, {4, 1}, {0, 1}, {-4, 1}});
  return div(numerator, denominator);
}

// Closed form of the UUUD prefix-total generating function:
//   G = (1/2 - 4t + 9t^2 - 13/2 t^3 - t^4) / q(t) * (1-4t)^{-1/2}
//     + (-1/2 + 7/2 t - 8t^2 + 11/2 t^3 + 3/2 t^4) / ((1-t) q(t)),
// with q(t) = -1 + 2t + 2t^2 - 6t^3 - t^4.
template <class C>
BasicSeries<C> g_u3d_closed(int order) {
  const auto root_inv = sqrt_series<C>(-1, order);
  const auto q = BasicSeries<C>::polynomial(
      order, {{-1, 1}, {2, 1}, {2, 1}, {-6, 1}, {-1, 1}});
  const auto num1 = BasicSeries<C>::polynomial(
      order, {{1, 2}, {-4, 1}, {9, 1}, {-13, 2}, {-1, 1}});
  const auto num2 = BasicSeries<C>::polynomial(
      order, {{-1, 2}, {7, 2}, {-8, 1}, {11, 2}, {3, 2}});
  const auto one_minus_t = BasicSeries<C>::polynomial(order, {{1, 1}, {-1, 1}});
  return add(mul(div(num1, q), root_inv), div(num2, mul(one_minus_t, q)));
}

// Compositional route for the UUD block totals, entirely in terms of the
// Catalan series:
//   B = t^2 (C-1)^2 / [ ((1-t)(1-2tC) + t)(1 - t - tC) - t^2 (C-1) ].
RationalSeries b_u2d_compositional(int order) {
  const auto cat = catalan_impl<ExactCoeffs>(order);
  const auto one = RationalSeries::polynomial(order, {{1, 1}});
  const auto t = RationalSeries::polynomial(order, {{0, 1}, {1, 1}});
  const auto t_sq = RationalSeries::polynomial(order, {{0, 1}, {0, 1}, {1, 1}});
  const auto one_minus_t = RationalSeries::polynomial(order, {{1, 1}, {-1, 1}});
  const auto cat_minus_one = sub(cat, one);

  const auto numerator = mul(t_sq, mul(cat_minus_one, cat_minus_one));
  const auto two_t_cat = mul(RationalSeries::polynomial(order, {{0, 1}, {2, 1}}), cat);
  const auto den_left = add(mul(one_minus_t, sub(one, two_t_cat)), t);
  const auto den_right = sub(sub(one, t), mul(t, cat));
  const auto denominator = sub(mul(den_left, den_right), mul(t_sq, cat_minus_one));
  return div(numerator, denominator);
}

// Compositional route for the UUUD prefix totals:
//   G = t (C-1) / [ (1-t)(1-tC)(1 - d1) ],
// where d1 is the four-factor product
//   [ tC - t/(1-t) + t^2 (C-1) / ((1-t)(1-t-tC)) ]
//   * 1/(1-tC) * t(1-t)/(1-2t) * 1/(1 - 2tC + t(1-t)/(1-2t)).
RationalSeries g_u3d_compositional(int order) {
  const auto cat = catalan_impl<ExactCoeffs>(order);
  const auto one = RationalSeries::polynomial(order, {{1, 1}});
  const auto t = RationalSeries::polynomial(order, {{0, 1}, {1, 1}});
  const auto t_sq = RationalSeries::polynomial(order, {{0, 1}, {0, 1}, {1, 1}});
  const auto one_minus_t = RationalSeries::polynomial(order, {{1, 1}, {-1, 1}});
  const auto one_minus_2t = RationalSeries::polynomial(order, {{1, 1}, {-2, 1}});
  const auto cat_minus_one = sub(cat, one);
  const auto t_cat = mul(t, cat);
  const auto one_minus_t_cat = sub(one, t_cat);
  const auto two_t_cat = mul(RationalSeries::polynomial(order, {{0, 1}, {2, 1}}), cat);
  const auto one_minus_t_minus_t_cat = sub(one_minus_t, t_cat);

  const auto factor1 =
      add(sub(t_cat, div(t, one_minus_t)),
          div(mul(t_sq, cat_minus_one), mul(one_minus_t, one_minus_t_minus_t_cat)));
  const auto factor2 = div(one, one_minus_t_cat);
  const auto factor3 = div(mul(t, one_minus_t), one_minus_2t);
  const auto factor4 = div(one, add(sub(one, two_t_cat), factor3));
  const auto d1 = mul(mul(factor1, factor2), mul(factor3, factor4));

  const auto numerator = mul(t, cat_minus_one);
  const auto denominator = mul(mul(one_minus_t, one_minus_t_cat), sub(one, d1));
  return div(numerator, denominator);
}

}  // namespace

RationalSeries binomial_sqrt_series(int half_exponent, int order) {
  return sqrt_series<ExactCoeffs>(half_exponent, order);
}

ScaledSeries binomial_sqrt_series_scaled(int half_exponent, int order) {
  return sqrt_series<ScaledCoeffs>(half_exponent, order);
}

RationalSeries catalan_series(int order) {
  auto cat = catalan_impl<ExactCoeffs>(order);
  const CatalanTable table(std::min(order, 256));
  for (int n = 0; n <= table.max_index() && n <= order; ++n) {
    if (cat.coeff(n).get_den() != 1 ||
        cat.coeff(n).get_num() != table.at(n))
      throw std::logic_error("Catalan series disagrees with the integer table at n = " +
                             std::to_string(n));
  }
  return cat;
}

RationalSeries series_b_u2d(int order, SeriesRoute route) {
  if (order < 4) throw std::invalid_argument("series_b_u2d needs order >= 4");
  return route == SeriesRoute::Closed ? b_u2d_closed<ExactCoeffs>(order)
                                      : b_u2d_compositional(order);
}

ScaledSeries series_b_u2d_scaled(int order) {
  if (order < 4) throw std::invalid_argument("series_b_u2d needs order >= 4");
  return b_u2d_closed<ScaledCoeffs>(order);
}

RationalSeries series_g_u3d(int order, SeriesRoute route) {
  if (order < 2) throw std::invalid_argument("series_g_u3d needs order >= 2");
  return route == SeriesRoute::Closed ? g_u3d_closed<ExactCoeffs>(order)
                                      : g_u3d_compositional(order);
}

ScaledSeries series_g_u3d_scaled(int order) {
  if (order < 2) throw std::invalid_argument("series_g_u3d needs order >= 2");
  return g_u3d_closed<ScaledCoeffs>(order);
}

RationalSeries k_generating_series(int order) {
  return div(RationalSeries::polynomial(order, {{1, 1}, {-1, 1}}),
             RationalSeries::polynomial(order, {{1, 1}, {-2, 1}}));
}

double asymptotic_ratio(const RationalSeries& series, int n) {
  if (n < 0 || n > series.order())
    throw std::out_of_range("coefficient index out of range");
  if (n > 512)
    throw std::domain_error(
        "exact-mode asymptotic_ratio is limited to n <= 512; use scaled mode");
  mpq_class four_n = 1;
  for (int i = 0; i < n; ++i) four_n *= 4;
  const mpq_class scaled = series.coeff(n) / four_n;
  return scaled.get_d() * std::sqrt(M_PI * n);
}

double asymptotic_ratio(const ScaledSeries& series, int n) {
  if (n < 0 || n > series.order())
    throw std::out_of_range("coefficient index out of range");
  return series.coeff(n) * std::sqrt(M_PI * n);
}

// Explicit instantiations of the shared engine.
template class BasicSeries<series_detail::ExactCoeffs>;
template class BasicSeries<series_detail::ScaledCoeffs>;

#define PERMLAB_INSTANTIATE(C)                                               \
  template BasicSeries<C> add(const BasicSeries<C>&, const BasicSeries<C>&); \
  template BasicSeries<C> sub(const BasicSeries<C>&, const BasicSeries<C>&); \
  template BasicSeries<C> mul(const BasicSeries<C>&, const BasicSeries<C>&); \
  template BasicSeries<C> div(const BasicSeries<C>&, const BasicSeries<C>&); \
  template BasicSeries<C> scale(const BasicSeries<C>&, const Ratio&);        \
  template BasicSeries<C> shift_up(const BasicSeries<C>&, int);              \
  template BasicSeries<C> shift_down(const BasicSeries<C>&, int);

PERMLAB_INSTANTIATE(series_detail::ExactCoeffs)
PERMLAB_INSTANTIATE(series_detail::ScaledCoeffs)
#undef PERMLAB_INSTANTIATE

}  // namespace permlab
