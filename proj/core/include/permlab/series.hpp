#pragma once

// Dense truncated power series in two coefficient modes:
//
//   RationalSeries - exact rationals (GMP), coefficient of t^n stored as is.
//   ScaledSeries   - doubles under the substitution t = u/4, i.e. entry n
//                    stores c_n / 4^n. The series of interest grow like 4^n
//                    times a power of n, so the scaled entries stay O(1) and
//                    double arithmetic is stable to n = 1e5.
//
// Binary operations truncate to the smaller operand's order. Multiplication
// iterates over the sparser operand, so multiplying by a polynomial costs
// O(N * deg) rather than O(N^2). Division requires a nonzero constant term
// in the divisor and solves the triangular system.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "permlab/catalan.hpp"

namespace permlab {

struct Ratio {
  long num = 0;
  long den = 1;
};

namespace series_detail {

struct ExactCoeffs {
  using value_type = mpq_class;
  static value_type from_ratio(const Ratio& r) {
    value_type v(r.num, r.den);
    v.canonicalize();  // mpq arithmetic requires canonical operands
    return v;
  }
  // Stored form of the monomial (num/den) * t^k.
  static value_type term(const Ratio& r, int k) { (void)k; return from_ratio(r); }
  static bool is_zero(const value_type& v) { return sgn(v) == 0; }
  // One step of the coefficient recurrence of (1 - 4t)^(e/2):
  // c_{n+1} = c_n * (-4) * (e/2 - n) / (n + 1).
  static value_type binomial_step(const value_type& c, int n, int e) {
    value_type v = c * (-2 * (e - 2 * n));
    v /= n + 1;
    return v;
  }
  // Rescaling when a coefficient moves k powers up; exact storage is
  // scale-free.
  static value_type reindexed(const value_type& v, int k) { (void)k; return v; }
};

struct ScaledCoeffs {
  using value_type = double;
  static value_type from_ratio(const Ratio& r) {
    return static_cast<double>(r.num) / static_cast<double>(r.den);
  }
  static value_type term(const Ratio& r, int k);
  static bool is_zero(const value_type& v) { return v == 0.0; }
  // Same recurrence after dividing through by 4^{n+1}:
  // s_{n+1} = s_n * (n - e/2) / (n + 1).
  static value_type binomial_step(const value_type& c, int n, int e) {
    return c * (n - 0.5 * e) / (n + 1);
  }
  // Entry n stores c_n / 4^n, so moving a coefficient k powers up divides
  // the stored value by 4^k.
  static value_type reindexed(const value_type& v, int k);
};

}  // namespace series_detail

template <class Coeffs>
class BasicSeries {
 public:
  using coeff_type = typename Coeffs::value_type;

  BasicSeries() = default;
  explicit BasicSeries(int order) : c_(static_cast<size_t>(order) + 1) {}

  // Series of the polynomial with the given coefficients by ascending power.
  static BasicSeries polynomial(int order, const std::vector<Ratio>& coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const coeff_type& coeff(int n) const { return c_[static_cast<size_t>(n)]; }
  coeff_type& coeff(int n) { return c_[static_cast<size_t>(n)]; }

  bool operator==(const BasicSeries&) const = default;

 private:
  std::vector<coeff_type> c_;
};

using RationalSeries = BasicSeries<series_detail::ExactCoeffs>;
using ScaledSeries = BasicSeries<series_detail::ScaledCoeffs>;

template <class C>
BasicSeries<C> add(const BasicSeries<C>& a, const BasicSeries<C>& b);
template <class C>
BasicSeries<C> sub(const BasicSeries<C>& a, const BasicSeries<C>& b);
template <class C>
BasicSeries<C> mul(const BasicSeries<C>& a, const BasicSeries<C>& b);
// Throws std::domain_error if b has a zero constant term.
template <class C>
BasicSeries<C> div(const BasicSeries<C>& a, const BasicSeries<C>& b);
template <class C>
BasicSeries<C> scale(const BasicSeries<C>& a, const Ratio& factor);
// Multiplication by t^k: result keeps the same order.
template <class C>
BasicSeries<C> shift_up(const BasicSeries<C>& a, int k);
// Division by t^k: requires the first k coefficients to vanish (throws
// std::domain_error otherwise) and shortens the reliable order by k.
template <class C>
BasicSeries<C> shift_down(const BasicSeries<C>& a, int k);

// (1 - 4t)^(half_exponent/2) for half_exponent in {+1, -1}. The exact-mode
// result is self-checked: its square reproduces 1 - 4t on a prefix.
RationalSeries binomial_sqrt_series(int half_exponent, int order);
ScaledSeries binomial_sqrt_series_scaled(int half_exponent, int order);

// (1 - sqrt(1 - 4t)) / (2t); coefficients verified against CatalanTable.
RationalSeries catalan_series(int order);

enum class SeriesRoute { Compositional, Closed };

// Generating function sum_n C_n E[B^{UUD}_n] t^n, by two independent routes:
// Compositional assembles the rational-in-C(t) form from catalan_series by
// series arithmetic; Closed evaluates the explicit sqrt(1-4t) form. The two
// must agree coefficient-by-coefficient.
RationalSeries series_b_u2d(int order, SeriesRoute route);
ScaledSeries series_b_u2d_scaled(int order);  // closed route

// Generating function sum_n C_n E[G^{UUUD}_n] t^n, same two-route scheme.
RationalSeries series_g_u3d(int order, SeriesRoute route);
ScaledSeries series_g_u3d_scaled(int order);  // closed route

// K(t) = (1-t)/(1-2t): coefficients 1, 1, 2, 4, 8, ...
RationalSeries k_generating_series(int order);

// r_n = c_n * sqrt(pi n) / 4^n. The exact overload is guarded to n <= 512
// (use scaled mode beyond); throws std::domain_error.
double asymptotic_ratio(const RationalSeries& series, int n);
double asymptotic_ratio(const ScaledSeries& series, int n);

}  // namespace permlab
