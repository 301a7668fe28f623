#pragma once

// Small statistics helpers for the Monte Carlo paths and the sampler
// goodness-of-fit checks.

#include <cstddef>
#include <vector>

namespace permlab {

struct SampleSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;      // sample standard deviation (n-1 denominator)
  double std_error = 0.0;   // stddev / sqrt(n)
};

SampleSummary summarize(const std::vector<double>& samples);

// Regularized upper incomplete gamma Q(a, x), by the series expansion for
// x < a + 1 and the Lentz continued fraction otherwise.
double gamma_q(double a, double x);

// Upper-tail p-value of a chi-square statistic with the given degrees of
// freedom.
double chi_square_pvalue(double statistic, double degrees_of_freedom);

// Pearson chi-square statistic for observed counts against expected counts.
double chi_square_statistic(const std::vector<double>& observed,
                            const std::vector<double>& expected);

}  // namespace permlab
