#pragma once

#include <cstdint>
#include <vector>

namespace stegkit {

/// Regularized upper incomplete gamma function Q(a, x), a > 0, x >= 0.
/// Series/continued-fraction hybrid, absolute accuracy better than 1e-10.
double regularized_gamma_upper(double a, double x);

/// Survival function of the chi-square distribution with df degrees of
/// freedom: P(X > x) = Q(df/2, x/2).
double chi2_survival(double x, double df);

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

/// Wilson score interval for a binomial proportion, clamped to [0, 1].
Interval wilson_interval(uint64_t successes, uint64_t trials, double z = 1.96);

/// Nearest-rank percentile (pct in [0, 100]); sorts a copy of the input.
double percentile_nearest_rank(std::vector<float> values, double pct);

}  // namespace stegkit
