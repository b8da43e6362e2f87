#pragma once

// Scalar special functions used by the quantile estimators and the
// synthetic data generators.

namespace fmosum {

// Standard normal CDF.
double norm_cdf(double x);

// Standard normal density.
double norm_pdf(double x);

// Regularized incomplete beta function I_x(a, b) for a, b > 0 and x in [0, 1].
double inc_beta(double a, double b, double x);

// Beta(a, b) density at x in [0, 1].
double beta_pdf(double x, double a, double b);

// Quantile of the Beta(a, b) distribution, solved by bisection on I_x(a, b).
double beta_quantile(double p, double a, double b);

// Quantile of a normal(mean, sd) truncated to [lo, hi], solved by bisection
// on the renormalized CDF to 1e-10.
double truncated_normal_quantile(double p, double mean, double sd, double lo, double hi);

} // namespace fmosum
