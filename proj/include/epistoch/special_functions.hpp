#pragma once

namespace epistoch {

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
// Series expansion for x < a + 1, Lentz continued fraction otherwise.
double reg_lower_gamma(double a, double x);

// Gamma density and CDF in shape/rate form.
double gamma_pdf(double x, double shape, double rate);
double gamma_cdf(double x, double shape, double rate);

// Smallest x with gamma_cdf(x) >= p, by bracketing bisection.
double gamma_quantile(double p, double shape, double rate);

}  // namespace epistoch
