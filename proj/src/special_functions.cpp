#include "epistoch/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "epistoch/errors.hpp"

namespace epistoch {

namespace {

constexpr int kMaxIter = 500;

double gamma_series(double a, double x) {
    const double gln = std::lgamma(a);
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * std::numeric_limits<double>::epsilon())
            return sum * std::exp(-x + a * std::log(x) - gln);
    }
    throw NumericalError("reg_lower_gamma: series did not converge");
}

double gamma_cont_fraction(double a, double x) {
    const double gln = std::lgamma(a);
    const double eps = std::numeric_limits<double>::epsilon();
    const double fpmin = std::numeric_limits<double>::min() / eps;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= eps)
            return std::exp(-x + a * std::log(x) - gln) * h;
    }
    throw NumericalError("reg_lower_gamma: continued fraction did not converge");
}

}  // namespace

double reg_lower_gamma(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("reg_lower_gamma: shape must be positive");
    if (!(x >= 0.0)) throw std::invalid_argument("reg_lower_gamma: x must be non-negative");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? gamma_series(a, x) : 1.0 - gamma_cont_fraction(a, x);
}

double gamma_pdf(double x, double shape, double rate) {
    if (!(x >= 0.0)) return 0.0;
    if (x == 0.0) {
        if (shape < 1.0) return std::numeric_limits<double>::infinity();
        return shape == 1.0 ? rate : 0.0;
    }
    return std::exp(shape * std::log(rate) + (shape - 1.0) * std::log(x) - rate * x -
                    std::lgamma(shape));
}

double gamma_cdf(double x, double shape, double rate) {
    if (x <= 0.0) return 0.0;
    return reg_lower_gamma(shape, rate * x);
}

double gamma_quantile(double p, double shape, double rate) {
    if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("gamma_quantile: p must lie in [0, 1)");
    if (p == 0.0) return 0.0;
    const double mean = shape / rate;
    double lo = 0.0;
    double hi = mean;
    int guard = 0;
    while (gamma_cdf(hi, shape, rate) < p) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 400) throw NumericalError("gamma_quantile: bracket expansion failed");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-12 * (1.0 + hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        (gamma_cdf(mid, shape, rate) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace epistoch
