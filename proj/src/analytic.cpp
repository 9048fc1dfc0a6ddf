#include "epistoch/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "epistoch/errors.hpp"
#include "epistoch/quadrature.hpp"
#include "epistoch/root_finding.hpp"
#include "epistoch/special_functions.hpp"

namespace epistoch {

namespace {

constexpr double kBracketEps = 1e-14;

// 1 - laplace(s) without cancellation for small s.
double one_minus_laplace(const GammaSpec& g, double s) {
    if (g.mean() == 0.0) return 0.0;
    const double t2 = g.cv() * g.cv();
    if (t2 < kDegenerateCvSq) return -std::expm1(-s * g.mean());
    return -std::expm1(-std::log1p(s * t2 * g.mean()) / t2);
}

}  // namespace

double final_size_fraction(double r0) {
    if (!(r0 > 0.0)) throw std::invalid_argument("final_size_fraction: r0 must be positive");
    if (r0 <= 1.0) return 0.0;
    const auto f = [r0](double rho) { return 1.0 - rho - std::exp(-r0 * rho); };
    // f > 0 just above 0 (slope r0 - 1) and f(1 - eps) < 0, so the bracket
    // contains exactly the nonzero root. For very large r0 the root lies
    // within eps of 1; return the largest representable value below 1.
    if (f(1.0 - kBracketEps) >= 0.0) return std::nextafter(1.0, 0.0);
    double rho = find_root(f, kBracketEps, 1.0 - kBracketEps);
    for (int i = 0; i < 3; ++i) {
        const double fp = -1.0 + r0 * std::exp(-r0 * rho);
        const double step = f(rho) / fp;
        const double next = rho - step;
        if (!(next > 0.0 && next < 1.0)) break;
        rho = next;
    }
    return rho;
}

double r0_from_final_size(double rho) {
    if (!(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("r0_from_final_size: rho must lie in (0, 1)");
    return -std::log1p(-rho) / rho;
}

double major_outbreak_prob(double r0, double tau_i) {
    if (!(r0 > 0.0)) throw std::invalid_argument("major_outbreak_prob: r0 must be positive");
    if (!(tau_i >= 0.0)) throw std::invalid_argument("major_outbreak_prob: tau_i must be non-negative");
    if (r0 <= 1.0) return 0.0;
    if (tau_i == 1.0) return 1.0 - 1.0 / r0;
    // Solve in extinction-probability space: q = pgf(q), taking the smallest
    // root in [0, 1), which corresponds to the largest takeoff probability.
    const auto g = [r0, tau_i](double q) { return offspring_pgf(q, r0, tau_i) - q; };
    if (g(1.0 - kBracketEps) >= 0.0) return 0.0;  // root indistinguishable from 1
    if (g(kBracketEps) <= 0.0) {
        // Root below the bracket (enormous r0); two fixed-point sweeps from 0
        // converge since the pgf slope there is tiny.
        return 1.0 - offspring_pgf(offspring_pgf(0.0, r0, tau_i), r0, tau_i);
    }
    double q = find_root(g, kBracketEps, 1.0 - kBracketEps);
    const double t2 = tau_i * tau_i;
    for (int i = 0; i < 3; ++i) {
        // pgf'(q) = r0 * (1 + (1-q) r0 t2)^(-1/t2 - 1)
        const double base = 1.0 + (1.0 - q) * r0 * t2;
        const double deriv =
            (t2 < kDegenerateCvSq ? r0 * std::exp(-(1.0 - q) * r0)
                                  : r0 * std::exp(-(1.0 / t2 + 1.0) * std::log(base)));
        const double next = q - g(q) / (deriv - 1.0);
        if (!(next > 0.0 && next < 1.0)) break;
        q = next;
    }
    return 1.0 - q;
}

double outbreak_prob_k(double r0, double tau_i, int k) {
    if (k < 1) throw std::invalid_argument("outbreak_prob_k: k must be at least 1");
    const double pi = major_outbreak_prob(r0, tau_i);
    return 1.0 - std::pow(1.0 - pi, k);
}

double malthusian(const GrowthParams& params) {
    if (!(params.r0 > 1.0))
        throw std::invalid_argument("malthusian: r0 must exceed 1 for positive growth");
    if (!(params.infectious.mean() > 0.0))
        throw std::invalid_argument("malthusian: infectious mean must be positive");
    const double lambda = params.contact_rate();
    const auto balance = [&](double a) {
        return lambda * params.latent.laplace(a) * one_minus_laplace(params.infectious, a) / a -
               1.0;
    };
    // balance(0+) = r0 - 1 > 0 and the left side is strictly decreasing, so
    // expand the upper end until the sign flips.
    double lo = 1e-12;
    double hi = 1.0 / params.infectious.mean();
    int guard = 0;
    while (balance(hi) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 200) throw NumericalError("malthusian: failed to bracket the growth rate");
    }
    return find_root(balance, lo, hi, 1e-15);
}

double r0_from_growth(double alpha, const GammaSpec& latent, const GammaSpec& infectious) {
    if (!(alpha > 0.0)) throw std::invalid_argument("r0_from_growth: alpha must be positive");
    if (!(infectious.mean() > 0.0))
        throw std::invalid_argument("r0_from_growth: infectious mean must be positive");
    return alpha * infectious.mean() / (latent.laplace(alpha) * one_minus_laplace(infectious, alpha));
}

namespace {

// P(L < t < L + I) for independent gamma periods. Degenerate components
// collapse the convolution to closed forms; otherwise the inner integral is
// evaluated with tanh-sinh quadrature, which tolerates the integrable density
// singularity at s = 0 when shape_L < 1.
double straddle_prob(double t, const GammaSpec& latent, const GammaSpec& infectious) {
    if (t <= 0.0) return 0.0;
    const bool l_deg = latent.degenerate();
    const bool i_deg = infectious.degenerate();
    const double mu_l = latent.mean();
    const double mu_i = infectious.mean();
    if (l_deg && i_deg) return (t > mu_l && t < mu_l + mu_i) ? 1.0 : 0.0;
    if (l_deg) {
        if (t <= mu_l) return 0.0;
        return 1.0 - gamma_cdf(t - mu_l, infectious.shape(), infectious.rate());
    }
    if (i_deg) {
        const double upper = gamma_cdf(t, latent.shape(), latent.rate());
        const double lower = t > mu_i ? gamma_cdf(t - mu_i, latent.shape(), latent.rate()) : 0.0;
        return upper - lower;
    }
    const double a = latent.shape();
    const double r = latent.rate();
    const auto surv_i = [&](double x) {
        return x <= 0.0 ? 1.0 : 1.0 - gamma_cdf(x, infectious.shape(), infectious.rate());
    };
    const auto h = [&](double s) { return gamma_pdf(s, a, r) * surv_i(t - s); };
    return integrate_de(h, 0.0, t, 1e-12);
}

double high_quantile(const GammaSpec& g, double p) {
    if (g.mean() == 0.0) return 0.0;
    if (g.degenerate()) return g.mean();
    return gamma_quantile(p, g.shape(), g.rate());
}

}  // namespace

double euler_lotka_residual(double alpha, const GrowthParams& params) {
    if (!(alpha >= 0.0))
        throw std::invalid_argument("euler_lotka_residual: alpha must be non-negative");
    if (!(params.infectious.mean() > 0.0))
        throw std::invalid_argument("euler_lotka_residual: infectious mean must be positive");
    const double lambda = params.contact_rate();
    double t_max = high_quantile(params.latent, 1.0 - 1e-14) +
                   high_quantile(params.infectious, 1.0 - 1e-14);
    if (alpha > 0.0) {
        // Beyond this point the integrand is below lambda * 1e-14.
        const double decay_cut = std::log(lambda * 1e14) / alpha;
        if (decay_cut < t_max) t_max = decay_cut;
    }
    const auto f = [&](double t) {
        return std::exp(-alpha * t) * lambda * straddle_prob(t, params.latent, params.infectious);
    };
    const double mu_l = params.latent.mean();
    const double mu_i = params.infectious.mean();
    const std::vector<double> knots = {mu_l, mu_i, mu_l + mu_i};
    return integrate_segmented_de(f, 0.0, t_max, knots, 1e-10);
}

VaccinationCoverage critical_vaccination_coverage(double r0, double efficacy) {
    if (!(r0 > 0.0))
        throw std::invalid_argument("critical_vaccination_coverage: r0 must be positive");
    if (!(efficacy > 0.0 && efficacy <= 1.0))
        throw std::invalid_argument("critical_vaccination_coverage: efficacy must lie in (0, 1]");
    if (r0 <= 1.0) return {0.0, true};
    const double value = (1.0 - 1.0 / r0) / efficacy;
    return {value, value <= 1.0};
}

}  // namespace epistoch
