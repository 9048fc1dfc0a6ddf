#include "epistoch/bayes.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "epistoch/analytic.hpp"
#include "epistoch/errors.hpp"

namespace epistoch {

PriorSpec PriorSpec::exponential_prior(double mean) {
    if (!(mean > 0.0)) throw std::invalid_argument("exponential prior mean must be positive");
    PriorSpec p;
    p.kind = Kind::exponential;
    p.mean = mean;
    return p;
}

PriorSpec PriorSpec::tabulated_prior(std::vector<double> tau_points,
                                     std::vector<double> densities) {
    if (tau_points.size() < 2 || tau_points.size() != densities.size())
        throw std::invalid_argument("tabulated prior needs matching grids of at least 2 points");
    for (std::size_t i = 0; i < tau_points.size(); ++i) {
        if (i > 0 && !(tau_points[i] > tau_points[i - 1]))
            throw std::invalid_argument("tabulated prior grid must be strictly increasing");
        if (!(densities[i] >= 0.0))
            throw std::invalid_argument("tabulated prior densities must be non-negative");
    }
    PriorSpec p;
    p.kind = Kind::tabulated;
    p.tau_points = std::move(tau_points);
    p.densities = std::move(densities);
    return p;
}

double PriorSpec::density(double tau) const {
    if (tau < 0.0) return 0.0;
    if (kind == Kind::exponential) return std::exp(-tau / mean) / mean;
    if (tau < tau_points.front() || tau > tau_points.back()) return 0.0;
    // linear interpolation on the tabulated grid
    std::size_t hi = 1;
    while (hi + 1 < tau_points.size() && tau_points[hi] < tau) ++hi;
    const double t0 = tau_points[hi - 1], t1 = tau_points[hi];
    const double w = (tau - t0) / (t1 - t0);
    return (1.0 - w) * densities[hi - 1] + w * densities[hi];
}

PosteriorGrid tau_posterior(const PriorSpec& prior, double observed_fraction,
                            const GridSpec& grid) {
    if (!(observed_fraction > 0.0 && observed_fraction < 1.0))
        throw std::invalid_argument("tau_posterior: observed fraction must lie in (0, 1)");
    if (!(grid.tau_max > 0.0 && grid.step > 0.0 && grid.step < grid.tau_max))
        throw std::invalid_argument("tau_posterior: invalid grid");

    PosteriorGrid out;
    out.r0_hat = r0_from_final_size(observed_fraction);
    const std::size_t m = static_cast<std::size_t>(std::llround(grid.tau_max / grid.step)) + 1;
    out.tau.resize(m);
    out.prior_density.resize(m);
    out.posterior_density.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double tau = i * grid.step;
        out.tau[i] = tau;
        out.prior_density[i] = prior.density(tau);
        out.posterior_density[i] = out.prior_density[i] * major_outbreak_prob(out.r0_hat, tau);
    }

    const auto trapezoid_total = [&](const std::vector<double>& f) {
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < m; ++i)
            total += 0.5 * (f[i] + f[i + 1]) * (out.tau[i + 1] - out.tau[i]);
        return total;
    };
    out.normalization = trapezoid_total(out.posterior_density);
    if (!(out.normalization > 0.0))
        throw NumericalError("tau_posterior: prior carries no mass where takeoff is possible");
    for (double& d : out.posterior_density) d /= out.normalization;

    const auto cumulate = [&](const std::vector<double>& f, std::vector<double>& cdf) {
        cdf.resize(m);
        cdf[0] = 0.0;
        for (std::size_t i = 1; i < m; ++i)
            cdf[i] = cdf[i - 1] + 0.5 * (f[i - 1] + f[i]) * (out.tau[i] - out.tau[i - 1]);
    };
    // Prior CDF is normalized over the same grid so the two curves are
    // comparable even when the prior has mass beyond tau_max.
    std::vector<double> prior_norm = out.prior_density;
    const double prior_total = trapezoid_total(prior_norm);
    if (!(prior_total > 0.0)) throw NumericalError("tau_posterior: prior has no mass on the grid");
    for (double& d : prior_norm) d /= prior_total;
    cumulate(prior_norm, out.prior_cdf);
    cumulate(out.posterior_density, out.posterior_cdf);
    return out;
}

double posterior_mean(const PosteriorGrid& grid) {
    const std::size_t m = grid.tau.size();
    if (m < 2) throw std::invalid_argument("posterior_mean: grid too small");
    double total = 0.0, weighted = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const double dt = grid.tau[i + 1] - grid.tau[i];
        total += 0.5 * (grid.posterior_density[i] + grid.posterior_density[i + 1]) * dt;
        weighted += 0.5 *
                    (grid.tau[i] * grid.posterior_density[i] +
                     grid.tau[i + 1] * grid.posterior_density[i + 1]) *
                    dt;
    }
    if (std::fabs(total - 1.0) > 1e-6)
        throw std::invalid_argument("posterior_mean: grid is not normalized");
    return weighted;
}

}  // namespace epistoch
