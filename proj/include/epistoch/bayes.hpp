#pragma once

#include <vector>

namespace epistoch {

// Prior over the infectious-period coefficient of variation tau_I: either
// exponential with a given mean, or a tabulated density on an increasing grid
// (linearly interpolated, zero outside the tabulated range).
struct PriorSpec {
    enum class Kind { exponential, tabulated };
    Kind kind = Kind::exponential;
    double mean = 0.5;                        // exponential only
    std::vector<double> tau_points;           // tabulated only
    std::vector<double> densities;            // tabulated only

    static PriorSpec exponential_prior(double mean);
    static PriorSpec tabulated_prior(std::vector<double> tau_points,
                                     std::vector<double> densities);
    double density(double tau) const;
};

struct GridSpec {
    double tau_max = 5.0;
    double step = 1e-3;
};

struct PosteriorGrid {
    std::vector<double> tau;
    std::vector<double> prior_density;
    std::vector<double> posterior_density;
    std::vector<double> prior_cdf;
    std::vector<double> posterior_cdf;
    double normalization;  // trapezoid integral of prior * likelihood
    double r0_hat;         // reproduction number implied by the observed fraction
};

// Posterior p(tau | observed final fraction) on a uniform grid:
// the likelihood of observing a major outbreak with fraction rho is the
// takeoff probability pi(r0_hat, tau) with r0_hat = r0_from_final_size(rho),
// so posterior_density = prior * pi / normalization (trapezoid rule).
PosteriorGrid tau_posterior(const PriorSpec& prior, double observed_fraction,
                            const GridSpec& grid = {});

// Trapezoid integral of tau * posterior_density. Rejects grids whose
// posterior does not integrate to 1 within 1e-6.
double posterior_mean(const PosteriorGrid& grid);

}  // namespace epistoch
