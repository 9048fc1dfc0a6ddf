#pragma once

#include "epistoch/distributions.hpp"

namespace epistoch {

// Transmission parameters of the epidemic model. The contact rate is implied:
// lambda = r0 / infectious.mean.
struct GrowthParams {
    double r0;
    GammaSpec latent;
    GammaSpec infectious;

    double contact_rate() const { return r0 / infectious.mean(); }
};

// Largest solution rho of 1 - rho = exp(-r0 * rho); 0 when r0 <= 1.
double final_size_fraction(double r0);

// Inverse of the final-size relation: r0 = -ln(1 - rho) / rho, rho in (0, 1).
double r0_from_final_size(double rho);

// Probability that an epidemic started by one infectious individual takes off.
// Largest solution pi of 1 - pi = offspring_pgf(1 - pi); 0 when r0 <= 1.
// tau_i = 0 uses the Poisson limit 1 - pi = exp(-pi * r0); tau_i = 1 has the
// closed form 1 - 1/r0.
double major_outbreak_prob(double r0, double tau_i);

// Takeoff probability with k independent initial cases: 1 - (1 - pi)^k.
double outbreak_prob_k(double r0, double tau_i, int k);

// Exponential growth rate alpha > 0 solving
//   alpha = lambda * phi_L(alpha) * (1 - phi_I(alpha)),
// where phi are the Laplace transforms of the latent and infectious periods.
// Requires r0 > 1.
double malthusian(const GrowthParams& params);

// Inverse of malthusian at fixed period distributions:
//   r0 = alpha * mu_I / (phi_L(alpha) * (1 - phi_I(alpha))).
double r0_from_growth(double alpha, const GammaSpec& latent, const GammaSpec& infectious);

// Evaluates integral_0^inf exp(-alpha t) * lambda * P(L < t < L + I) dt by
// quadrature of the convolution P(L < t < L + I) = int_0^t f_L(s) (1 - F_I(t-s)) ds.
// Deliberately avoids the closed-form Laplace identity so it can serve as an
// independent check on malthusian: the value is 1 at the true growth rate and
// r0 at alpha = 0.
double euler_lotka_residual(double alpha, const GrowthParams& params);

struct VaccinationCoverage {
    double value;
    bool feasible;
};

// Fraction (1 - 1/r0) / efficacy that must be vaccinated to prevent major
// outbreaks. value 0 when r0 <= 1; feasible is false when the required
// coverage exceeds 1.
VaccinationCoverage critical_vaccination_coverage(double r0, double efficacy);

}  // namespace epistoch
