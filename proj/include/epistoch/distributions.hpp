#pragma once

#include "epistoch/rng.hpp"

namespace epistoch {

// Below this squared coefficient of variation a period law is treated as the
// deterministic point mass and every formula switches to its cv -> 0 limit.
inline constexpr double kDegenerateCvSq = 1e-12;

// A period length law parameterized by mean and coefficient of variation.
// cv > 0 is Gamma(shape = 1/cv^2, rate = 1/(mean*cv^2)); cv = 0 is the point
// mass at `mean`. mean = 0 denotes an absent period (point mass at zero).
class GammaSpec {
  public:
    GammaSpec(double mean, double cv);

    double mean() const { return mean_; }
    double cv() const { return cv_; }

    bool degenerate() const { return mean_ == 0.0 || cv_ * cv_ < kDegenerateCvSq; }
    double shape() const;  // requires a non-degenerate law
    double rate() const;

    // Laplace transform E[exp(-s * X)], s >= 0.
    double laplace(double s) const;

    // One draw; cv = 0 returns `mean` deterministically.
    double sample(Rng& rng) const;

  private:
    double mean_;
    double cv_;
};

// Offspring probability generating function E[s^X] for the count of contacts
// made during an infectious period with mean such that E[X] = r0 and period
// coefficient of variation tau_i: negative binomial, Poisson when tau_i = 0.
double offspring_pgf(double s, double r0, double tau_i);

}  // namespace epistoch
