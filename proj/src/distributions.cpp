#include "epistoch/distributions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace epistoch {

namespace {

// (1 + x)^(-1/t2) evaluated as exp(-log1p(x)/t2); stable for small x and
// large 1/t2.
double inv_power(double x, double t2) { return std::exp(-std::log1p(x) / t2); }

}  // namespace

GammaSpec::GammaSpec(double mean, double cv) : mean_(mean), cv_(cv) {
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw std::invalid_argument("GammaSpec: mean must be non-negative, got " + std::to_string(mean));
    if (!(cv >= 0.0) || !std::isfinite(cv))
        throw std::invalid_argument("GammaSpec: cv must be non-negative, got " + std::to_string(cv));
}

double GammaSpec::shape() const {
    if (degenerate()) throw std::logic_error("GammaSpec::shape: degenerate law");
    return 1.0 / (cv_ * cv_);
}

double GammaSpec::rate() const {
    if (degenerate()) throw std::logic_error("GammaSpec::rate: degenerate law");
    return 1.0 / (mean_ * cv_ * cv_);
}

double GammaSpec::laplace(double s) const {
    if (!(s >= 0.0)) throw std::invalid_argument("GammaSpec::laplace: s must be non-negative");
    if (mean_ == 0.0) return 1.0;
    const double t2 = cv_ * cv_;
    if (t2 < kDegenerateCvSq) return std::exp(-s * mean_);
    return inv_power(s * t2 * mean_, t2);
}

double GammaSpec::sample(Rng& rng) const {
    if (degenerate()) return mean_;
    const double a = shape();
    const double scale = mean_ * cv_ * cv_;  // 1/rate
    if (a == 1.0) return rng.exponential(1.0 / scale);

    // Marsaglia-Tsang squeeze; shape < 1 is boosted to shape + 1 and scaled
    // back by U^(1/shape).
    const double boosted = a < 1.0 ? a + 1.0 : a;
    const double d = boosted - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    double draw;
    for (;;) {
        double z, v;
        do {
            z = rng.normal();
            v = 1.0 + c * z;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform();
        if (u < 1.0 - 0.0331 * z * z * z * z ||
            std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) {
            draw = d * v;
            break;
        }
    }
    if (a < 1.0) draw *= std::pow(rng.uniform(), 1.0 / a);
    return draw * scale;
}

double offspring_pgf(double s, double r0, double tau_i) {
    if (!(s >= 0.0 && s <= 1.0))
        throw std::invalid_argument("offspring_pgf: s must lie in [0, 1], got " + std::to_string(s));
    if (!(r0 > 0.0)) throw std::invalid_argument("offspring_pgf: r0 must be positive");
    if (!(tau_i >= 0.0)) throw std::invalid_argument("offspring_pgf: tau_i must be non-negative");
    const double t2 = tau_i * tau_i;
    if (t2 < kDegenerateCvSq) return std::exp(-(1.0 - s) * r0);
    return inv_power((1.0 - s) * r0 * t2, t2);
}

}  // namespace epistoch
