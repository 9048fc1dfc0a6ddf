#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "epistoch/errors.hpp"

namespace epistoch {

// Adaptive Simpson integration on [a, b] to an absolute tolerance.
// Recursion depth is capped; exceeding it raises NumericalError rather than
// silently returning a partial result.
namespace detail {

template <typename F>
double simpson_step(const F& f, double a, double fa, double b, double fb, double m, double fm,
                    double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h = b - a;
    const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
    const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0) throw NumericalError("adaptive Simpson: maximum recursion depth reached");
    return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

template <typename F>
double integrate(const F& f, double a, double b, double abs_tol, int max_depth = 60) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
    return detail::simpson_step(f, a, fa, b, fb, m, fm, whole, abs_tol, max_depth);
}

// Integrates over [a, b] split at interior knot points (sorted, deduplicated by
// the caller or here); useful when the integrand has kinks at known locations.
template <typename F>
double integrate_segmented(const F& f, double a, double b, const std::vector<double>& knots,
                           double abs_tol, int max_depth = 60) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double k : knots)
        if (k > a && k < b) pts.push_back(k);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    const double seg_tol = abs_tol / static_cast<double>(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1] - pts[i] < 1e-300) continue;
        total += integrate(f, pts[i], pts[i + 1], seg_tol, max_depth);
    }
    return total;
}

// Tanh-sinh (double exponential) integration on [a, b]. The substitution
// x = c + r tanh((pi/2) sinh(u)) clusters abscissae doubly exponentially at
// the endpoints without ever evaluating f there, so integrands with endpoint
// jumps or integrable algebraic singularities (x - a)^(p - 1), p > 0, still
// converge at an exponential rate where interval bisection schemes stall.
// Levels halve the mesh and reuse nothing; the whole sum is cheap enough that
// simplicity wins. Non-convergence by the last level raises NumericalError.
template <typename F>
double integrate_de(const F& f, double a, double b, double abs_tol, int max_level = 12) {
    if (a == b) return 0.0;
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    // |u| beyond this gives weights under ~1e-290; larger u risks overflow in
    // cosh and adds nothing at double precision.
    const double kUMax = 6.2;
    double prev = 0.0;
    for (int level = 0; level <= max_level; ++level) {
        const double h = std::ldexp(1.0, -level);
        const long kmax = static_cast<long>(kUMax / h);
        double sum = 0.0;
        for (long k = -kmax; k <= kmax; ++k) {
            const double u = static_cast<double>(k) * h;
            const double y = 1.5707963267948966 * std::sinh(u);
            const double e = std::exp(-2.0 * std::fabs(y));
            // sech^2(y) = 4 e / (1 + e)^2 and 1 - |tanh(y)| = 2 e / (1 + e),
            // both exact in the tail where tanh itself rounds to 1.
            const double w =
                1.5707963267948966 * std::cosh(u) * 4.0 * e / ((1.0 + e) * (1.0 + e));
            if (w < 1e-290) continue;
            const double delta_frac = 2.0 * e / (1.0 + e);
            double x;
            if (k < 0)
                x = a + r * delta_frac;
            else if (k > 0)
                x = b - r * delta_frac;
            else
                x = c;
            if (x <= a || x >= b) continue;
            sum += w * f(x);
        }
        const double value = sum * h * r;
        if (level >= 1 && std::fabs(value - prev) <= abs_tol) return value;
        prev = value;
    }
    throw NumericalError("tanh-sinh quadrature failed to converge");
}

// Segmented variant of integrate_de; same knot handling as integrate_segmented.
template <typename F>
double integrate_segmented_de(const F& f, double a, double b, const std::vector<double>& knots,
                              double abs_tol) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double k : knots)
        if (k > a && k < b) pts.push_back(k);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    const double seg_tol = abs_tol / static_cast<double>(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1] - pts[i] < 1e-300) continue;
        total += integrate_de(f, pts[i], pts[i + 1], seg_tol);
    }
    return total;
}

}  // namespace epistoch
