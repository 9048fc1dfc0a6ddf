#pragma once

#include <functional>

namespace epistoch {

// Finds a root of f on [lo, hi] given f(lo) and f(hi) of opposite sign (or
// zero). Safeguarded secant steps falling back to bisection; terminates when
// the bracket width drops below x_tol. Throws NumericalError if the initial
// values do not bracket a root or the iteration cap is hit.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double x_tol = 1e-13, int max_iter = 200);

}  // namespace epistoch
