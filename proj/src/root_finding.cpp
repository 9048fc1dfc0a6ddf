#include "epistoch/root_finding.hpp"

#include <cmath>

#include "epistoch/errors.hpp"

namespace epistoch {

double find_root(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                 int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NumericalError("find_root: endpoints do not bracket a sign change");
    for (int i = 0; i < max_iter; ++i) {
        if (hi - lo <= x_tol) break;
        // Secant proposal, accepted only if it lands strictly inside the
        // current bracket; otherwise bisect.
        double x = lo - flo * (hi - lo) / (fhi - flo);
        const double margin = 0.01 * (hi - lo);
        if (!(x > lo + margin && x < hi - margin)) x = 0.5 * (lo + hi);
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    if (hi - lo > x_tol) throw NumericalError("find_root: iteration cap reached");
    return 0.5 * (lo + hi);
}

}  // namespace epistoch
