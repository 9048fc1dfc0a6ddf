#pragma once

#include <utility>
#include <vector>

#include "epistoch/distributions.hpp"
#include "epistoch/simulator.hpp"

namespace epistoch {

// Daily case counts indexed by day 0, 1, 2, ... with the derived cumulative
// curve R(t). Counts are held as doubles; parsers enforce integrality.
struct IncidenceSeries {
    std::vector<double> incident;
    std::vector<double> cumulative;

    static IncidenceSeries from_incident(std::vector<double> counts);
    int days() const { return static_cast<int>(incident.size()); }
};

// Two-point log-slope (log R(t1) - log R(t0)) / (t1 - t0).
// Requires 0 <= t0 < t1 < series length and R(t0) > 0.
double growth_rate_window(const IncidenceSeries& series, int t0, int t1);

// Arithmetic mean of growth_rate_window over the given windows.
double growth_rate_mean(const IncidenceSeries& series,
                        const std::vector<std::pair<int, int>>& windows);

struct Interval {
    double low;
    double high;
    double mid() const { return 0.5 * (low + high); }
};

struct ParamIntervals {
    Interval mu_l;
    Interval mu_i;
    Interval tau_l;
    Interval tau_i;
};

struct R0TableRow {
    double mu_l, mu_i, tau_l, tau_i;
    double r0_hat;
};

// r0_from_growth evaluated at the 16 interval corners, ordered
// lexicographically in (mu_l, mu_i, tau_l, tau_i) with low before high, plus
// the componentwise midpoint as the final row.
std::vector<R0TableRow> r0_uncertainty_table(double alpha_hat, const ParamIntervals& intervals);

// Least-squares slope of log(cumulative removed) against removal time over
// the window where the removed count lies in [max(50, 10k), 0.05 n]: below
// that, branching noise dominates; above it, susceptible depletion bends the
// curve. Requires a major outcome and at least 5 removals in the window.
double growth_rate_from_simulation(const SimOutcome& outcome, const EpidemicParams& params);

}  // namespace epistoch
