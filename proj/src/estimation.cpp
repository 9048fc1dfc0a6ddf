#include "epistoch/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "epistoch/analytic.hpp"

namespace epistoch {

IncidenceSeries IncidenceSeries::from_incident(std::vector<double> counts) {
    IncidenceSeries s;
    s.cumulative.reserve(counts.size());
    double total = 0.0;
    for (double c : counts) {
        if (!(c >= 0.0)) throw std::invalid_argument("incidence counts must be non-negative");
        total += c;
        s.cumulative.push_back(total);
    }
    s.incident = std::move(counts);
    return s;
}

double growth_rate_window(const IncidenceSeries& series, int t0, int t1) {
    if (t0 < 0 || t1 >= series.days())
        throw std::invalid_argument("growth window lies outside the series");
    if (t0 >= t1) throw std::invalid_argument("growth window must satisfy t0 < t1");
    const double r0v = series.cumulative[t0];
    const double r1v = series.cumulative[t1];
    if (r0v <= 0.0)
        throw std::invalid_argument("window starts before takeoff: cumulative count is 0 at t0");
    return (std::log(r1v) - std::log(r0v)) / static_cast<double>(t1 - t0);
}

double growth_rate_mean(const IncidenceSeries& series,
                        const std::vector<std::pair<int, int>>& windows) {
    if (windows.empty()) throw std::invalid_argument("growth_rate_mean: no windows given");
    double sum = 0.0;
    for (const auto& w : windows) sum += growth_rate_window(series, w.first, w.second);
    return sum / static_cast<double>(windows.size());
}

namespace {

void validate(const Interval& iv, const char* name, bool positive_low) {
    if (!(iv.low <= iv.high))
        throw std::invalid_argument(std::string(name) + ": interval low must not exceed high");
    if (!(iv.low >= 0.0))
        throw std::invalid_argument(std::string(name) + ": interval must be non-negative");
    if (positive_low && !(iv.low > 0.0))
        throw std::invalid_argument(std::string(name) + ": mean interval must be positive");
}

}  // namespace

std::vector<R0TableRow> r0_uncertainty_table(double alpha_hat, const ParamIntervals& intervals) {
    if (!(alpha_hat > 0.0))
        throw std::invalid_argument("r0_uncertainty_table: alpha must be positive");
    validate(intervals.mu_l, "mu_l", false);
    validate(intervals.mu_i, "mu_i", true);
    validate(intervals.tau_l, "tau_l", false);
    validate(intervals.tau_i, "tau_i", false);

    std::vector<R0TableRow> rows;
    rows.reserve(17);
    const auto add = [&](double mu_l, double mu_i, double tau_l, double tau_i) {
        const double r0 =
            r0_from_growth(alpha_hat, GammaSpec(mu_l, tau_l), GammaSpec(mu_i, tau_i));
        rows.push_back({mu_l, mu_i, tau_l, tau_i, r0});
    };
    for (double mu_l : {intervals.mu_l.low, intervals.mu_l.high})
        for (double mu_i : {intervals.mu_i.low, intervals.mu_i.high})
            for (double tau_l : {intervals.tau_l.low, intervals.tau_l.high})
                for (double tau_i : {intervals.tau_i.low, intervals.tau_i.high})
                    add(mu_l, mu_i, tau_l, tau_i);
    add(intervals.mu_l.mid(), intervals.mu_i.mid(), intervals.tau_l.mid(), intervals.tau_i.mid());
    return rows;
}

double growth_rate_from_simulation(const SimOutcome& outcome, const EpidemicParams& params) {
    if (outcome.classification != Classification::major)
        throw std::invalid_argument(
            "growth_rate_from_simulation: outcome is a minor outbreak, no exponential phase");
    const double lo = std::max(50.0, 10.0 * params.k);
    const double hi = 0.05 * params.n;

    // Removal events appear in time order in the log; regress log count on time.
    long long count = 0;
    long long points = 0;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const Event& ev : outcome.events) {
        if (ev.kind != EventKind::removal) continue;
        ++count;
        const double c = static_cast<double>(count);
        if (c < lo || c > hi) continue;
        const double x = ev.time;
        const double y = std::log(c);
        ++points;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    if (points < 5)
        throw std::invalid_argument(
            "growth_rate_from_simulation: insufficient exponential window, fewer than 5 removals "
            "in range");
    const double denom = points * sxx - sx * sx;
    if (denom <= 0.0)
        throw std::invalid_argument("growth_rate_from_simulation: degenerate removal times");
    return (points * sxy - sx * sy) / denom;
}

}  // namespace epistoch
