#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "epistoch/estimation.hpp"
#include "epistoch/io.hpp"
#include "epistoch/rng.hpp"
#include "test_support.hpp"

using namespace epistoch;
using test_support::close;
using test_support::fixture_path;

namespace {

// Daily incident counts whose cumulative curve is exactly W exp(alpha t).
IncidenceSeries exact_exponential(double alpha, double w, int days) {
    std::vector<double> inc(days);
    inc[0] = w;
    for (int t = 1; t < days; ++t)
        inc[t] = w * (std::exp(alpha * t) - std::exp(alpha * (t - 1)));
    return IncidenceSeries::from_incident(std::move(inc));
}

}  // namespace

TEST_CASE("incidence series accumulates counts") {
    const IncidenceSeries s = IncidenceSeries::from_incident({2, 0, 3, 1});
    CHECK(s.days() == 4);
    CHECK(s.cumulative == std::vector<double>{2, 2, 5, 6});
    CHECK_THROWS_AS(IncidenceSeries::from_incident({1, -2}), std::invalid_argument);
}

TEST_CASE("two-point growth estimator is exact on exponential data") {
    const IncidenceSeries s = exact_exponential(0.05, 5.0, 40);
    CHECK(close(growth_rate_window(s, 10, 25), 0.05, 1e-13));
    // property: random rates and scales, random windows of width >= 3
    Rng rng(2718281828);
    for (int trial = 0; trial < 100; ++trial) {
        const double alpha = 0.01 + 0.29 * rng.uniform();
        const double w = 1.0 + 99.0 * rng.uniform();
        const IncidenceSeries series = exact_exponential(alpha, w, 60);
        const int t0 = static_cast<int>(rng.below(40));
        const int t1 = t0 + 3 + static_cast<int>(rng.below(15));
        CHECK(close(growth_rate_window(series, t0, t1), alpha, 1e-12));
    }
}

TEST_CASE("constant cumulative counts give zero growth") {
    const IncidenceSeries s = IncidenceSeries::from_incident({4, 0, 0, 0, 0, 0});
    CHECK(growth_rate_window(s, 1, 5) == 0.0);
}

TEST_CASE("growth window validation") {
    const IncidenceSeries s = IncidenceSeries::from_incident({0, 0, 1, 2, 4});
    CHECK_THROWS_AS(growth_rate_window(s, 0, 3), std::invalid_argument);  // before takeoff
    CHECK_THROWS_AS(growth_rate_window(s, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(growth_rate_window(s, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(growth_rate_window(s, -1, 3), std::invalid_argument);
    CHECK_THROWS_AS(growth_rate_window(s, 2, 5), std::invalid_argument);  // past series end
    CHECK_THROWS_AS(growth_rate_mean(s, {}), std::invalid_argument);
}

TEST_CASE("window mean on the bundled synthetic outbreak") {
    const IncidenceSeries s = parse_incidence_csv(fixture_path("data/sars_synthetic.csv"));
    REQUIRE(s.days() == 60);
    const double a1 = growth_rate_window(s, 10, 20);
    const double a2 = growth_rate_window(s, 10, 25);
    const double a3 = growth_rate_window(s, 15, 25);
    CHECK(close(a1, 0.05108256237659905, 1e-15));
    CHECK(close(a2, 0.053566349181920686, 1e-15));
    CHECK(close(a3, 0.05411309732613194, 1e-15));
    const double mean = growth_rate_mean(s, {{10, 20}, {10, 25}, {15, 25}});
    CHECK(mean == (a1 + a2 + a3) / 3.0);
    CHECK(close(mean, 0.05292066962821723, 1e-15));
}

TEST_CASE("mean of the reference window estimates reproduces the headline rate") {
    // arithmetic check: the three published window estimates average to 0.053
    const std::vector<double> estimates{0.071, 0.054, 0.034};
    double sum = 0.0;
    for (double e : estimates) sum += e;
    CHECK(sum / 3.0 == 0.053);
}

TEST_CASE("uncertainty table layout and collapsed-interval behavior") {
    const ParamIntervals iv{{3, 11}, {3, 11}, {0, 4.0 / 7.0}, {0, 4.0 / 7.0}};
    const auto rows = r0_uncertainty_table(0.053, iv);
    REQUIRE(rows.size() == 17);
    // lexicographic corner order: tau_i varies fastest, mu_l slowest
    CHECK(rows[0].mu_l == 3);
    CHECK(rows[0].tau_i == 0);
    CHECK(rows[1].tau_i == 4.0 / 7.0);
    CHECK(rows[1].tau_l == 0);
    CHECK(rows[2].tau_l == 4.0 / 7.0);
    CHECK(rows[7].mu_l == 3);
    CHECK(rows[7].mu_i == 11);
    CHECK(rows[8].mu_l == 11);
    CHECK(rows[15].mu_l == 11);
    CHECK(rows[15].tau_i == 4.0 / 7.0);
    // midpoint appended last
    CHECK(rows[16].mu_l == 7);
    CHECK(rows[16].mu_i == 7);
    CHECK(rows[16].tau_l == 2.0 / 7.0);
    CHECK(close(rows[16].r0_hat, 1.74653649231, 1e-9));
    for (const auto& r : rows) CHECK(r.r0_hat > 1.0);

    const ParamIntervals collapsed{{7, 7}, {7, 7}, {2.0 / 7.0, 2.0 / 7.0}, {2.0 / 7.0, 2.0 / 7.0}};
    for (const auto& r : r0_uncertainty_table(0.053, collapsed))
        CHECK(close(r.r0_hat, 1.74653649231, 1e-9));

    CHECK_THROWS_AS(r0_uncertainty_table(0.0, iv), std::invalid_argument);
    CHECK_THROWS_AS(r0_uncertainty_table(0.053, ParamIntervals{{11, 3}, {3, 11}, {0, 1}, {0, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(r0_uncertainty_table(0.053, ParamIntervals{{3, 11}, {0, 11}, {0, 1}, {0, 1}}),
                    std::invalid_argument);
}

TEST_CASE("table estimates rise with either period mean") {
    const ParamIntervals iv{{3, 11}, {3, 11}, {0, 4.0 / 7.0}, {0, 4.0 / 7.0}};
    const auto rows = r0_uncertainty_table(0.053, iv);
    // indices: mu_l bit 3, mu_i bit 2, tau_l bit 1, tau_i bit 0
    for (int rest = 0; rest < 4; ++rest) {
        for (int mu_i_bit = 0; mu_i_bit < 2; ++mu_i_bit)
            CHECK(rows[8 + 4 * mu_i_bit + rest].r0_hat >=
                  rows[0 + 4 * mu_i_bit + rest].r0_hat);
        for (int mu_l_bit = 0; mu_l_bit < 2; ++mu_l_bit)
            CHECK(rows[8 * mu_l_bit + 4 + rest].r0_hat >= rows[8 * mu_l_bit + 0 + rest].r0_hat);
    }
}

TEST_CASE("regression growth estimate recovers exact exponential pacing") {
    // removals placed so that the c-th removal happens at t = 10 ln(c):
    // cumulative removed count equals exp(0.1 t) exactly along the log curve
    const EpidemicParams p{20000, 1, 2.0, GammaSpec(0.0, 0.0), GammaSpec(7.0, 0.0)};
    SimOutcome out;
    out.final_size = 16000;  // above the major threshold for r0 = 2
    out.classification = Classification::major;
    for (int c = 1; c <= 1000; ++c)
        out.events.push_back({10.0 * std::log(static_cast<double>(c)), EventKind::removal, c});
    CHECK(close(growth_rate_from_simulation(out, p), 0.1, 1e-9));
}

TEST_CASE("regression growth estimate rejects unusable outcomes") {
    const EpidemicParams p{20000, 1, 2.0, GammaSpec(0.0, 0.0), GammaSpec(7.0, 0.0)};
    SimOutcome minor;
    minor.final_size = 3;
    minor.classification = Classification::minor;
    CHECK_THROWS_AS(growth_rate_from_simulation(minor, p), std::invalid_argument);
    SimOutcome tiny;
    tiny.final_size = 16000;
    tiny.classification = Classification::major;
    for (int c = 1; c <= 52; ++c)  // only 3 removals land in [50, 1000]
        tiny.events.push_back({0.1 * c, EventKind::removal, c});
    CHECK_THROWS_AS(growth_rate_from_simulation(tiny, p), std::invalid_argument);
}
