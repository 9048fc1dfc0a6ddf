#include "epistoch/figures.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "epistoch/analytic.hpp"
#include "epistoch/bayes.hpp"
#include "epistoch/io.hpp"

namespace epistoch {

namespace {

std::string join(const std::string& dir, const std::string& name) {
    if (dir.empty() || dir == ".") return name;
    return dir.back() == '/' ? dir + name : dir + "/" + name;
}

std::string trim_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::vector<std::string> emit_fig1(const std::string& out_dir, const std::vector<double>& r0s) {
    if (r0s.empty()) throw std::invalid_argument("fig1 needs at least one r0 value");
    CsvTable t;
    t.header.push_back("tau_i");
    for (double r0 : r0s) t.header.push_back("pi_r0_" + trim_number(r0));
    for (int i = 0; i <= 300; ++i) {
        const double tau = i * 0.01;
        std::vector<double> row{tau};
        for (double r0 : r0s) row.push_back(major_outbreak_prob(r0, tau));
        t.rows.push_back(std::move(row));
    }
    const std::string path = join(out_dir, "fig1.csv");
    write_csv(path, t);
    return {path};
}

std::vector<std::string> emit_fig2(const std::string& out_dir) {
    CsvTable t;
    t.header = {"k", "pi_k_pi_0.25", "pi_k_pi_0.5"};
    for (int k = 1; k <= 20; ++k)
        t.rows.push_back({static_cast<double>(k), 1.0 - std::pow(0.75, k),
                          1.0 - std::pow(0.5, k)});
    const std::string path = join(out_dir, "fig2.csv");
    write_csv(path, t);
    return {path};
}

std::vector<std::string> emit_fig3(const std::string& out_dir) {
    const double kTau = 3.0 / 7.0;
    std::vector<std::string> paths;
    const auto sweep = [&](const std::string& name, double lo, double hi, double step,
                           auto params_at) {
        CsvTable t;
        t.header = {name, "alpha"};
        const int steps = static_cast<int>(std::lround((hi - lo) / step));
        for (int i = 0; i <= steps; ++i) {
            const double x = lo + i * step;
            t.rows.push_back({x, malthusian(params_at(x))});
        }
        const std::string path = join(out_dir, "fig3_" + name + ".csv");
        write_csv(path, t);
        paths.push_back(path);
    };
    sweep("mu_l", 1.0, 14.0, 0.1, [&](double x) {
        return GrowthParams{2.0, GammaSpec(x, kTau), GammaSpec(7.0, kTau)};
    });
    sweep("mu_i", 1.0, 14.0, 0.1, [&](double x) {
        return GrowthParams{2.0, GammaSpec(7.0, kTau), GammaSpec(x, kTau)};
    });
    sweep("tau_l", 0.0, 3.0, 0.01, [&](double x) {
        return GrowthParams{2.0, GammaSpec(7.0, x), GammaSpec(7.0, kTau)};
    });
    sweep("tau_i", 0.0, 3.0, 0.01, [&](double x) {
        return GrowthParams{2.0, GammaSpec(7.0, kTau), GammaSpec(7.0, x)};
    });
    return paths;
}

std::vector<std::string> emit_fig5(const std::string& out_dir) {
    const PosteriorGrid grid = tau_posterior(PriorSpec::exponential_prior(0.5), 0.5);
    CsvTable t;
    t.header = {"tau", "prior_cdf", "posterior_cdf", "posterior_density"};
    for (std::size_t i = 0; i < grid.tau.size(); ++i)
        t.rows.push_back(
            {grid.tau[i], grid.prior_cdf[i], grid.posterior_cdf[i], grid.posterior_density[i]});
    const std::string path = join(out_dir, "fig5.csv");
    write_csv(path, t);
    return {path};
}

}  // namespace

std::vector<std::string> emit_figure_data(const std::string& figure, const std::string& out_dir,
                                          const std::vector<double>& fig1_r0) {
    if (figure == "fig1") return emit_fig1(out_dir, fig1_r0);
    if (figure == "fig2") return emit_fig2(out_dir);
    if (figure == "fig3") return emit_fig3(out_dir);
    if (figure == "fig5") return emit_fig5(out_dir);
    throw std::invalid_argument("unknown figure: " + figure +
                                " (expected fig1, fig2, fig3 or fig5)");
}

}  // namespace epistoch
