#include "epistoch/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "epistoch/analytic.hpp"
#include "epistoch/bayes.hpp"
#include "epistoch/errors.hpp"
#include "epistoch/estimation.hpp"
#include "epistoch/figures.hpp"
#include "epistoch/io.hpp"
#include "epistoch/simulator.hpp"

namespace epistoch {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double parse_double(const std::string& s, const std::string& what) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end == s.c_str() || *end != '\0')
        throw std::invalid_argument(what + ": not a number: '" + s + "'");
    return v;
}

std::pair<std::string, std::string> split_colon(const std::string& s, const std::string& what) {
    const auto pos = s.find(':');
    if (pos == std::string::npos)
        throw std::invalid_argument(what + ": expected '<low>:<high>', got '" + s + "'");
    return {s.substr(0, pos), s.substr(pos + 1)};
}

Interval parse_interval(const std::string& s, const std::string& what) {
    const auto [lo, hi] = split_colon(s, what);
    return {parse_double(lo, what), parse_double(hi, what)};
}

std::pair<int, int> parse_window(const std::string& s) {
    const auto [a, b] = split_colon(s, "--window");
    const double t0 = parse_double(a, "--window");
    const double t1 = parse_double(b, "--window");
    const int i0 = static_cast<int>(t0), i1 = static_cast<int>(t1);
    if (t0 != i0 || t1 != i1)
        throw std::invalid_argument("--window: day offsets must be integers");
    return {i0, i1};
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    try {
        return json::parse(in, nullptr, true, true);  // allow // comments
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what(), 0);
    }
}

void check_keys(const json& j, const std::vector<std::string>& allowed, const std::string& ctx) {
    if (!j.is_object()) throw std::invalid_argument("config " + ctx + " must be a JSON object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const auto& key : allowed)
            if (item.key() == key) {
                known = true;
                break;
            }
        if (!known)
            throw std::invalid_argument("config " + ctx + ": unknown key '" + item.key() + "'");
    }
}

GammaSpec gamma_from_json(const json& j, const std::string& ctx) {
    check_keys(j, {"mean", "cv"}, ctx);
    if (!j.contains("mean") || !j.contains("cv"))
        throw std::invalid_argument("config " + ctx + " needs both 'mean' and 'cv'");
    return GammaSpec(j.at("mean").get<double>(), j.at("cv").get<double>());
}

std::uint64_t seed_from_config(const json& j) {
    std::uint64_t seed = 1;
    if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
    if (const char* env = std::getenv("EPISTOCH_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (*env == '\0' || *end != '\0')
            throw std::invalid_argument("EPISTOCH_SEED is not an unsigned integer");
        seed = v;
    }
    return seed;
}

EpidemicParams epidemic_from_json(const json& j) {
    for (const char* key : {"n", "k", "r0", "latent", "infectious"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("config: missing key '") + key + "'");
    return EpidemicParams{j.at("n").get<int>(), j.at("k").get<int>(), j.at("r0").get<double>(),
                          gamma_from_json(j.at("latent"), "latent"),
                          gamma_from_json(j.at("infectious"), "infectious")};
}

void maybe_write(const std::string& out_path, const CsvTable& table) {
    if (!out_path.empty()) write_csv(out_path, table);
}

struct CliState {
    std::ostream& out;
    std::ostream& err;
};

void setup_solve(CLI::App& app, CliState& st) {
    auto* solve = app.add_subcommand("solve", "Analytic quantities");
    solve->require_subcommand(1);

    {
        auto* c = solve->add_subcommand("final-size",
                                        "Final outbreak fraction rho solving 1-rho=exp(-r0 rho)");
        auto r0 = std::make_shared<double>();
        auto out_path = std::make_shared<std::string>();
        c->add_option("--r0", *r0, "basic reproduction number")->required();
        c->add_option("--out", *out_path, "write result as CSV");
        c->callback([&st, r0, out_path] {
            const double rho = final_size_fraction(*r0);
            st.out << fmt(rho) << "\n";
            maybe_write(*out_path, {{"r0", "rho_star"}, {{*r0, rho}}, ""});
        });
    }
    {
        auto* c = solve->add_subcommand("outbreak-prob",
                                        "Probability that the epidemic takes off");
        auto r0 = std::make_shared<double>();
        auto tau_i = std::make_shared<double>();
        auto k = std::make_shared<int>(1);
        auto out_path = std::make_shared<std::string>();
        c->add_option("--r0", *r0, "basic reproduction number")->required();
        c->add_option("--tau-i", *tau_i, "infectious period coefficient of variation")->required();
        c->add_option("--k", *k, "number of initial cases (default 1)");
        c->add_option("--out", *out_path, "write result as CSV");
        c->callback([&st, r0, tau_i, k, out_path] {
            const double pi_k = outbreak_prob_k(*r0, *tau_i, *k);
            st.out << fmt(pi_k) << "\n";
            maybe_write(*out_path, {{"r0", "tau_i", "k", "pi_k"},
                                    {{*r0, *tau_i, static_cast<double>(*k), pi_k}},
                                    ""});
        });
    }
    {
        auto* c = solve->add_subcommand("malthusian", "Exponential growth rate alpha");
        auto r0 = std::make_shared<double>();
        auto mu_l = std::make_shared<double>(), mu_i = std::make_shared<double>();
        auto tau_l = std::make_shared<double>(), tau_i = std::make_shared<double>();
        auto out_path = std::make_shared<std::string>();
        c->add_option("--r0", *r0)->required();
        c->add_option("--mu-l", *mu_l, "latent period mean (days)")->required();
        c->add_option("--mu-i", *mu_i, "infectious period mean (days)")->required();
        c->add_option("--tau-l", *tau_l, "latent period coefficient of variation")->required();
        c->add_option("--tau-i", *tau_i, "infectious period coefficient of variation")->required();
        c->add_option("--out", *out_path, "write result as CSV");
        c->callback([&st, r0, mu_l, mu_i, tau_l, tau_i, out_path] {
            const GrowthParams p{*r0, GammaSpec(*mu_l, *tau_l), GammaSpec(*mu_i, *tau_i)};
            const double alpha = malthusian(p);
            st.out << fmt(alpha) << "\n";
            maybe_write(*out_path, {{"r0", "mu_l", "mu_i", "tau_l", "tau_i", "alpha"},
                                    {{*r0, *mu_l, *mu_i, *tau_l, *tau_i, alpha}},
                                    ""});
        });
    }
}

void setup_invert(CLI::App& app, CliState& st) {
    auto* invert = app.add_subcommand("invert", "Reproduction number inversions");
    invert->require_subcommand(1);

    {
        auto* c = invert->add_subcommand("r0-from-growth",
                                         "r0 implied by an observed growth rate");
        auto alpha = std::make_shared<double>();
        auto mu_l = std::make_shared<double>(), mu_i = std::make_shared<double>();
        auto tau_l = std::make_shared<double>(), tau_i = std::make_shared<double>();
        auto out_path = std::make_shared<std::string>();
        c->add_option("--alpha", *alpha, "growth rate per day")->required();
        c->add_option("--mu-l", *mu_l)->required();
        c->add_option("--mu-i", *mu_i)->required();
        c->add_option("--tau-l", *tau_l)->required();
        c->add_option("--tau-i", *tau_i)->required();
        c->add_option("--out", *out_path, "write result as CSV");
        c->callback([&st, alpha, mu_l, mu_i, tau_l, tau_i, out_path] {
            const double r0 =
                r0_from_growth(*alpha, GammaSpec(*mu_l, *tau_l), GammaSpec(*mu_i, *tau_i));
            st.out << fmt(r0) << "\n";
            maybe_write(*out_path, {{"alpha", "mu_l", "mu_i", "tau_l", "tau_i", "r0_hat"},
                                    {{*alpha, *mu_l, *mu_i, *tau_l, *tau_i, r0}},
                                    ""});
        });
    }
    {
        auto* c = invert->add_subcommand("r0-from-final-size",
                                         "r0 implied by an observed final fraction");
        auto rho = std::make_shared<double>();
        auto out_path = std::make_shared<std::string>();
        c->add_option("--rho", *rho, "observed final fraction in (0,1)")->required();
        c->add_option("--out", *out_path, "write result as CSV");
        c->callback([&st, rho, out_path] {
            const double r0 = r0_from_final_size(*rho);
            st.out << fmt(r0) << "\n";
            maybe_write(*out_path, {{"rho", "r0_hat"}, {{*rho, r0}}, ""});
        });
    }
}

void setup_vc(CLI::App& app, CliState& st) {
    auto* c = app.add_subcommand("vc", "Critical vaccination coverage");
    auto r0 = std::make_shared<double>();
    auto efficacy = std::make_shared<double>(1.0);
    auto out_path = std::make_shared<std::string>();
    c->add_option("--r0", *r0)->required();
    c->add_option("--efficacy", *efficacy, "vaccine efficacy in (0,1], default 1")->required();
    c->add_option("--out", *out_path, "write result as CSV");
    c->callback([&st, r0, efficacy, out_path] {
        const VaccinationCoverage vc = critical_vaccination_coverage(*r0, *efficacy);
        st.out << fmt(vc.value) << "\n";
        if (!vc.feasible)
            st.out << "herd immunity unattainable: required coverage exceeds 1\n";
        maybe_write(*out_path, {{"r0", "efficacy", "coverage", "feasible"},
                                {{*r0, *efficacy, vc.value, vc.feasible ? 1.0 : 0.0}},
                                ""});
    });
}

void setup_simulate(CLI::App& app, CliState& st) {
    auto* c = app.add_subcommand("simulate", "One stochastic epidemic realization");
    auto config_path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    c->add_option("--config", *config_path, "JSON run configuration")->required();
    c->add_option("--out", *out_path, "write summary as CSV");
    c->callback([&st, config_path, out_path] {
        const json cfg = load_json(*config_path);
        check_keys(cfg,
                   {"n", "k", "r0", "latent", "infectious", "seed", "events_out",
                    "trajectory_out"},
                   "simulate");
        const EpidemicParams params = epidemic_from_json(cfg);
        const std::uint64_t seed = seed_from_config(cfg);
        const SimOutcome outcome = simulate(params, seed);
        const double fraction = static_cast<double>(outcome.final_size) / params.n;
        st.out << "final_size " << outcome.final_size << "\n";
        st.out << "fraction " << fmt(fraction) << "\n";
        st.out << "classification "
               << (outcome.classification == Classification::major ? "major" : "minor") << "\n";
        if (cfg.contains("events_out")) {
            CsvTable t;
            t.comment = "kind: 0=infection 1=activation 2=removal";
            t.header = {"time", "kind", "individual"};
            for (const Event& ev : outcome.events)
                t.rows.push_back({ev.time, static_cast<double>(static_cast<int>(ev.kind)),
                                  static_cast<double>(ev.individual)});
            write_csv(cfg.at("events_out").get<std::string>(), t);
        }
        if (cfg.contains("trajectory_out")) {
            CsvTable t;
            t.header = {"time", "s", "e", "i", "r"};
            for (const TrajectoryPoint& p : outcome.trajectory)
                t.rows.push_back({p.time, static_cast<double>(p.s), static_cast<double>(p.e),
                                  static_cast<double>(p.i), static_cast<double>(p.r)});
            write_csv(cfg.at("trajectory_out").get<std::string>(), t);
        }
        maybe_write(*out_path,
                    {{"final_size", "fraction", "major"},
                     {{static_cast<double>(outcome.final_size), fraction,
                       outcome.classification == Classification::major ? 1.0 : 0.0}},
                     ""});
    });
}

void setup_replicate(CLI::App& app, CliState& st) {
    auto* c = app.add_subcommand("replicate", "Replicated simulations with summary statistics");
    auto config_path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    c->add_option("--config", *config_path, "JSON run configuration")->required();
    c->add_option("--out", *out_path, "write summary as CSV");
    c->callback([&st, config_path, out_path] {
        const json cfg = load_json(*config_path);
        check_keys(cfg, {"n", "k", "r0", "latent", "infectious", "seed", "reps", "threads"},
                   "replicate");
        if (!cfg.contains("reps")) throw std::invalid_argument("config: missing key 'reps'");
        const EpidemicParams params = epidemic_from_json(cfg);
        const std::uint64_t seed = seed_from_config(cfg);
        const int reps = cfg.at("reps").get<int>();
        const int threads = cfg.contains("threads") ? cfg.at("threads").get<int>() : 1;
        const ReplicateSummary s = replicate(params, reps, seed, threads);
        st.out << "reps " << s.reps << "\n";
        st.out << "major_count " << s.major_count << "\n";
        st.out << "major_fraction " << fmt(s.major_fraction) << "\n";
        st.out << "major_fraction_se " << fmt(s.major_fraction_se) << "\n";
        st.out << "major_mean_fraction " << fmt(s.major_mean_fraction) << "\n";
        st.out << "major_mean_fraction_se " << fmt(s.major_mean_fraction_se) << "\n";
        maybe_write(*out_path,
                    {{"reps", "major_count", "major_fraction", "major_fraction_se",
                      "major_mean_fraction", "major_mean_fraction_se"},
                     {{static_cast<double>(s.reps), static_cast<double>(s.major_count),
                       s.major_fraction, s.major_fraction_se, s.major_mean_fraction,
                       s.major_mean_fraction_se}},
                     ""});
    });
}

void setup_estimate(CLI::App& app, CliState& st) {
    auto* estimate = app.add_subcommand("estimate", "Parameter estimation from case data");
    estimate->require_subcommand(1);
    auto* c = estimate->add_subcommand("growth", "Growth rate from cumulative case counts");
    auto csv_path = std::make_shared<std::string>();
    auto window_specs = std::make_shared<std::vector<std::string>>();
    auto out_path = std::make_shared<std::string>();
    c->add_option("--csv", *csv_path, "incidence CSV (day,cases or date,cases)")->required();
    c->add_option("--window", *window_specs, "estimation window t0:t1 (repeatable)")
        ->required()
        ->expected(-1);
    c->add_option("--out", *out_path, "write per-window estimates as CSV");
    c->callback([&st, csv_path, window_specs, out_path] {
        const IncidenceSeries series = parse_incidence_csv(*csv_path);
        std::vector<std::pair<int, int>> windows;
        for (const auto& spec : *window_specs) windows.push_back(parse_window(spec));
        CsvTable t;
        t.comment = "final row (-1,-1) holds the mean over windows";
        t.header = {"t0", "t1", "alpha_hat"};
        double sum = 0.0;
        for (const auto& [t0, t1] : windows) {
            const double a = growth_rate_window(series, t0, t1);
            st.out << "window " << t0 << ":" << t1 << " alpha " << fmt(a) << "\n";
            t.rows.push_back({static_cast<double>(t0), static_cast<double>(t1), a});
            sum += a;
        }
        const double mean = sum / static_cast<double>(windows.size());
        st.out << "mean_alpha " << fmt(mean) << "\n";
        t.rows.push_back({-1.0, -1.0, mean});
        maybe_write(*out_path, t);
    });
}

void setup_r0_table(CLI::App& app, CliState& st) {
    auto* c = app.add_subcommand("r0-table",
                                 "r0 estimates over interval-ranged period parameters");
    auto alpha = std::make_shared<double>();
    auto mu_l = std::make_shared<std::string>(), mu_i = std::make_shared<std::string>();
    auto tau_l = std::make_shared<std::string>(), tau_i = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    c->add_option("--alpha", *alpha, "estimated growth rate per day")->required();
    c->add_option("--mu-l", *mu_l, "latent mean range lo:hi (days)")->required();
    c->add_option("--mu-i", *mu_i, "infectious mean range lo:hi (days)")->required();
    c->add_option("--tau-l", *tau_l, "latent cv range lo:hi")->required();
    c->add_option("--tau-i", *tau_i, "infectious cv range lo:hi")->required();
    c->add_option("--out", *out_path, "write table as CSV");
    c->callback([&st, alpha, mu_l, mu_i, tau_l, tau_i, out_path] {
        const ParamIntervals intervals{
            parse_interval(*mu_l, "--mu-l"), parse_interval(*mu_i, "--mu-i"),
            parse_interval(*tau_l, "--tau-l"), parse_interval(*tau_i, "--tau-i")};
        const auto rows = r0_uncertainty_table(*alpha, intervals);
        st.out << "mu_l mu_i tau_l tau_i r0_hat\n";
        CsvTable t;
        t.header = {"mu_l", "mu_i", "tau_l", "tau_i", "r0_hat"};
        for (const auto& r : rows) {
            st.out << fmt(r.mu_l) << " " << fmt(r.mu_i) << " " << fmt(r.tau_l) << " "
                   << fmt(r.tau_i) << " " << fmt(r.r0_hat) << "\n";
            t.rows.push_back({r.mu_l, r.mu_i, r.tau_l, r.tau_i, r.r0_hat});
        }
        maybe_write(*out_path, t);
    });
}

void setup_posterior(CLI::App& app, CliState& st) {
    auto* c = app.add_subcommand("posterior",
                                 "Posterior of the infectious-period cv from a final fraction");
    auto prior_spec = std::make_shared<std::string>();
    auto rho = std::make_shared<double>();
    auto tau_max = std::make_shared<double>(5.0);
    auto step = std::make_shared<double>(1e-3);
    auto out_path = std::make_shared<std::string>();
    c->add_option("--prior", *prior_spec, "prior spec, e.g. exp:0.5")->required();
    c->add_option("--rho", *rho, "observed final fraction in (0,1)")->required();
    c->add_option("--tau-max", *tau_max, "grid upper end (default 5)");
    c->add_option("--step", *step, "grid step (default 0.001)");
    c->add_option("--out", *out_path, "write posterior grid as CSV");
    c->callback([&st, prior_spec, rho, tau_max, step, out_path] {
        const auto [kind, arg] = split_colon(*prior_spec, "--prior");
        if (kind != "exp")
            throw std::invalid_argument("--prior: only 'exp:<mean>' is supported on the CLI");
        const PriorSpec prior = PriorSpec::exponential_prior(parse_double(arg, "--prior"));
        const PosteriorGrid grid = tau_posterior(prior, *rho, GridSpec{*tau_max, *step});
        st.out << "r0_hat " << fmt(grid.r0_hat) << "\n";
        st.out << "posterior_mean " << fmt(posterior_mean(grid)) << "\n";
        if (!out_path->empty()) {
            CsvTable t;
            t.header = {"tau", "prior_cdf", "posterior_cdf", "posterior_density"};
            for (std::size_t i = 0; i < grid.tau.size(); ++i)
                t.rows.push_back({grid.tau[i], grid.prior_cdf[i], grid.posterior_cdf[i],
                                  grid.posterior_density[i]});
            write_csv(*out_path, t);
        }
    });
}

void setup_figures(CLI::App& app, CliState& st) {
    auto* c = app.add_subcommand("figures", "Emit figure data as CSV");
    auto which = std::make_shared<std::string>();
    auto out_dir = std::make_shared<std::string>(".");
    c->add_option("--which", *which, "comma-separated: fig1,fig2,fig3,fig5 or all")->required();
    c->add_option("--out-dir", *out_dir, "output directory (default .)");
    c->callback([&st, which, out_dir] {
        std::vector<std::string> names;
        if (*which == "all") {
            names = {"fig1", "fig2", "fig3", "fig5"};
        } else {
            std::string cur;
            for (char ch : *which + ",") {
                if (ch == ',') {
                    if (!cur.empty()) names.push_back(cur);
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
        }
        if (names.empty()) throw std::invalid_argument("--which: no figures named");
        for (const auto& name : names)
            for (const auto& path : emit_figure_data(name, *out_dir))
                st.out << path << "\n";
    });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stochastic SEIR epidemic toolkit: analytic solvers, exact event-driven "
                 "simulation, and estimation from outbreak data"};
    app.name("epistoch");
    app.require_subcommand(1);
    CliState st{out, err};

    setup_solve(app, st);
    setup_invert(app, st);
    setup_vc(app, st);
    setup_simulate(app, st);
    setup_replicate(app, st);
    setup_estimate(app, st);
    setup_r0_table(app, st);
    setup_posterior(app, st);
    setup_figures(app, st);

    try {
        // CLI11 wants argv-style reversed input when given a vector.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace epistoch
