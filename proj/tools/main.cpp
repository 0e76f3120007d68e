// Command-line front end: model ingestion, per-node time-to-compromise
// metrics, steady-state fixed points with bounds, Monte-Carlo cross-checks,
// and canned reference artifacts.
//
// Exit codes: 0 success, 1 I/O, 2 model/assumption validation, 3
// non-convergence, 4 Monte-Carlo disagreement, 64 usage.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shockmetrics/csvio.hpp"
#include "shockmetrics/errors.hpp"
#include "shockmetrics/model.hpp"
#include "shockmetrics/sim.hpp"
#include "shockmetrics/steady.hpp"
#include "shockmetrics/table1_reference.hpp"
#include "shockmetrics/ttc.hpp"

namespace sm = shockmetrics;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitDisagreement = 4;
constexpr int kExitUsage = 64;

int resolve_threads_flag(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("SHOCKMETRICS_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<int>(v);
    }
    return 0;  // library picks hardware concurrency
}

// Writes to the named file, or stdout when path is "-".
void emit(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream os(path);
    if (!os) throw sm::io_error("cannot open '" + path + "' for writing");
    fn(os);
    os.flush();
    if (!os) throw sm::io_error("write to '" + path + "' failed");
}

// ---------------------------------------------------------------------------
// ttc

struct TtcArgs {
    std::string config, graph, node, out = "-";
    std::optional<double> t_max;
    int points = 201;
    bool bounds = false;
    bool asymptotic = false;
};

int run_ttc(const TtcArgs& a) {
    const sm::AttackDefenseModel m = sm::load_model(a.graph, a.config);
    const int v = m.graph.node_index(a.node);
    std::vector<double> grid;
    if (a.t_max) {
        grid.reserve(a.points);
        for (int i = 0; i < a.points; ++i)
            grid.push_back(*a.t_max * i / (a.points - 1));
    } else {
        grid = sm::default_time_grid(m, v, a.points);
    }
    const sm::TtcResult r = sm::compute_ttc(m, v, grid, a.bounds, a.asymptotic);
    emit(a.out, [&](std::ostream& os) { sm::write_ttc_csv(os, r); });
    if (a.out != "-") {
        std::string scalars = a.out;
        if (scalars.size() > 4 && scalars.substr(scalars.size() - 4) == ".csv")
            scalars.resize(scalars.size() - 4);
        scalars += ".scalars.csv";
        emit(scalars, [&](std::ostream& os) { sm::write_ttc_scalars_csv(os, r); });
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// steady

struct SteadyArgs {
    std::string config, graph, out = "-";
    bool bounds = false;
    int threads = 0;
};

int run_steady(const SteadyArgs& a) {
    const sm::AttackDefenseModel m = sm::load_model(a.graph, a.config);
    const sm::SteadyStateResult r = sm::solve_steady_state(m, resolve_threads_flag(a.threads));
    std::optional<sm::SteadyStateBounds> bounds;
    if (a.bounds) bounds = sm::steady_state_bounds(m);
    emit(a.out, [&](std::ostream& os) {
        if (!r.converged) {
            double gap = 0.0;
            for (std::size_t i = 0; i < r.bracket_lo.size(); ++i)
                gap = std::max(gap, r.bracket_hi[i] - r.bracket_lo[i]);
            os << "# non-convergence: iterations=" << r.iterations
               << " residual=" << sm::format_number(r.residual)
               << " max bracket gap=" << sm::format_number(gap) << "\n";
        }
        sm::write_steady_csv(os, m.graph, r, bounds ? &*bounds : nullptr);
    });
    return r.converged ? kExitOk : kExitNonConvergence;
}

// ---------------------------------------------------------------------------
// regular (homogeneous k-regular shortcut, scalar fixed point)

struct RegularArgs {
    int k = 5;
    std::vector<double> c = {2.0};
    sm::RegularGraphParams params;
    std::string out = "-";
};

int run_regular(const RegularArgs& a) {
    std::vector<std::tuple<double, int, sm::RegularCell>> rows;
    for (double c : a.c) {
        sm::RegularGraphParams pr = a.params;
        pr.c1 = pr.c2 = c;
        rows.emplace_back(c, a.k, sm::regular_graph_steady_state(a.k, pr));
    }
    emit(a.out, [&](std::ostream& os) { sm::write_regular_cells_csv(os, rows); });
    return kExitOk;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateArgs {
    std::string config, graph;
};

int run_validate(const ValidateArgs& a) {
    const sm::AttackDefenseModel m = sm::load_model(a.graph, a.config);
    bool all_ok = true;
    for (sm::Assumption which : {sm::Assumption::A2, sm::Assumption::A4, sm::Assumption::NBU,
                                 sm::Assumption::NBUE}) {
        const sm::AssumptionReport rep = sm::validate_assumptions(m, which);
        std::cerr << sm::assumption_name(rep.which) << ": " << (rep.passed ? "pass" : "FAIL")
                  << "\n";
        for (const std::string& f : rep.failures) std::cerr << "  " << f << "\n";
        for (const std::string& n : rep.notes) std::cerr << "  note: " << n << "\n";
        all_ok = all_ok && rep.passed;
    }
    return all_ok ? kExitOk : kExitValidation;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
    std::string config, graph, node, out = "-";
    std::string mode = "node-mixed";
    int reps = 10000;
    std::uint64_t seed = 0;
    double horizon = 0.0;
    double warmup = 0.25;
    std::string refresh = "at-recovery";
    bool compare = false;
    std::optional<double> r_env, theta_env;
    int threads = 0;
};

int run_simulate(const SimulateArgs& a) {
    const sm::AttackDefenseModel m = sm::load_model(a.graph, a.config);
    sm::SimConfig cfg;
    cfg.replications = a.reps;
    cfg.seed = a.seed;
    cfg.horizon = a.horizon;
    cfg.warmup_fraction = a.warmup;
    cfg.threads = resolve_threads_flag(a.threads);
    cfg.env_refresh =
        a.refresh == "dynamic" ? sm::EnvRefresh::Dynamic : sm::EnvRefresh::AtRecovery;

    if (a.mode == "network") {
        cfg.mode = sm::SimMode::Network;
        const sm::SimResult r = sm::simulate_network(m, cfg);
        emit(a.out, [&](std::ostream& os) { sm::write_sim_occupancy_csv(os, m.graph, r); });
        if (a.out != "-")
            emit(a.out + ".series.csv",
                 [&](std::ostream& os) { sm::write_sim_fraction_csv(os, r); });
        if (a.compare) {
            const sm::SteadyStateResult ss = sm::solve_steady_state(m, cfg.threads);
            double max_gap = 0.0;
            for (int v = 0; v < m.graph.size(); ++v)
                max_gap = std::max(max_gap, std::fabs(r.occupancy[v] - ss.p[v]));
            std::cerr << "max |occupancy - fixed point| = " << max_gap << "\n";
            if (max_gap > 0.05) {
                std::cerr << "network occupancy disagrees with the mean-field fixed point "
                             "beyond 0.05\n";
                return kExitDisagreement;
            }
        }
        return kExitOk;
    }

    const int v = m.graph.node_index(a.node);
    sm::SimResult r;
    if (a.mode == "node-frozen") {
        cfg.mode = sm::SimMode::NodeFrozenEnv;
        r = sm::simulate_ttc_frozen(m, v, *a.r_env, *a.theta_env, cfg);
    } else {
        cfg.mode = sm::SimMode::NodeMixedEnv;
        r = sm::simulate_ttc_mixed(m, v, cfg);
    }
    emit(a.out, [&](std::ostream& os) { sm::write_sim_sample_csv(os, r); });

    if (a.compare) {
        std::function<double(double)> cdf;
        if (a.mode == "node-frozen") {
            const double rr = *a.r_env, th = *a.theta_env;
            cdf = [&m, v, rr, th](double t) {
                return 1.0 - sm::ttc_survival_given_env(m, v, rr, th, t);
            };
        } else {
            cdf = [&m, v](double t) { return sm::ttc_cdf(m, v, {t})[0]; };
        }
        const double n = static_cast<double>(r.empirical_cdf.size());
        const double d = sm::ks_statistic(r.empirical_cdf, cdf);
        const double crit = sm::ks_critical(n);
        std::cerr << "KS statistic = " << d << " (critical " << crit << " at n=" << n
                  << ")\n";
        if (d >= crit) {
            std::cerr << "empirical law disagrees with the analytic distribution\n";
            return kExitDisagreement;
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// reproduce

// Homogeneous benchmark family used by the curve artifacts: Weibull
// magnitudes (shapes alpha, gamma) scaled by the environment, Gamma
// inter-arrivals (shapes beta, lambda) with environment-proportional rates,
// Binomial(deg, p) local environment, Uniform(a, b) sustainment.
sm::AttackDefenseModel curve_model(int deg, double p, double c, double alpha, double beta,
                                  double gamma, double lambda, double a, double b) {
    std::ostringstream cfg;
    cfg << "{"
        << "\"families\":{"
        << "\"push_magnitude\":{\"family\":\"weibull\",\"shape\":" << alpha
        << ",\"scale\":1,\"env_link\":\"scale_times_env\"},"
        << "\"push_interarrival\":{\"family\":\"gamma\",\"shape\":" << beta
        << ",\"rate\":1,\"env_link\":\"rate_times_env\"},"
        << "\"pull_magnitude\":{\"family\":\"weibull\",\"shape\":" << gamma
        << ",\"scale\":1,\"env_link\":\"scale_times_env\"},"
        << "\"pull_interarrival\":{\"family\":\"gamma\",\"shape\":" << lambda
        << ",\"rate\":1,\"env_link\":\"rate_times_env\"}},"
        << "\"node_defaults\":{\"c1\":" << c << ",\"c2\":" << c << ",\"recovery_mean\":4,"
        << "\"local_env\":{\"family\":\"binomial\",\"prob\":" << p << "},"
        << "\"global_env\":{\"family\":\"uniform\",\"a\":" << a << ",\"b\":" << b << "}}}";
    const sm::ModelConfig mc = sm::parse_model_config(cfg.str(), "reproduce");
    return sm::build_model(sm::make_regular(deg, deg + 1), mc);
}

void write_wide_csv(const std::string& path, const std::string& header,
                    const std::vector<double>& x,
                    const std::vector<std::vector<double>>& cols) {
    emit(path, [&](std::ostream& os) {
        os << header << "\n";
        for (std::size_t i = 0; i < x.size(); ++i) {
            os << sm::format_number(x[i]);
            for (const auto& col : cols) os << ',' << sm::format_number(col[i]);
            os << '\n';
        }
    });
}

int reproduce_fig2(const std::string& dir) {
    const double alpha = 2, beta = 2, gamma = 1, lambda = 2.5, a = 1, b = 2;
    // (a) fixed degree 8, environment activity p swept
    {
        auto m5 = curve_model(8, 0.5, 2, alpha, beta, gamma, lambda, a, b);
        const auto grid = sm::default_time_grid(m5, 0);
        std::vector<std::vector<double>> cols;
        for (double p : {0.2, 0.5, 0.8}) {
            auto m = curve_model(8, p, 2, alpha, beta, gamma, lambda, a, b);
            cols.push_back(sm::ttc_cdf(m, 0, grid));
        }
        write_wide_csv(dir + "/fig2a.csv", "t,q_p02,q_p05,q_p08", grid, cols);
    }
    // (b) fixed p = .5, degree swept
    {
        auto m8 = curve_model(8, 0.5, 2, alpha, beta, gamma, lambda, a, b);
        const auto grid = sm::default_time_grid(m8, 0);
        std::vector<std::vector<double>> cols;
        for (int deg : {4, 8, 12}) {
            auto m = curve_model(deg, 0.5, 2, alpha, beta, gamma, lambda, a, b);
            cols.push_back(sm::ttc_cdf(m, 0, grid));
        }
        write_wide_csv(dir + "/fig2b.csv", "t,q_deg4,q_deg8,q_deg12", grid, cols);
    }
    // (c) exact law against its closed-form upper bound at two thresholds
    {
        auto m2 = curve_model(8, 0.5, 2, alpha, beta, gamma, lambda, a, b);
        auto m5 = curve_model(8, 0.5, 5, alpha, beta, gamma, lambda, a, b);
        const auto grid = sm::default_time_grid(m5, 0);
        std::vector<std::vector<double>> cols;
        cols.push_back(sm::ttc_cdf(m2, 0, grid));
        cols.push_back(sm::ttc_cdf_upper(m2, 0, grid));
        cols.push_back(sm::ttc_cdf(m5, 0, grid));
        cols.push_back(sm::ttc_cdf_upper(m5, 0, grid));
        write_wide_csv(dir + "/fig2c.csv", "t,q_c2,q_upper_c2,q_c5,q_upper_c5", grid, cols);
    }
    return kExitOk;
}

int reproduce_fig3(const std::string& dir) {
    const double alpha = 2, beta = 2, gamma = 1, lambda = 2.5, a = 1, b = 2;
    std::vector<double> cs;
    for (double c = 1.0; c <= 10.0 + 1e-9; c += 0.25) cs.push_back(c);
    std::vector<std::vector<double>> cols(4);
    for (double c : cs) {
        int i = 0;
        for (double p : {0.2, 0.8}) {
            auto m = curve_model(8, p, c, alpha, beta, gamma, lambda, a, b);
            cols[i++].push_back(sm::expected_ttc(m, 0));
            cols[i++].push_back(sm::expected_ttc_lower_iid(m, 0));
        }
    }
    write_wide_csv(dir + "/fig3.csv", "c,expected_p02,lower_p02,expected_p08,lower_p08", cs,
                   cols);
    return kExitOk;
}

int reproduce_fig4(const std::string& dir) {
    const double alpha = 2, beta = 2, gamma = 1, lambda = 2.5, a = 1, b = 2;
    auto m2 = curve_model(8, 0.5, 2, alpha, beta, gamma, lambda, a, b);
    const auto grid = sm::default_time_grid(m2, 0);
    std::vector<std::vector<double>> cols;
    std::string header = "t";
    for (double c : {2.0, 5.0, 8.0, 12.0}) {
        auto m = curve_model(8, 0.5, c, alpha, beta, gamma, lambda, a, b);
        cols.push_back(sm::ttc_cdf(m, 0, grid));
        auto approx = sm::ttc_cdf_asymptotic(m, 0, grid);
        for (double& x : approx) x = std::clamp(x, 0.0, 1.0);
        cols.push_back(approx);
        const std::string tag = std::to_string(static_cast<int>(c));
        header += ",q_c" + tag + ",q_approx_c" + tag;
    }
    write_wide_csv(dir + "/fig4.csv", header, grid, cols);
    return kExitOk;
}

int reproduce_table1(const std::string& dir) {
    std::vector<std::tuple<double, int, sm::RegularCell>> rows;
    double max_dp = 0.0, max_db = 0.0;
    std::ostringstream diff;
    diff << "c,k,p,p_ref,p_err,p_lower,p_lower_ref,p_lower_err,p_upper,p_upper_ref,"
            "p_upper_err\n";
    for (const sm::ReferenceCell& cell : sm::kRegularReferenceCells) {
        sm::RegularGraphParams pr;
        pr.c1 = pr.c2 = cell.c;
        const sm::RegularCell got = sm::regular_graph_steady_state(cell.k, pr);
        rows.emplace_back(cell.c, cell.k, got);
        const double dp = std::fabs(got.p - cell.p);
        const double dlo = std::fabs(got.p_lower - cell.p_lower);
        const double dup = std::fabs(got.p_upper - cell.p_upper);
        max_dp = std::max(max_dp, dp);
        max_db = std::max(max_db, std::max(dlo, dup));
        diff << sm::format_number(cell.c) << ',' << cell.k << ','
             << sm::format_number(got.p) << ',' << sm::format_number(cell.p) << ','
             << sm::format_number(dp) << ',' << sm::format_number(got.p_lower) << ','
             << sm::format_number(cell.p_lower) << ',' << sm::format_number(dlo) << ','
             << sm::format_number(got.p_upper) << ',' << sm::format_number(cell.p_upper)
             << ',' << sm::format_number(dup) << '\n';
    }
    emit(dir + "/table1.csv",
         [&](std::ostream& os) { sm::write_regular_cells_csv(os, rows); });
    emit(dir + "/table1_diff.csv", [&](std::ostream& os) {
        os << "# max |p - ref| = " << sm::format_number(max_dp) << "\n";
        os << "# max bound error = " << sm::format_number(max_db) << "\n";
        os << diff.str();
    });
    std::cerr << "table1: max fixed-point error " << max_dp << ", max bound error "
              << max_db << "\n";
    return kExitOk;
}

int run_reproduce(const std::string& artifact, const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw sm::io_error("cannot create output directory '" + out_dir + "'");
    if (artifact == "fig2") return reproduce_fig2(out_dir);
    if (artifact == "fig3") return reproduce_fig3(out_dir);
    if (artifact == "fig4") return reproduce_fig4(out_dir);
    return reproduce_table1(out_dir);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochastic security metrics for attack-defense graphs"};
    app.require_subcommand(1);

    TtcArgs ttc;
    auto* c_ttc = app.add_subcommand("ttc", "Per-node time-to-compromise distribution");
    c_ttc->add_option("--config", ttc.config, "Model configuration JSON")->required();
    c_ttc->add_option("--graph", ttc.graph,
                      "Graph file or regular:k=K,n=N (overrides graph_ref)");
    c_ttc->add_option("--node", ttc.node, "Node identifier")->required();
    c_ttc->add_option("--t-max", ttc.t_max, "Grid endpoint (default: auto)")
        ->check(CLI::PositiveNumber);
    c_ttc->add_option("--points", ttc.points, "Grid size")->check(CLI::Range(2, 100000));
    c_ttc->add_flag("--bounds", ttc.bounds, "Emit the closed-form upper bound column");
    c_ttc->add_flag("--asymptotic", ttc.asymptotic,
                    "Emit the large-threshold approximation column");
    c_ttc->add_option("--out", ttc.out, "Output CSV path or -");

    SteadyArgs steady;
    auto* c_steady =
        app.add_subcommand("steady", "Steady-state compromise probability fixed point");
    c_steady->add_option("--config", steady.config, "Model configuration JSON")->required();
    c_steady->add_option("--graph", steady.graph,
                         "Graph file or regular:k=K,n=N (overrides graph_ref)");
    c_steady->add_flag("--bounds", steady.bounds, "Emit closed-form bound columns");
    c_steady->add_option("--threads", steady.threads, "Worker cap (0 = auto)");
    c_steady->add_option("--out", steady.out, "Output CSV path or -");

    RegularArgs reg;
    auto* c_reg = app.add_subcommand(
        "regular", "Homogeneous k-regular fixed point via scalar bisection");
    c_reg->add_option("--k", reg.k, "Degree")->required()->check(CLI::PositiveNumber);
    c_reg->add_option("--c", reg.c, "Threshold values (c1 = c2 = c)")
        ->check(CLI::PositiveNumber);
    c_reg->add_option("--alpha", reg.params.alpha, "Push magnitude Weibull shape");
    c_reg->add_option("--beta", reg.params.beta, "Push inter-arrival Gamma shape");
    c_reg->add_option("--gamma", reg.params.gamma, "Pull magnitude Weibull shape");
    c_reg->add_option("--lambda", reg.params.lambda, "Pull inter-arrival Gamma shape");
    c_reg->add_option("--theta", reg.params.theta, "Sustainment level");
    c_reg->add_option("--recovery-mean", reg.params.recovery_mean, "Mean recovery time");
    c_reg->add_option("--out", reg.out, "Output CSV path or -");

    ValidateArgs val;
    auto* c_val = app.add_subcommand("validate", "Check model assumptions");
    c_val->add_option("--config", val.config, "Model configuration JSON")->required();
    c_val->add_option("--graph", val.graph,
                      "Graph file or regular:k=K,n=N (overrides graph_ref)");

    SimulateArgs simargs;
    auto* c_sim = app.add_subcommand("simulate", "Monte-Carlo verification");
    c_sim->add_option("--config", simargs.config, "Model configuration JSON")->required();
    c_sim->add_option("--graph", simargs.graph,
                      "Graph file or regular:k=K,n=N (overrides graph_ref)");
    c_sim->add_option("--mode", simargs.mode, "node-frozen, node-mixed, or network")
        ->check(CLI::IsMember({"node-frozen", "node-mixed", "network"}));
    c_sim->add_option("--node", simargs.node, "Target node (node modes)");
    c_sim->add_option("--reps", simargs.reps, "Replications")->check(CLI::PositiveNumber);
    c_sim->add_option("--seed", simargs.seed, "Random seed");
    c_sim->add_option("--horizon", simargs.horizon, "Simulated time (network mode)");
    c_sim->add_option("--warmup", simargs.warmup,
                      "Warm-up fraction discarded from occupancy (network mode)");
    c_sim->add_option("--refresh", simargs.refresh,
                      "Environment refresh policy: at-recovery or dynamic")
        ->check(CLI::IsMember({"at-recovery", "dynamic"}));
    c_sim->add_option("--r", simargs.r_env, "Frozen local environment (node-frozen)");
    c_sim->add_option("--theta", simargs.theta_env,
                      "Frozen sustainment level (node-frozen)");
    c_sim->add_flag("--compare", simargs.compare,
                    "Cross-check against the analytic law (exit 4 on disagreement)");
    c_sim->add_option("--threads", simargs.threads, "Worker cap (0 = auto)");
    c_sim->add_option("--out", simargs.out, "Output CSV path or -");

    std::string artifact, repro_out = ".";
    auto* c_rep = app.add_subcommand("reproduce", "Emit reference artifacts");
    c_rep->add_option("--artifact", artifact, "table1, fig2, fig3, or fig4")
        ->required()
        ->check(CLI::IsMember({"table1", "fig2", "fig3", "fig4"}));
    c_rep->add_option("--out", repro_out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*c_ttc) return run_ttc(ttc);
        if (*c_steady) return run_steady(steady);
        if (*c_reg) return run_regular(reg);
        if (*c_val) return run_validate(val);
        if (*c_sim) {
            if (simargs.mode != "network" && simargs.node.empty()) {
                std::cerr << "simulate: --node is required for node modes\n";
                return kExitUsage;
            }
            if (simargs.mode == "node-frozen" && (!simargs.r_env || !simargs.theta_env)) {
                std::cerr << "simulate: node-frozen mode requires --r and --theta\n";
                return kExitUsage;
            }
            if (simargs.mode == "network" && !(simargs.horizon > 0.0)) {
                std::cerr << "simulate: network mode requires --horizon > 0\n";
                return kExitUsage;
            }
            return run_simulate(simargs);
        }
        if (*c_rep) return run_reproduce(artifact, repro_out);
    } catch (const sm::io_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const sm::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const sm::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const sm::bracket_error& e) {
        std::cerr << "non-convergence: " << e.what() << " (residuals "
                  << e.residual_lower << ", " << e.residual_upper << ")\n";
        return kExitNonConvergence;
    } catch (const sm::non_convergence& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const sm::cap_hit& e) {
        std::cerr << "simulation cap: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
