// Acceptance gate: one pass/fail line per shipped guarantee, exit code equal
// to the number of failures.  Tolerances are pinned here on purpose — loosening
// one is a contract change, not a tweak.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "shockmetrics/model.hpp"
#include "shockmetrics/quadrature.hpp"
#include "shockmetrics/renewal.hpp"
#include "shockmetrics/rng.hpp"
#include "shockmetrics/sim.hpp"
#include "shockmetrics/steady.hpp"
#include "shockmetrics/table1_reference.hpp"
#include "shockmetrics/ttc.hpp"

using namespace shockmetrics;
using clk = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(clk::time_point t0) {
    return std::chrono::duration<double>(clk::now() - t0).count();
}

void report(bool ok, const std::string& name, const std::string& detail) {
    std::printf("[%s] %s — %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double round2(double x) { return std::round(x * 100.0) / 100.0; }

// The heterogeneous-environment curve family: Weibull(2) push magnitudes and
// Gamma(2) push inter-arrivals driven by the compromised-neighbor count,
// exponential pull magnitudes scaled by a U[1,2] sustainment level, Gamma(2.5)
// pull inter-arrivals.
AttackDefenseModel curve_model(int deg, double p, double c) {
    std::ostringstream cfg;
    cfg << "{\"families\":{"
        << "\"push_magnitude\":{\"family\":\"weibull\",\"shape\":2,\"scale\":1,"
           "\"env_link\":\"scale_times_env\"},"
        << "\"push_interarrival\":{\"family\":\"gamma\",\"shape\":2,\"rate\":1,"
           "\"env_link\":\"rate_times_env\"},"
        << "\"pull_magnitude\":{\"family\":\"weibull\",\"shape\":1,\"scale\":1,"
           "\"env_link\":\"scale_times_env\"},"
        << "\"pull_interarrival\":{\"family\":\"gamma\",\"shape\":2.5,\"rate\":1,"
           "\"env_link\":\"rate_times_env\"}},"
        << "\"node_defaults\":{\"c1\":" << c << ",\"c2\":" << c << ",\"recovery_mean\":4,"
        << "\"local_env\":{\"family\":\"binomial\",\"prob\":" << p << "},"
        << "\"global_env\":{\"family\":\"uniform\",\"a\":1,\"b\":2}}}";
    return build_model(make_regular(deg, deg + 1), parse_model_config(cfg.str(), "curve"));
}

// The homogeneous benchmark family behind the published 80-cell table:
// Gamma(3.5) push / Gamma(1.5) pull inter-arrivals, sustainment frozen at 4.
AttackDefenseModel benchmark_network_model(const AttackDefenseGraph& g, double c) {
    std::ostringstream cfg;
    cfg << "{\"families\":{"
        << "\"push_magnitude\":{\"family\":\"weibull\",\"shape\":2,\"scale\":1,"
           "\"env_link\":\"scale_times_env\"},"
        << "\"push_interarrival\":{\"family\":\"gamma\",\"shape\":3.5,\"rate\":1,"
           "\"env_link\":\"rate_times_env\"},"
        << "\"pull_magnitude\":{\"family\":\"weibull\",\"shape\":1,\"scale\":1,"
           "\"env_link\":\"scale_times_env\"},"
        << "\"pull_interarrival\":{\"family\":\"gamma\",\"shape\":1.5,\"rate\":1,"
           "\"env_link\":\"rate_times_env\"}},"
        << "\"node_defaults\":{\"c1\":" << c << ",\"c2\":" << c << ",\"recovery_mean\":4,"
        << "\"local_env\":{\"family\":\"binomial\",\"prob\":0.5},"
        << "\"global_env\":{\"family\":\"dirac\",\"atom\":4}}}";
    return build_model(g, parse_model_config(cfg.str(), "benchmark"));
}

struct CurveConfig {
    int deg;
    double p, c;
};

// Configurations spanning defense capability 1..10, neighbor-compromise
// probability {.2, .5, .8}, and degree {4, 8, 12}.
const std::vector<CurveConfig> kCurveConfigs = {
    {4, 0.2, 1.0}, {8, 0.2, 2.0},  {12, 0.2, 3.0}, {4, 0.5, 2.0},
    {8, 0.5, 2.0}, {8, 0.5, 5.0},  {12, 0.5, 4.0}, {4, 0.8, 3.0},
    {8, 0.8, 6.0}, {12, 0.8, 8.0}, {12, 0.8, 10.0}, {8, 0.8, 10.0},
};

std::string config_label(const CurveConfig& c) {
    std::ostringstream os;
    os << "(deg=" << c.deg << ", p=" << c.p << ", c=" << c.c << ")";
    return os.str();
}

// Survival of the closed-form upper bound: the product of the two streams'
// mixed dominating-process factors.
double upper_bound_survival(const NodeStreams& ns, double t) {
    double push = 0.0, pull = 0.0;
    for (const auto& sp : ns.push) push += sp.weight * stream_pgf_nbu_bound(sp, t);
    for (const auto& sp : ns.pull) pull += sp.weight * stream_pgf_nbu_bound(sp, t);
    return push * pull;
}

// Piecewise-linear interpolant of the analytic compromise-time cdf, dense
// enough that interpolation error is far below the test's resolution.
struct CdfInterpolant {
    std::vector<double> t, q;

    double operator()(double x) const {
        if (x <= t.front()) return q.front();
        if (x >= t.back()) return q.back();
        const auto it = std::upper_bound(t.begin(), t.end(), x);
        const std::size_t i = it - t.begin();
        const double w = (x - t[i - 1]) / (t[i] - t[i - 1]);
        return q[i - 1] + w * (q[i] - q[i - 1]);
    }
};

CdfInterpolant dense_cdf(const AttackDefenseModel& m, int v, int points) {
    // Extend the time horizon until the remaining reachable mass is tiny, so
    // the flat extrapolation beyond the grid cannot distort the comparison.
    const auto ns = node_streams(m, v);
    const double limit = 1.0 - ns.immortal_mass;
    double t_max = 1.0;
    for (int i = 0; i < 60; ++i) {
        const double q = ttc_cdf(m, v, {t_max})[0];
        if (limit - q <= 2e-4 * std::max(limit, 1e-12)) break;
        t_max *= 2.0;
    }
    // Mixed-environment cdfs have both a steep head (strong-environment draws
    // compromise almost immediately) and a long tail (weak draws), so a grid
    // uniform in time wastes resolution.  Instead place the nodes at equal
    // probability increments: for a monotone cdf, linear interpolation through
    // points spaced dq apart in value is off by at most dq anywhere,
    // independent of the cdf's shape.  A coarse quadratically-spaced pass maps
    // the shape, then the quantile levels are inverted through it.
    const int coarse_n = 513;
    std::vector<double> ct(coarse_n);
    for (int j = 0; j < coarse_n; ++j) {
        const double u = static_cast<double>(j) / (coarse_n - 1);
        ct[j] = t_max * u * u;
    }
    const std::vector<double> cq = ttc_cdf(m, v, ct);
    CdfInterpolant f;
    f.t.reserve(points + 1);
    f.t.push_back(0.0);
    const double q_top = cq.back();
    std::size_t j = 1;
    for (int k = 1; k < points; ++k) {
        const double u = q_top * static_cast<double>(k) / (points - 1);
        while (j + 1 < cq.size() && cq[j] < u) ++j;
        const double q0 = cq[j - 1], q1 = cq[j];
        double tk = ct[j];
        if (q1 > q0) {
            const double w = std::clamp((u - q0) / (q1 - q0), 0.0, 1.0);
            tk = ct[j - 1] + w * (ct[j] - ct[j - 1]);
        }
        if (tk > f.t.back()) f.t.push_back(tk);
    }
    if (f.t.back() < t_max) f.t.push_back(t_max);
    f.q = ttc_cdf(m, v, f.t);
    return f;
}

// --- criteria ----------------------------------------------------------------

void criterion_bound_table(const std::vector<RegularCell>& cells, double elapsed) {
    double max_err = 0.0;
    for (std::size_t i = 0; i < kRegularReferenceCellCount; ++i) {
        const auto& ref = kRegularReferenceCells[i];
        max_err = std::max(max_err, std::fabs(cells[i].p_lower - ref.p_lower));
        max_err = std::max(max_err, std::fabs(cells[i].p_upper - ref.p_upper));
    }
    std::ostringstream os;
    os << "max bound deviation " << max_err << " over 80 cells (limit 0.01, published "
       << "values round to 2 decimals) in " << elapsed << "s (limit 1s)";
    report(max_err <= 0.01 && elapsed < 1.0, "closed-form-bounds-table", os.str());
}

void criterion_fixed_point_table(const std::vector<RegularCell>& cells, double elapsed) {
    double max_err = 0.0;
    for (std::size_t i = 0; i < kRegularReferenceCellCount; ++i)
        max_err = std::max(max_err,
                           std::fabs(cells[i].p - kRegularReferenceCells[i].p));
    std::ostringstream os;
    os << "max fixed-point deviation " << max_err << " over 80 cells (limit 0.02) in "
       << elapsed << "s (limit 60s)";
    report(max_err <= 0.02 && elapsed < 60.0, "fixed-point-table", os.str());
}

void criterion_spot_cells() {
    RegularGraphParams easy;  // c1 = c2 = 2
    const auto c52 = regular_graph_steady_state(5, easy);
    RegularGraphParams hard;
    hard.c1 = hard.c2 = 9.0;
    const auto c109 = regular_graph_steady_state(10, hard);
    const bool ok52 =
        round2(c52.p_lower) == 0.87 && round2(c52.p_upper) == 0.92;
    const double lo109 = round2(c109.p_lower);
    const bool ok109 = lo109 == 0.52 || lo109 == 0.53;
    std::ostringstream os;
    os << "(k=5,c=2) lower " << c52.p_lower << " upper " << c52.p_upper
       << " (want 0.87 / 0.92 at 2 decimals); (k=10,c=9) lower " << c109.p_lower
       << " (want 0.52 or 0.53)";
    report(ok52 && ok109, "spot-cells", os.str());
}

void criterion_dominance() {
    double worst = -1.0;
    std::string worst_at;
    for (const auto& cc : kCurveConfigs) {
        const auto m = curve_model(cc.deg, cc.p, cc.c);
        const auto grid = default_time_grid(m, 0);  // 201 points
        const auto q = ttc_cdf(m, 0, grid);
        const auto qu = ttc_cdf_upper(m, 0, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double excess = q[i] - qu[i];
            if (excess > worst) {
                worst = excess;
                worst_at = config_label(cc);
            }
        }
    }
    std::ostringstream os;
    os << "max (q - q_upper) = " << worst << " at " << worst_at << " across "
       << kCurveConfigs.size() << " configurations x 201 grid points (limit 1e-9)";
    report(worst <= 1e-9, "upper-bound-dominance", os.str());
}

void criterion_ordering_chain() {
    int violations = 0;
    std::vector<std::string> examples;
    for (const auto& cc : kCurveConfigs) {
        const auto m = curve_model(cc.deg, cc.p, cc.c);
        const double et = expected_ttc(m, 0);
        const auto ns = node_streams(m, 0);
        const double mid = integrate_survival(
            [&](double t) { return upper_bound_survival(ns, t); }, 1e-8);
        const double lo = expected_ttc_lower_iid(m, 0);
        const bool ok = et + 1e-6 >= mid && mid + 1e-6 >= lo;
        if (!ok) {
            ++violations;
            if (examples.size() < 3) {
                std::ostringstream ex;
                ex << config_label(cc) << " E[T]=" << et << " int(1-q_upper)=" << mid
                   << " E[T]_lower=" << lo;
                examples.push_back(ex.str());
            }
        }
    }
    std::ostringstream os;
    os << violations << " of " << kCurveConfigs.size()
       << " configurations violate E[T] >= int(1-q_upper) >= E[T]_lower (tol 1e-6)";
    for (const auto& ex : examples) os << "; e.g. " << ex;
    os << " — the middle term integrates the dominating-process survival, whose decay "
          "rate exceeds the true one by the inter-arrival shape factor, so it drops "
          "below the renewal-reward lower bound whenever that shape exceeds 1; the "
          "chain as stated holds only for exponential inter-arrivals";
    report(violations == 0, "expectation-ordering-chain", os.str());
}

void criterion_asymptotic_convergence() {
    const auto m2 = curve_model(8, 0.5, 2.0);
    const auto grid = default_time_grid(m2, 0);
    std::vector<double> sups;
    for (double c : {2.0, 5.0, 8.0, 12.0}) {
        const auto m = curve_model(8, 0.5, c);
        const auto q = ttc_cdf(m, 0, grid);
        const auto qa = ttc_cdf_asymptotic(m, 0, grid);
        double sup = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            sup = std::max(sup, std::fabs(qa[i] - q[i]));
        sups.push_back(sup);
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < sups.size(); ++i) decreasing &= sups[i] < sups[i - 1];
    std::ostringstream os;
    os << "sup|q_asymptotic - q| over c in {2,5,8,12}: " << sups[0] << ", " << sups[1]
       << ", " << sups[2] << ", " << sups[3]
       << " (must be strictly decreasing; final < 0.02)";
    report(decreasing && sups.back() < 0.02, "large-defense-asymptotic-convergence",
           os.str());
}

void criterion_simulation_agreement() {
    // Randomized but reproducible configuration draw; this seed's five draws
    // happen to cover every degree and every neighbor-compromise probability.
    std::mt19937_64 pick(20240822);
    const int degs[] = {4, 8, 12};
    const double ps[] = {0.2, 0.5, 0.8};
    bool all_ok = true;
    std::ostringstream os;
    for (int i = 0; i < 5; ++i) {
        const int deg = degs[pick() % 3];
        const double p = ps[pick() % 3];
        // Defense capability drawn from [1, 5]: the per-attack win probability
        // sets the simulation cost (~exp(c) attacks per replication on the
        // pull stream), and the per-configuration budget is 30 seconds.
        const double c =
            1.0 + 4.0 * (static_cast<double>(pick() >> 11) / 9007199254740992.0);
        const auto t0 = clk::now();
        const auto m = curve_model(deg, p, c);

        SimConfig sc;
        sc.replications = 100000;
        sc.seed = 1000 + i;
        sc.mode = SimMode::NodeMixedEnv;
        const auto sim = simulate_ttc_mixed(m, 0, sc);

        const auto cdf = dense_cdf(m, 0, 4001);
        const double d = ks_statistic(sim.empirical_cdf,
                                      [&](double t) { return cdf(t); });
        const double crit = ks_critical(100000.0);
        const double et = expected_ttc(m, 0);
        const double mean_gap = std::fabs(sim.mean_T - et);
        const double elapsed = seconds_since(t0);
        const bool ok =
            d < crit && mean_gap <= 3.0 * sim.stderr_T && elapsed < 30.0;
        all_ok &= ok;
        if (i) os << "; ";
        os << "(deg=" << deg << ",p=" << p << ",c=" << c << "): KS " << d << " vs "
           << crit << ", |mean-E[T]|/se " << mean_gap / sim.stderr_T << ", " << elapsed
           << "s";
    }
    report(all_ok, "simulation-oracle-agreement",
           "5 reproducible random configurations, 1e5 replications each, KS at "
           "significance 0.01, mean within 3 standard errors, under 30s each: " +
               os.str());
}

void criterion_exponential_closed_forms() {
    double worst_pgf = 0.0;
    for (double rho : {0.3, 1.0, 2.5}) {
        CountingProcess cp{DistributionSpec::exponential(rho)};
        for (double s : {0.0, 0.25, 0.7, 0.95}) {
            for (double t : {0.1, 1.0, 4.0, 20.0}) {
                worst_pgf = std::max(worst_pgf,
                                     std::fabs(count_pgf(cp, s, t) -
                                               std::exp(-rho * t * (1.0 - s))));
            }
        }
    }

    // Single-stream model: pull magnitudes capped below the threshold, push a
    // rate-1 exponential stream with success probability exp(-1).
    const std::string single = R"({
  "families": {
    "push_magnitude": {"family": "weibull", "shape": 2, "scale": 1, "env_link": "scale_times_env"},
    "push_interarrival": {"family": "exponential", "rate": 1, "env_link": "rate_times_env"},
    "pull_magnitude": {"family": "uniform", "a": 0, "b": 0.5},
    "pull_interarrival": {"family": "exponential", "rate": 1}
  },
  "node_defaults": {
    "c1": 1, "c2": 1, "recovery_mean": 1,
    "local_env": {"family": "dirac", "atom": 1},
    "global_env": {"family": "dirac", "atom": 1}
  }
})";
    const auto m = build_model(make_regular(2, 8), parse_model_config(single, "single"));
    const double et = expected_ttc(m, 0);
    const double want = 1.0 / std::exp(-1.0);  // mean inter-arrival / win probability
    const double et_gap = std::fabs(et - want);

    std::ostringstream os;
    os << "max pgf deviation from exp(-rho*t*(1-s)) = " << worst_pgf
       << " (limit 1e-10); single-stream E[T] " << et << " vs E[Y]/P(win) " << want
       << " gap " << et_gap << " (limit 1e-6)";
    report(worst_pgf <= 1e-10 && et_gap <= 1e-6, "exponential-closed-forms", os.str());
}

void criterion_network_mean_field() {
    const auto t0 = clk::now();
    const auto g = make_regular(5, 200);
    const auto m = benchmark_network_model(g, 2.0);
    SimConfig sc;
    sc.mode = SimMode::Network;
    sc.horizon = 400.0;
    sc.replications = 3;
    sc.seed = 11;
    const auto sim = simulate_network(m, sc);
    double occ = 0.0;
    for (double o : sim.occupancy) occ += o / sim.occupancy.size();
    RegularGraphParams params;  // benchmark defaults, c1 = c2 = 2
    const auto cell = regular_graph_steady_state(5, params);
    const double gap = std::fabs(occ - cell.p);
    std::ostringstream os;
    os << "200-node 5-regular long-run compromised fraction " << occ
       << " vs mean-field fixed point " << cell.p << " (gap " << gap
       << ", limit 0.05; approximation-level check) in " << seconds_since(t0) << "s";
    report(gap <= 0.05, "network-vs-mean-field", os.str());
}

void criterion_aging_checkers() {
    std::vector<double> grid;
    for (double x = 0.0; x <= 12.0; x += 0.125) grid.push_back(x);

    bool ok = true;
    std::ostringstream os;
    for (double shape : {1.0, 1.5, 2.0, 3.5}) {
        const auto d = DistributionSpec::gamma(shape, 1.0);
        const bool pass = check_nbu(d, grid, 1e-9).holds;
        ok &= pass;
        if (!pass) os << "gamma(" << shape << ") unexpectedly fails; ";
    }
    const auto heavy = DistributionSpec::gamma(0.5, 1.0);
    const bool heavy_nbu = check_nbu(heavy, grid, 1e-9).holds;
    const bool heavy_nbue = check_nbue(heavy, grid, 1e-9).holds;
    ok &= !heavy_nbu && !heavy_nbue;

    const auto expo = DistributionSpec::exponential(1.0);
    const auto enbu = check_nbu(expo, grid, 1e-9);
    const auto enbue = check_nbue(expo, grid, 1e-9);
    ok &= enbu.holds && enbu.worst_violation <= 1e-12;
    ok &= enbue.holds && enbue.worst_violation <= 1e-12;

    os << "gamma shape >= 1 passes, shape 0.5 fails (nbu=" << heavy_nbu
       << ", nbue=" << heavy_nbue << "), exponential boundary slack "
       << enbu.worst_violation << " / " << enbue.worst_violation << " (limit 1e-12)";
    report(ok, "aging-class-checkers", os.str());
}

}  // namespace

int main() {
    // One pass over the 80-cell homogeneous benchmark feeds the first two
    // criteria; each cell solves its own scalar fixed point with bounds.
    const auto t0 = clk::now();
    std::vector<RegularCell> cells;
    cells.reserve(kRegularReferenceCellCount);
    for (std::size_t i = 0; i < kRegularReferenceCellCount; ++i) {
        const auto& ref = kRegularReferenceCells[i];
        RegularGraphParams params;
        params.c1 = params.c2 = ref.c;
        cells.push_back(regular_graph_steady_state(ref.k, params));
    }
    const double sweep_elapsed = seconds_since(t0);

    criterion_bound_table(cells, sweep_elapsed);
    criterion_fixed_point_table(cells, sweep_elapsed);
    criterion_spot_cells();
    criterion_dominance();
    criterion_ordering_chain();
    criterion_asymptotic_convergence();
    criterion_simulation_agreement();
    criterion_exponential_closed_forms();
    criterion_network_mean_field();
    criterion_aging_checkers();

    std::printf("%d of 10 criteria passed\n", 10 - g_failures);
    return g_failures;
}
