#include "shockmetrics/steady.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>

#include "shockmetrics/errors.hpp"
#include "shockmetrics/parallel.hpp"
#include "shockmetrics/quadrature.hpp"
#include "shockmetrics/ttc.hpp"

namespace shockmetrics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double frozen_env_expected_ttc(const AttackDefenseModel& m, int v, double push_env,
                               double pull_env) {
    const NodeSpec& spec = m.spec(v);
    StreamPoint push = stream_point(m.push_magnitude, m.push_interarrival, spec.c1, push_env);
    StreamPoint pull = stream_point(m.pull_magnitude, m.pull_interarrival, spec.c2, pull_env);
    if (!push.viable && !pull.viable) return kInf;
    return integrate_survival(
        [&](double t) { return stream_pgf(push, t) * stream_pgf(pull, t); }, 1e-6);
}

// Nodes sharing (c1, c2, recovery_mean, global_env) have identical mean-field
// integrals for equal push environments; group them so each distinct integral
// is computed once per iteration.
std::vector<int> spec_classes(const AttackDefenseModel& m) {
    std::map<std::tuple<double, double, double, int, double, double>, int> ids;
    std::vector<int> cls(m.graph.size());
    for (int v = 0; v < m.graph.size(); ++v) {
        const NodeSpec& s = m.spec(v);
        auto key = std::make_tuple(s.c1, s.c2, s.recovery_mean,
                                   static_cast<int>(s.global_env.family), s.global_env.p1,
                                   s.global_env.p2);
        auto [it, ins] = ids.emplace(key, static_cast<int>(ids.size()));
        cls[v] = it->second;
    }
    return cls;
}

struct MeanFieldMap {
    const AttackDefenseModel& m;
    std::vector<int> cls;
    std::vector<double> theta_bar;  // per node
    int threads = 0;

    explicit MeanFieldMap(const AttackDefenseModel& model, int nthreads)
        : m(model), cls(spec_classes(model)), threads(nthreads) {
        theta_bar.reserve(m.graph.size());
        for (int v = 0; v < m.graph.size(); ++v)
            theta_bar.push_back(m.spec(v).global_env.mean());
    }

    double push_env(int v, const std::vector<double>& p) const {
        double e = 0.0;
        for (int u : m.graph.in_neighbors[v]) e += p[u];
        return e;
    }

    // Phi(p)_v = E[R_v] / (E[R_v] + E[T_v](p))
    std::vector<double> apply(const std::vector<double>& p) const {
        const int n = m.graph.size();
        std::vector<double> envs(n);
        for (int v = 0; v < n; ++v) envs[v] = push_env(v, p);

        // Distinct (class, env) integrals.
        std::map<std::pair<int, double>, double> et;
        for (int v = 0; v < n; ++v) et.emplace(std::make_pair(cls[v], envs[v]), 0.0);
        std::vector<std::map<std::pair<int, double>, double>::iterator> work;
        work.reserve(et.size());
        for (auto it = et.begin(); it != et.end(); ++it) work.push_back(it);
        // A representative node per class for thresholds/recovery.
        std::vector<int> class_rep(*std::max_element(cls.begin(), cls.end()) + 1, -1);
        for (int v = 0; v < n; ++v)
            if (class_rep[cls[v]] < 0) class_rep[cls[v]] = v;
        parallel_for(static_cast<int>(work.size()), threads, [&](int i) {
            auto& [key, value] = *work[i];
            const int v = class_rep[key.first];
            value = frozen_env_expected_ttc(m, v, key.second, theta_bar[v]);
        });

        std::vector<double> out(n);
        for (int v = 0; v < n; ++v) {
            const double er = m.spec(v).recovery_mean;
            const double t = et.at({cls[v], envs[v]});
            out[v] = std::isinf(t) ? 0.0 : er / (er + t);
        }
        return out;
    }
};

}  // namespace

double mean_field_expected_ttc(const AttackDefenseModel& m, int v,
                               const std::vector<double>& p) {
    if (static_cast<int>(p.size()) != m.graph.size())
        throw std::invalid_argument("probability vector size must match the node count");
    for (double pv : p)
        if (!(pv >= 0.0) || !(pv <= 1.0))
            throw std::invalid_argument("probabilities must lie in [0, 1]");
    double env = 0.0;
    for (int u : m.graph.in_neighbors[v]) env += p[u];
    return frozen_env_expected_ttc(m, v, env, m.spec(v).global_env.mean());
}

SteadyStateResult solve_steady_state(const AttackDefenseModel& m, int threads) {
    const int n = m.graph.size();
    MeanFieldMap phi(m, threads);
    SteadyStateResult res;
    std::vector<double> lo(n, 0.0), hi(n, 1.0);
    constexpr double kStepTol = 1e-7;
    constexpr double kAgreeTol = 1e-6;
    constexpr int kMaxIter = 500;

    int iter = 0;
    double lo_step = kInf, hi_step = kInf;
    while (iter < kMaxIter && (lo_step > kStepTol || hi_step > kStepTol)) {
        ++iter;
        if (lo_step > kStepTol) {
            std::vector<double> next = phi.apply(lo);
            lo_step = 0.0;
            for (int v = 0; v < n; ++v) lo_step = std::max(lo_step, std::abs(next[v] - lo[v]));
            lo = std::move(next);
        }
        if (hi_step > kStepTol) {
            std::vector<double> next = phi.apply(hi);
            hi_step = 0.0;
            for (int v = 0; v < n; ++v) hi_step = std::max(hi_step, std::abs(next[v] - hi[v]));
            hi = std::move(next);
        }
    }
    res.iterations = iter;
    res.bracket_lo = lo;
    res.bracket_hi = hi;

    double gap = 0.0;
    for (int v = 0; v < n; ++v) gap = std::max(gap, hi[v] - lo[v]);
    res.converged = gap <= kAgreeTol && lo_step <= kStepTol && hi_step <= kStepTol;

    res.p.resize(n);
    for (int v = 0; v < n; ++v) res.p[v] = 0.5 * (lo[v] + hi[v]);
    std::vector<double> check = phi.apply(res.p);
    for (int v = 0; v < n; ++v)
        res.residual = std::max(res.residual, std::abs(check[v] - res.p[v]));
    return res;
}

SteadyStateBounds steady_state_bounds(const AttackDefenseModel& m) {
    const int n = m.graph.size();
    SteadyStateBounds b;
    b.a4_ok = validate_assumptions(m, Assumption::A4).passed;
    b.nbue_ok = validate_assumptions(m, Assumption::NBUE).passed;
    b.lower.resize(n);
    b.upper.resize(n);
    b.upper_nbue.resize(n);
    b.upper_integral.resize(n);

    auto stream_rate = [](const StreamPoint& sp) {
        if (!sp.viable) return 0.0;
        const double mu = sp.interarrival.mean();
        return std::isfinite(mu) && mu > 0.0 ? sp.success / mu : 0.0;
    };

    for (int v = 0; v < n; ++v) {
        const NodeSpec& spec = m.spec(v);
        const double er = spec.recovery_mean;
        const double theta_bar = spec.global_env.mean();
        const double deg = m.graph.degree(v);

        const double rate_pull =
            stream_rate(stream_point(m.pull_magnitude, m.pull_interarrival, spec.c2, theta_bar));
        const double rate_push_full =
            stream_rate(stream_point(m.push_magnitude, m.push_interarrival, spec.c1, deg));

        const double s_lower = rate_pull * er;
        b.lower[v] = s_lower / (1.0 + s_lower);

        const double s_upper = (rate_pull + rate_push_full) * er;
        b.upper_nbue[v] = s_upper / (1.0 + s_upper);

        const double et_full = frozen_env_expected_ttc(m, v, deg, theta_bar);
        b.upper_integral[v] = std::isinf(et_full) ? 0.0 : er / (er + et_full);

        b.upper[v] = b.nbue_ok ? std::min(b.upper_nbue[v], b.upper_integral[v])
                               : b.upper_integral[v];
    }
    return b;
}

RegularCell regular_graph_steady_state(int k, const RegularGraphParams& pr) {
    if (k < 1) throw std::invalid_argument("regular graph degree must be >= 1");
    for (double x : {pr.alpha, pr.beta, pr.gamma, pr.lambda, pr.theta, pr.recovery_mean,
                     pr.c1, pr.c2})
        if (!(x > 0.0) || !std::isfinite(x))
            throw std::invalid_argument("regular-graph parameters must be positive");

    const EnvFamily push_mag{FamilyKind::PushMagnitude,
                             DistributionSpec::weibull(pr.alpha, 1.0), EnvLink::ScaleTimesEnv};
    const EnvFamily push_inter{FamilyKind::PushInterarrival,
                               DistributionSpec::gamma(pr.beta, 1.0), EnvLink::RateTimesEnv};
    const EnvFamily pull_mag{FamilyKind::PullMagnitude,
                             DistributionSpec::weibull(pr.gamma, 1.0), EnvLink::ScaleTimesEnv};
    const EnvFamily pull_inter{FamilyKind::PullInterarrival,
                               DistributionSpec::gamma(pr.lambda, 1.0), EnvLink::RateTimesEnv};

    const StreamPoint pull = stream_point(pull_mag, pull_inter, pr.c2, pr.theta);
    auto expected_t = [&](double push_env) {
        StreamPoint push = stream_point(push_mag, push_inter, pr.c1, push_env);
        if (!push.viable && !pull.viable) return kInf;
        return integrate_survival(
            [&](double t) { return stream_pgf(push, t) * stream_pgf(pull, t); }, 1e-6);
    };
    const double er = pr.recovery_mean;
    auto phi = [&](double p) {
        const double et = expected_t(k * p);
        return std::isinf(et) ? 0.0 : er / (er + et);
    };

    auto rate = [](const StreamPoint& sp) {
        return sp.viable ? sp.success / sp.interarrival.mean() : 0.0;
    };
    RegularCell cell;
    const double s_lower = rate(pull) * er;
    cell.p_lower = s_lower / (1.0 + s_lower);
    const double s_upper =
        (rate(pull) + rate(stream_point(push_mag, push_inter, pr.c1, k))) * er;
    // The reported upper bound is the closed harmonic form; the exact
    // full-environment integral (a tighter valid bound, since the fixed-point
    // map is increasing) only shrinks the bisection bracket.
    cell.p_upper = s_upper / (1.0 + s_upper);
    const double et_full = expected_t(k);
    const double p_integral = std::isinf(et_full) ? 0.0 : er / (er + et_full);

    double lo = std::min(cell.p_lower, std::min(cell.p_upper, p_integral));
    double hi = std::max(cell.p_lower, std::min(cell.p_upper, p_integral));
    const double f_lo = phi(lo) - lo;
    const double f_hi = phi(hi) - hi;
    constexpr double kSlack = 1e-9;
    if (f_lo < -kSlack || f_hi > kSlack)
        throw bracket_error(
            "mean-field residual does not change sign across [p_lower, p_upper]", f_lo, f_hi);
    for (int i = 0; i < 200 && hi - lo > 1e-8; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (phi(mid) - mid >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    cell.p = 0.5 * (lo + hi);
    return cell;
}

}  // namespace shockmetrics
