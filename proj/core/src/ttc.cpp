#include "shockmetrics/ttc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "shockmetrics/errors.hpp"
#include "shockmetrics/quadrature.hpp"
#include "shockmetrics/renewal.hpp"

namespace shockmetrics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Success survivals below ~5e-17 cannot be distinguished from zero inside the
// pgf argument 1 - success; such environments are treated as unable to
// compromise (first passage beyond any representable horizon).
constexpr double kViableSuccess = 5e-17;

std::vector<std::pair<double, double>> discrete_support(const DistributionSpec& d) {
    std::vector<std::pair<double, double>> pts;
    switch (d.family) {
        case Family::Dirac:
            pts.emplace_back(d.p1, 1.0);
            break;
        case Family::Binomial: {
            const int n = static_cast<int>(d.p1);
            const double p = d.p2;
            for (int k = 0; k <= n; ++k) {
                double pmf;
                if (p <= 0.0)
                    pmf = k == 0 ? 1.0 : 0.0;
                else if (p >= 1.0)
                    pmf = k == n ? 1.0 : 0.0;
                else
                    pmf = std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                                   std::lgamma(n - k + 1.0) + k * std::log(p) +
                                   (n - k) * std::log1p(-p));
                if (pmf > 0.0) pts.emplace_back(static_cast<double>(k), pmf);
            }
            break;
        }
        default:
            throw validation_error("environment mixture needs a discrete law here");
    }
    return pts;
}

double pgf_at(const StreamPoint& sp, double t) { return stream_pgf(sp, t); }
double bound_at(const StreamPoint& sp, double t) { return stream_pgf_nbu_bound(sp, t); }

template <class F>
double mix(const std::vector<StreamPoint>& pts, double t, F&& factor) {
    double acc = 0.0;
    for (const auto& sp : pts) acc += sp.weight * factor(sp, t);
    return acc;
}

double survival_mix(const NodeStreams& ns, double t) {
    const double pull = mix(ns.pull, t, pgf_at);
    if (pull < 1e-18) return 0.0;  // push factor cannot lift it above noise
    return mix(ns.push, t, pgf_at) * pull;
}

void check_stream_nbu(const std::vector<StreamPoint>& pts, const char* label) {
    std::vector<double> zs;
    for (int i = 0; i <= 20; ++i) zs.push_back(0.5 * i);
    for (const auto& sp : pts) {
        if (sp.interarrival.family == Family::Empty) continue;
        auto r = check_nbu(sp.interarrival, zs, 1e-9);
        if (!r.holds) {
            std::ostringstream os;
            os << label << " inter-arrival law at environment " << sp.env
               << " is not new-better-than-used (violation " << r.worst_violation
               << " at z1=" << r.at_z1 << ", z2=" << r.at_z2
               << "); the closed-form bound does not apply";
            throw validation_error(os.str());
        }
    }
}

void check_stream_nbue(const std::vector<StreamPoint>& pts, const char* label) {
    std::vector<double> zs;
    for (int i = 0; i <= 20; ++i) zs.push_back(0.5 * i);
    for (const auto& sp : pts) {
        if (sp.interarrival.family == Family::Empty) continue;
        if (check_nbu(sp.interarrival, zs, 1e-9).holds) continue;  // NBU => NBUE
        auto r = check_nbue(sp.interarrival, zs, 1e-9);
        if (!r.holds) {
            std::ostringstream os;
            os << label << " inter-arrival law at environment " << sp.env
               << " is not new-better-than-used-in-expectation (violation "
               << r.worst_violation << " at z=" << r.at_z1
               << "); the harmonic lower bound does not apply";
            throw validation_error(os.str());
        }
    }
}

}  // namespace

StreamPoint stream_point(const EnvFamily& magnitude, const EnvFamily& interarrival,
                         double threshold, double env, double weight) {
    StreamPoint sp;
    sp.env = env;
    sp.weight = weight;
    sp.interarrival = interarrival.instantiate(env);
    sp.success = magnitude.instantiate(env).survival(threshold);
    sp.viable = sp.interarrival.family != Family::Empty && sp.success > kViableSuccess;
    return sp;
}

double stream_pgf(const StreamPoint& sp, double t) {
    if (!sp.viable) return 1.0;
    return count_pgf({sp.interarrival}, 1.0 - sp.success, t);
}

// Gbar(t)^success in log space, so tiny success probabilities and tiny
// survivals both keep full precision.
double stream_pgf_nbu_bound(const StreamPoint& sp, double t) {
    if (!sp.viable) return 1.0;
    const double ls = sp.interarrival.log_survival(t);
    if (std::isinf(ls)) return 0.0;
    return std::exp(sp.success * ls);
}

NodeStreams node_streams(const AttackDefenseModel& m, int v) {
    const NodeSpec& spec = m.spec(v);
    NodeStreams ns;

    for (auto [r, w] : discrete_support(spec.local_env))
        ns.push.push_back(stream_point(m.push_magnitude, m.push_interarrival, spec.c1, r, w));

    const DistributionSpec& h = spec.global_env;
    if (h.family == Family::UniformInterval) {
        // 64-point Gauss-Legendre with the uniform density folded into weights.
        const double a = h.p1, b = h.p2;
        for (const auto& [theta, w] : gauss_legendre_64_nodes(a, b))
            ns.pull.push_back(
                stream_point(m.pull_magnitude, m.pull_interarrival, spec.c2, theta, w / (b - a)));
    } else {
        for (auto [theta, w] : discrete_support(h))
            ns.pull.push_back(
                stream_point(m.pull_magnitude, m.pull_interarrival, spec.c2, theta, w));
    }

    // Normalize each mixture so its weights sum to exactly 1 (pmf rounding
    // and quadrature weights each drift by a few ulps, which would otherwise
    // surface as q(0) != 0).
    for (auto* stream : {&ns.push, &ns.pull}) {
        double total = 0.0;
        for (const auto& sp : *stream) total += sp.weight;
        if (total > 0.0)
            for (auto& sp : *stream) sp.weight /= total;
    }

    double push_dead = 0.0, pull_dead = 0.0;
    for (const auto& sp : ns.push)
        if (!sp.viable) push_dead += sp.weight;
    for (const auto& sp : ns.pull)
        if (!sp.viable) pull_dead += sp.weight;
    ns.immortal_mass = push_dead * pull_dead;
    return ns;
}

double ttc_survival_given_env(const AttackDefenseModel& m, int v, double r, double theta,
                              double t) {
    const NodeSpec& spec = m.spec(v);
    StreamPoint push = stream_point(m.push_magnitude, m.push_interarrival, spec.c1, r);
    StreamPoint pull = stream_point(m.pull_magnitude, m.pull_interarrival, spec.c2, theta);
    return stream_pgf(push, t) * stream_pgf(pull, t);
}

std::vector<double> ttc_cdf(const AttackDefenseModel& m, int v,
                            const std::vector<double>& t_grid) {
    NodeStreams ns = node_streams(m, v);
    std::vector<double> q;
    q.reserve(t_grid.size());
    for (double t : t_grid) q.push_back(std::clamp(1.0 - survival_mix(ns, t), 0.0, 1.0));
    return q;
}

std::vector<double> ttc_cdf_upper(const AttackDefenseModel& m, int v,
                                  const std::vector<double>& t_grid, bool skip_validation) {
    NodeStreams ns = node_streams(m, v);
    if (!skip_validation) {
        check_stream_nbu(ns.push, "push");
        check_stream_nbu(ns.pull, "pull");
    }
    std::vector<double> q;
    q.reserve(t_grid.size());
    for (double t : t_grid)
        q.push_back(std::clamp(1.0 - mix(ns.push, t, bound_at) * mix(ns.pull, t, bound_at), 0.0, 1.0));
    return q;
}

std::vector<double> ttc_cdf_asymptotic(const AttackDefenseModel& m, int v,
                                       const std::vector<double>& t_grid) {
    NodeStreams ns = node_streams(m, v);
    auto stream_rates = [](const std::vector<StreamPoint>& pts, const char* label) {
        std::vector<std::pair<double, double>> rw;  // (rate, weight)
        for (const auto& sp : pts) {
            if (sp.interarrival.family == Family::Empty) {
                rw.emplace_back(0.0, sp.weight);  // no attacks contribute nothing
                continue;
            }
            const double mu = sp.interarrival.mean();
            if (!std::isfinite(mu)) {
                std::ostringstream os;
                os << label << " inter-arrival mean is infinite at environment " << sp.env
                   << "; the asymptotic form needs finite means";
                throw validation_error(os.str());
            }
            rw.emplace_back(sp.success / mu, sp.weight);
        }
        return rw;
    };
    auto push = stream_rates(ns.push, "push");
    auto pull = stream_rates(ns.pull, "pull");
    std::vector<double> q;
    q.reserve(t_grid.size());
    for (double t : t_grid) {
        double acc = 0.0;
        for (auto [rate, w] : push) acc += w * -std::expm1(-rate * t);
        for (auto [rate, w] : pull) acc += w * -std::expm1(-rate * t);
        q.push_back(acc);
    }
    return q;
}

double expected_ttc(const AttackDefenseModel& m, int v) {
    NodeStreams ns = node_streams(m, v);
    if (ns.immortal_mass > 0.0) return kInf;
    return integrate_survival([&](double t) { return survival_mix(ns, t); }, 1e-6);
}

double expected_ttc_lower_iid(const AttackDefenseModel& m, int v, bool skip_validation) {
    NodeStreams ns = node_streams(m, v);
    if (!skip_validation) {
        check_stream_nbue(ns.push, "push");
        check_stream_nbue(ns.pull, "pull");
    }
    auto rate_of = [](const StreamPoint& sp) {
        if (!sp.viable) return 0.0;
        const double mu = sp.interarrival.mean();
        return std::isfinite(mu) && mu > 0.0 ? sp.success / mu : 0.0;
    };
    double acc = 0.0;
    for (const auto& pu : ns.push) {
        for (const auto& pl : ns.pull) {
            const double rate = rate_of(pu) + rate_of(pl);
            if (rate <= 0.0) return kInf;  // positive joint mass that never falls
            acc += pu.weight * pl.weight / rate;
        }
    }
    return acc;
}

namespace {

// Eq-style series for one stream: sum_m (prod_{i<=m} F_i(c)) E[Y_{m+1}].
double sequence_stream_expected(const SequenceStream& s) {
    if (s.magnitudes.empty()) return kInf;  // stream absent: never succeeds
    if (s.magnitudes.size() != s.interarrival_means.size())
        throw validation_error(
            "sequence stream needs one inter-arrival mean per magnitude");
    // Assumption checks: magnitudes stochastically increasing, means decreasing.
    const std::vector<double> xs = {0.1, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 8.0, 12.0};
    for (std::size_t i = 0; i + 1 < s.magnitudes.size(); ++i) {
        for (double x : xs)
            if (s.magnitudes[i + 1].survival(x) < s.magnitudes[i].survival(x) - 1e-12)
                throw validation_error(
                    "sequence magnitudes must be stochastically increasing in the attack "
                    "index");
        if (s.interarrival_means[i + 1] > s.interarrival_means[i] + 1e-12)
            throw validation_error(
                "sequence inter-arrival means must be decreasing in the attack index");
    }
    double acc = 0.0;
    double prod = 1.0;  // prod_{i<=m} F_i(c)
    for (std::size_t mi = 0; mi < s.magnitudes.size(); ++mi) {
        acc += prod * s.interarrival_means[mi];
        prod *= s.magnitudes[mi].cdf(s.threshold);
    }
    if (prod > 1e-10) {
        const double f_last = s.magnitudes.back().cdf(s.threshold);
        const double tail = f_last < 1.0
                                ? prod * s.interarrival_means.back() / (1.0 - f_last)
                                : kInf;
        throw non_convergence(
            "sequence series tail is not negligible at the supplied horizon "
            "(residual success-failure product " +
                std::to_string(prod) + " > 1e-10); supply more terms",
            acc, tail);
    }
    return acc;
}

double harmonic_pair(double e1, double e2) {
    const double r1 = std::isfinite(e1) && e1 > 0.0 ? 1.0 / e1 : 0.0;
    const double r2 = std::isfinite(e2) && e2 > 0.0 ? 1.0 / e2 : 0.0;
    const double r = r1 + r2;
    return r > 0.0 ? 1.0 / r : kInf;
}

}  // namespace

double expected_ttc_lower_seq(const SequenceStream& push, const SequenceStream& pull) {
    return harmonic_pair(sequence_stream_expected(push), sequence_stream_expected(pull));
}

double expected_ttc_lower_seq_mixed(
    const std::vector<std::pair<double, SequenceStream>>& push_mix,
    const std::vector<std::pair<double, SequenceStream>>& pull_mix) {
    auto norm_check = [](const std::vector<std::pair<double, SequenceStream>>& mx,
                         const char* label) {
        if (mx.empty()) return;
        double w = 0.0;
        for (const auto& [wi, _] : mx) w += wi;
        if (std::abs(w - 1.0) > 1e-9)
            throw validation_error(std::string(label) + " mixture weights must sum to 1");
    };
    norm_check(push_mix, "push");
    norm_check(pull_mix, "pull");

    std::vector<std::pair<double, double>> pushes, pulls;  // (weight, E)
    if (push_mix.empty())
        pushes.emplace_back(1.0, kInf);
    else
        for (const auto& [w, s] : push_mix) pushes.emplace_back(w, sequence_stream_expected(s));
    if (pull_mix.empty())
        pulls.emplace_back(1.0, kInf);
    else
        for (const auto& [w, s] : pull_mix) pulls.emplace_back(w, sequence_stream_expected(s));

    double acc = 0.0;
    for (const auto& [wu, eu] : pushes)
        for (const auto& [wl, el] : pulls) {
            const double h = harmonic_pair(eu, el);
            if (std::isinf(h)) return kInf;
            acc += wu * wl * h;
        }
    return acc;
}

std::vector<double> default_time_grid(const AttackDefenseModel& m, int v, int points) {
    if (points < 2) throw std::invalid_argument("time grid needs at least 2 points");
    NodeStreams ns = node_streams(m, v);
    const double q_limit = 1.0 - ns.immortal_mass;
    double t_max = 1.0;
    if (q_limit > 0.0) {
        for (int i = 0; i < 60; ++i) {
            const double q = 1.0 - survival_mix(ns, t_max);
            if (q >= 0.99 * q_limit) break;
            t_max *= 2.0;
        }
    }
    std::vector<double> grid;
    grid.reserve(points);
    for (int i = 0; i < points; ++i)
        grid.push_back(t_max * static_cast<double>(i) / (points - 1));
    return grid;
}

TtcResult compute_ttc(const AttackDefenseModel& m, int v, const std::vector<double>& t_grid,
                      bool with_upper, bool with_asymptotic) {
    TtcResult res;
    res.t_grid = t_grid;
    res.q = ttc_cdf(m, v, t_grid);
    if (with_upper) {
        res.q_upper = ttc_cdf_upper(m, v, t_grid);
        res.provenance.push_back("new-better-than-used verified for both attack streams");
    }
    if (with_asymptotic) res.q_asymptotic = ttc_cdf_asymptotic(m, v, t_grid);
    res.expected_ttc = expected_ttc(m, v);
    res.expected_ttc_lower = expected_ttc_lower_iid(m, v);
    res.provenance.push_back(
        "new-better-than-used-in-expectation verified for both attack streams");
    return res;
}

}  // namespace shockmetrics
