#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shockmetrics/model.hpp"

namespace shockmetrics {

// Per-node time-to-compromise outputs.
struct TtcResult {
    std::vector<double> t_grid;
    std::vector<double> q;             // P(T <= t) along t_grid
    std::vector<double> q_upper;       // NBU closed-form upper bound (optional)
    std::vector<double> q_asymptotic;  // large-defense asymptotic, raw (optional)
    double expected_ttc = 0.0;         // +inf when compromise can never happen
    double expected_ttc_lower = 0.0;
    std::vector<std::string> provenance;  // which assumptions were validated
};

// One environment value of one attack stream, with its mixture weight, the
// instantiated inter-arrival law, and the magnitude's survival at the
// threshold (the probability one attack compromises).
struct StreamPoint {
    double env = 0.0;
    double weight = 0.0;
    DistributionSpec interarrival;
    double success = 0.0;  // P(magnitude > threshold)
    bool viable = false;   // can this environment value ever compromise?
};

// A node's push/pull mixtures flattened to weighted environment points
// (local pmf exactly; continuous sustainment law via 64-point Gauss-Legendre).
struct NodeStreams {
    std::vector<StreamPoint> push, pull;
    double immortal_mass = 0.0;  // joint weight where neither stream can win
};

NodeStreams node_streams(const AttackDefenseModel& m, int v);

// One stream point at an explicit environment value (weight defaults to 1).
StreamPoint stream_point(const EnvFamily& magnitude, const EnvFamily& interarrival,
                         double threshold, double env, double weight = 1.0);

// The stream's survival factor E[s^{N(t)}] with s = 1 - success.
double stream_pgf(const StreamPoint& sp, double t);

// The dominating-process factor survival(t)^success (valid under NBU).
double stream_pgf_nbu_bound(const StreamPoint& sp, double t);

// P(T > t) given frozen environments (r compromised neighbors, sustainment
// theta): the product of the two streams' count pgfs at the success survivals.
double ttc_survival_given_env(const AttackDefenseModel& m, int v, double r, double theta,
                              double t);

// q(t) = 1 - [sum_r pi_r pushpgf(r,t)] * [integral pullpgf(theta,t) dH(theta)].
std::vector<double> ttc_cdf(const AttackDefenseModel& m, int v,
                            const std::vector<double>& t_grid);

// Closed-form upper bound 1 - [sum_r pi_r Gbar_r(t)^{sbar_r}] *
// [integral Gbar_theta(t)^{sbar_theta} dH].  Valid when the inter-arrival laws
// are NBU; the check runs on every environment value used unless
// skip_validation, and failure raises validation_error.
std::vector<double> ttc_cdf_upper(const AttackDefenseModel& m, int v,
                                  const std::vector<double>& t_grid,
                                  bool skip_validation = false);

// Large-defense asymptotic: sum of the two streams' exponential mixtures,
// using only the inter-arrival means.  Reported raw — the sum of the two
// mixture terms can exceed 1 at large t; clamp at presentation time.
std::vector<double> ttc_cdf_asymptotic(const AttackDefenseModel& m, int v,
                                       const std::vector<double>& t_grid);

// E[T] = integral of P(T > t); +inf when some environment mass can never be
// compromised.  Absolute tolerance 1e-6.
double expected_ttc(const AttackDefenseModel& m, int v);

// Harmonic-mean lower bound from the two streams' success rates, mixed over
// the environments.  Valid when inter-arrival laws are NBUE (checked unless
// skip_validation).
double expected_ttc_lower_iid(const AttackDefenseModel& m, int v,
                              bool skip_validation = false);

// One attack stream with per-attack distributions varying over the attack
// index: magnitudes stochastically increasing, inter-arrival means decreasing.
struct SequenceStream {
    std::vector<DistributionSpec> magnitudes;   // empty = stream absent
    std::vector<double> interarrival_means;     // same length as magnitudes
    double threshold = 1.0;
};

// Lower bound for the sequence model at frozen environments: each stream's
// series sum_m (prod_{i<=m} F_i(c)) E[Y_{m+1}] to the supplied horizon,
// combined by the harmonic rule.  Throws non_convergence when the residual
// product prod_{i<=I} F_i(c) > 1e-10 (series tail not negligible).
double expected_ttc_lower_seq(const SequenceStream& push, const SequenceStream& pull);

// Mixture form: weighted environment instances per stream (weights sum to 1).
double expected_ttc_lower_seq_mixed(
    const std::vector<std::pair<double, SequenceStream>>& push_mix,
    const std::vector<std::pair<double, SequenceStream>>& pull_mix);

// 201 uniform points on [0, T_max], T_max found by doubling until the
// remaining survival is under 1% of its achievable range.
std::vector<double> default_time_grid(const AttackDefenseModel& m, int v, int points = 201);

// Convenience bundle used by the command-line front end.
TtcResult compute_ttc(const AttackDefenseModel& m, int v, const std::vector<double>& t_grid,
                      bool with_upper, bool with_asymptotic);

}  // namespace shockmetrics
