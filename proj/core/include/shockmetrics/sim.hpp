#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "shockmetrics/model.hpp"
#include "shockmetrics/rng.hpp"

namespace shockmetrics {

enum class SimMode { NodeFrozenEnv, NodeMixedEnv, Network };
enum class EnvRefresh { AtRecovery, Dynamic };

struct SimConfig {
    int replications = 1;
    std::uint64_t seed = 0;
    SimMode mode = SimMode::NodeFrozenEnv;
    double horizon = 0.0;               // Network mode simulated time
    double warmup_fraction = 0.25;      // Network mode: discarded prefix
    EnvRefresh env_refresh = EnvRefresh::AtRecovery;
    int threads = 0;                    // node-mode replication workers (0 = auto)
    std::uint64_t max_events = 50000000;  // network event budget
};

struct SimResult {
    SimMode mode = SimMode::NodeFrozenEnv;
    std::uint64_t seed = 0;
    int replications = 0;

    // node modes
    std::vector<double> empirical_cdf;  // sorted first-passage times (may hold +inf)
    double mean_T = 0.0;
    double stderr_T = 0.0;

    // network mode
    std::vector<double> occupancy;  // per-node long-run compromised fraction
    std::vector<std::pair<double, double>> fraction_series;  // (time, fraction)
};

// First passage with environments frozen at (r, theta).  Streams that can
// never succeed contribute +inf; if neither stream can succeed the
// configuration is diagnosed immediately with cap_hit.  A stream that could
// succeed but does not within 1e9 arrivals also raises cap_hit.
SimResult simulate_ttc_frozen(const AttackDefenseModel& m, int v, double r, double theta,
                              const SimConfig& cfg);

// Draws (J, Theta) per replication from the node's environment laws, then runs
// the frozen-environment inner loop; the empirical CDF estimates q(t).
SimResult simulate_ttc_mixed(const AttackDefenseModel& m, int v, const SimConfig& cfg);

// Event-driven alternating compromise/recovery over the graph.  Starts all
// compromised; at each secure-entry the node freezes its environment (count of
// compromised in-neighbors, fresh sustainment draw) and samples its compromise
// time (AtRecovery).  Dynamic refresh instead resamples the pending compromise
// whenever an in-neighbor changes state (an extension for studying the
// mean-field gap, not part of the base model).  recovery_laws: one per node,
// or empty for Exponential(1 / recovery_mean).
SimResult simulate_network(const AttackDefenseModel& m, const SimConfig& cfg,
                           const std::vector<DistributionSpec>& recovery_laws = {});

// Two-sided Kolmogorov-Smirnov distance between a sorted sample and a CDF.
double ks_statistic(const std::vector<double>& sorted_sample,
                    const std::function<double(double)>& cdf);

// Large-sample critical value at significance 0.01: 1.63 / sqrt(n).
double ks_critical(double n);

}  // namespace shockmetrics
