#include "shockmetrics/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "shockmetrics/errors.hpp"
#include "shockmetrics/parallel.hpp"

namespace shockmetrics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::int64_t kArrivalCap = 1000000000;

struct FrozenStream {
    DistributionSpec interarrival;
    DistributionSpec magnitude;
    double threshold = 0.0;
    bool viable = false;
};

FrozenStream freeze(const EnvFamily& mag, const EnvFamily& inter, double threshold,
                    double env) {
    FrozenStream fs;
    fs.interarrival = inter.instantiate(env);
    fs.magnitude = mag.instantiate(env);
    fs.threshold = threshold;
    fs.viable = fs.interarrival.family != Family::Empty &&
                fs.magnitude.survival(threshold) > 0.0;
    return fs;
}

// First success over both streams, racing them in arrival order: whichever
// stream's next attack comes first is resolved first, so an early success on
// one stream spares the other stream's possibly astronomical tail.  The
// arrival budget is shared; exhausting it means no stream succeeded within
// kArrivalCap examined attacks.
double min_first_passage(const FrozenStream& push, const FrozenStream& pull, Rng& rng) {
    double tp = push.viable ? push.interarrival.sample(rng) : kInf;
    double tl = pull.viable ? pull.interarrival.sample(rng) : kInf;
    if (tp == kInf && tl == kInf) return kInf;
    for (std::int64_t i = 0; i < kArrivalCap; ++i) {
        if (tp <= tl) {
            if (push.magnitude.sample(rng) > push.threshold) return tp;
            tp += push.interarrival.sample(rng);
        } else {
            if (pull.magnitude.sample(rng) > pull.threshold) return tl;
            tl += pull.interarrival.sample(rng);
        }
    }
    throw cap_hit(
        "no attack exceeded the threshold within 1e9 arrivals; the per-attack success "
        "probability is vanishingly small");
}

void finish_node_result(SimResult& res) {
    std::sort(res.empirical_cdf.begin(), res.empirical_cdf.end());
    const auto n = static_cast<double>(res.empirical_cdf.size());
    double mean = 0.0;
    for (double t : res.empirical_cdf) mean += t / n;
    double var = 0.0;
    if (std::isfinite(mean)) {
        for (double t : res.empirical_cdf) var += (t - mean) * (t - mean);
        var = n > 1 ? var / (n - 1) : 0.0;
    } else {
        var = kInf;
    }
    res.mean_T = mean;
    res.stderr_T = std::sqrt(var / n);
}

}  // namespace

SimResult simulate_ttc_frozen(const AttackDefenseModel& m, int v, double r, double theta,
                              const SimConfig& cfg) {
    if (cfg.replications < 1) throw std::invalid_argument("replications must be >= 1");
    const NodeSpec& spec = m.spec(v);
    const FrozenStream push = freeze(m.push_magnitude, m.push_interarrival, spec.c1, r);
    const FrozenStream pull = freeze(m.pull_magnitude, m.pull_interarrival, spec.c2, theta);
    if (!push.viable && !pull.viable)
        throw cap_hit(
            "neither attack stream can ever exceed its threshold at these environment "
            "values; compromise is impossible");
    SimResult res;
    res.mode = SimMode::NodeFrozenEnv;
    res.seed = cfg.seed;
    res.replications = cfg.replications;
    res.empirical_cdf.resize(cfg.replications);
    parallel_for(cfg.replications, cfg.threads, [&](int rep) {
        Rng rng(Rng::derive(cfg.seed, static_cast<std::uint64_t>(rep)));
        res.empirical_cdf[rep] = min_first_passage(push, pull, rng);
    });
    finish_node_result(res);
    return res;
}

SimResult simulate_ttc_mixed(const AttackDefenseModel& m, int v, const SimConfig& cfg) {
    if (cfg.replications < 1) throw std::invalid_argument("replications must be >= 1");
    const NodeSpec& spec = m.spec(v);
    SimResult res;
    res.mode = SimMode::NodeMixedEnv;
    res.seed = cfg.seed;
    res.replications = cfg.replications;
    res.empirical_cdf.resize(cfg.replications);
    parallel_for(cfg.replications, cfg.threads, [&](int rep) {
        Rng rng(Rng::derive(cfg.seed, static_cast<std::uint64_t>(rep)));
        const double r = std::floor(spec.local_env.sample(rng) + 0.5);
        const double theta = spec.global_env.sample(rng);
        const FrozenStream push = freeze(m.push_magnitude, m.push_interarrival, spec.c1, r);
        const FrozenStream pull =
            freeze(m.pull_magnitude, m.pull_interarrival, spec.c2, theta);
        res.empirical_cdf[rep] = min_first_passage(push, pull, rng);
    });
    finish_node_result(res);
    return res;
}

namespace {

struct NetEvent {
    double time;
    std::uint64_t seq;
    int node;
    bool compromise;     // false = recovery due
    std::uint64_t gen;   // validity stamp
    bool operator>(const NetEvent& o) const {
        return time != o.time ? time > o.time : seq > o.seq;
    }
};

struct NetworkRun {
    const AttackDefenseModel& m;
    const SimConfig& cfg;
    const std::vector<DistributionSpec>& recovery;
    std::vector<std::vector<int>> out_neighbors;

    std::vector<char> compromised;
    std::vector<std::uint64_t> gen;
    std::vector<Rng> rng;
    std::vector<double> busy;         // accumulated compromised time in the window
    std::vector<double> last_change;  // time of last state change (clamped to window)
    std::priority_queue<NetEvent, std::vector<NetEvent>, std::greater<NetEvent>> queue;
    std::uint64_t seq = 0;
    std::uint64_t events = 0;
    int n_compromised = 0;
    bool record_series = false;
    std::vector<std::pair<double, double>> series;

    NetworkRun(const AttackDefenseModel& model, const SimConfig& c,
               const std::vector<DistributionSpec>& rec, std::uint64_t rep)
        : m(model), cfg(c), recovery(rec) {
        const int n = m.graph.size();
        out_neighbors.resize(n);
        for (auto [u, v] : m.graph.edges) out_neighbors[u].push_back(v);
        compromised.assign(n, 1);
        gen.assign(n, 0);
        busy.assign(n, 0.0);
        last_change.assign(n, 0.0);
        rng.reserve(n);
        for (int v = 0; v < n; ++v)
            rng.emplace_back(Rng::derive(cfg.seed, rep, static_cast<std::uint64_t>(v) + 1));
        n_compromised = n;
    }

    double window_start() const { return cfg.warmup_fraction * cfg.horizon; }

    void accrue(int v, double now) {
        const double from = std::max(last_change[v], window_start());
        const double to = std::min(now, cfg.horizon);
        if (compromised[v] && to > from) busy[v] += to - from;
        last_change[v] = now;
    }

    void push_event(double time, int node, bool compromise) {
        if (time <= cfg.horizon)
            queue.push({time, seq++, node, compromise, gen[node]});
    }

    void schedule_recovery(int v, double now) {
        push_event(now + recovery[v].sample(rng[v]), v, false);
    }

    int count_compromised_in(int v) const {
        int c = 0;
        for (int u : m.graph.in_neighbors[v]) c += compromised[u];
        return c;
    }

    void schedule_compromise(int v, double now) {
        const NodeSpec& spec = m.spec(v);
        const double r = count_compromised_in(v);
        const double theta = spec.global_env.sample(rng[v]);
        const FrozenStream push = freeze(m.push_magnitude, m.push_interarrival, spec.c1, r);
        const FrozenStream pull =
            freeze(m.pull_magnitude, m.pull_interarrival, spec.c2, theta);
        if (!push.viable && !pull.viable) return;  // secure until an env change
        const double t = min_first_passage(push, pull, rng[v]);
        if (std::isfinite(t)) push_event(now + t, v, true);
    }

    void refresh_secure_out_neighbors(int v, double now) {
        if (cfg.env_refresh != EnvRefresh::Dynamic) return;
        for (int u : out_neighbors[v]) {
            if (compromised[u]) continue;
            ++gen[u];  // cancel any pending compromise, then resample from now
            schedule_compromise(u, now);
        }
    }

    void record_fraction(double now) {
        if (!record_series) return;
        series.emplace_back(now,
                            static_cast<double>(n_compromised) / m.graph.size());
        if (series.size() > (1u << 22)) {  // keep memory bounded on long runs
            std::size_t w = 0;
            for (std::size_t i = 0; i < series.size(); i += 2) series[w++] = series[i];
            series.resize(w);
        }
    }

    void run() {
        const int n = m.graph.size();
        for (int v = 0; v < n; ++v) schedule_recovery(v, 0.0);
        record_fraction(0.0);
        while (!queue.empty()) {
            if (++events > cfg.max_events)
                throw cap_hit("network simulation exceeded the event budget");
            const NetEvent ev = queue.top();
            queue.pop();
            if (ev.gen != gen[ev.node]) continue;  // cancelled
            const int v = ev.node;
            accrue(v, ev.time);
            ++gen[v];
            if (ev.compromise) {
                compromised[v] = 1;
                ++n_compromised;
                schedule_recovery(v, ev.time);
            } else {
                compromised[v] = 0;
                --n_compromised;
                schedule_compromise(v, ev.time);
            }
            refresh_secure_out_neighbors(v, ev.time);
            record_fraction(ev.time);
        }
        for (int v = 0; v < n; ++v) accrue(v, cfg.horizon);
    }

    std::vector<double> occupancies() const {
        const double span = cfg.horizon - window_start();
        std::vector<double> occ(m.graph.size());
        for (int v = 0; v < m.graph.size(); ++v) occ[v] = span > 0.0 ? busy[v] / span : 0.0;
        return occ;
    }
};

}  // namespace

SimResult simulate_network(const AttackDefenseModel& m, const SimConfig& cfg,
                           const std::vector<DistributionSpec>& recovery_laws) {
    if (cfg.replications < 1) throw std::invalid_argument("replications must be >= 1");
    if (!(cfg.horizon > 0.0))
        throw std::invalid_argument("network simulation needs a positive horizon");
    if (!(cfg.warmup_fraction >= 0.0) || !(cfg.warmup_fraction < 1.0))
        throw std::invalid_argument("warmup fraction must lie in [0, 1)");
    const int n = m.graph.size();
    std::vector<DistributionSpec> recovery = recovery_laws;
    if (recovery.empty()) {
        recovery.reserve(n);
        for (int v = 0; v < n; ++v)
            recovery.push_back(DistributionSpec::exponential(1.0 / m.spec(v).recovery_mean));
    }
    if (static_cast<int>(recovery.size()) != n)
        throw std::invalid_argument("need one recovery law per node");
    for (int v = 0; v < n; ++v) {
        const double mu = recovery[v].mean();
        if (std::abs(mu - m.spec(v).recovery_mean) > 1e-9 * std::max(1.0, mu))
            throw validation_error("recovery law mean for node '" + m.graph.nodes[v] +
                                   "' does not match the configured recovery_mean");
    }

    SimResult res;
    res.mode = SimMode::Network;
    res.seed = cfg.seed;
    res.replications = cfg.replications;
    res.occupancy.assign(n, 0.0);

    std::vector<double> rep_means(cfg.replications, 0.0);
    for (int rep = 0; rep < cfg.replications; ++rep) {
        NetworkRun run(m, cfg, recovery, static_cast<std::uint64_t>(rep));
        run.record_series = rep == 0;
        run.run();
        const auto occ = run.occupancies();
        double mean = 0.0;
        for (int v = 0; v < n; ++v) {
            res.occupancy[v] += occ[v] / cfg.replications;
            mean += occ[v] / n;
        }
        rep_means[rep] = mean;
        if (rep == 0) {
            // Keep the trajectory readable: at most 2048 points.
            const auto& s = run.series;
            const std::size_t stride = std::max<std::size_t>(1, s.size() / 2048);
            for (std::size_t i = 0; i < s.size(); i += stride) res.fraction_series.push_back(s[i]);
            if (!s.empty() && (s.size() - 1) % stride != 0)
                res.fraction_series.push_back(s.back());
        }
    }
    double mean = 0.0;
    for (double v : rep_means) mean += v / cfg.replications;
    res.mean_T = mean;
    double var = 0.0;
    for (double v : rep_means) var += (v - mean) * (v - mean);
    res.stderr_T = cfg.replications > 1
                       ? std::sqrt(var / (cfg.replications - 1) / cfg.replications)
                       : 0.0;
    return res;
}

double ks_statistic(const std::vector<double>& sorted_sample,
                    const std::function<double(double)>& cdf) {
    const auto n = static_cast<double>(sorted_sample.size());
    if (n == 0) throw std::invalid_argument("empty sample");
    double d = 0.0;
    for (std::size_t i = 0; i < sorted_sample.size(); ++i) {
        // Non-finite entries (never-compromised replications) sit past every
        // finite time; they count toward n but the supremum is taken over the
        // finite support, where the reference cdf can actually be evaluated.
        if (!std::isfinite(sorted_sample[i])) break;
        const double f = cdf(sorted_sample[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

double ks_critical(double n) { return 1.63 / std::sqrt(n); }

}  // namespace shockmetrics
