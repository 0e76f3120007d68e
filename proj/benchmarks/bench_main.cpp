#include <benchmark/benchmark.h>

#include <sstream>
#include <vector>

#include "shockmetrics/model.hpp"
#include "shockmetrics/renewal.hpp"
#include "shockmetrics/sim.hpp"
#include "shockmetrics/special.hpp"
#include "shockmetrics/steady.hpp"
#include "shockmetrics/ttc.hpp"

using namespace shockmetrics;

namespace {

AttackDefenseModel curve_model(int deg) {
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
        << "\"node_defaults\":{\"c1\":2,\"c2\":2,\"recovery_mean\":4,"
        << "\"local_env\":{\"family\":\"binomial\",\"prob\":0.5},"
        << "\"global_env\":{\"family\":\"uniform\",\"a\":1,\"b\":2}}}";
    return build_model(make_regular(deg, deg + 1), parse_model_config(cfg.str(), "bench"));
}

void BM_RegularizedIncompleteGamma(benchmark::State& state) {
    double a = 0.5, x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reg_lower_inc_gamma(a, x));
        a = a < 40.0 ? a + 0.5 : 0.5;
        x = x < 60.0 ? x + 0.7 : 0.1;
    }
}
BENCHMARK(BM_RegularizedIncompleteGamma);

void BM_CountPgf(benchmark::State& state) {
    CountingProcess cp{DistributionSpec::gamma(2.5, 1.0)};
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_pgf(cp, 0.8, t));
}
BENCHMARK(BM_CountPgf)->Arg(1)->Arg(10)->Arg(100)->Arg(1000);

void BM_CompromiseCdfGrid(benchmark::State& state) {
    const auto m = curve_model(static_cast<int>(state.range(0)));
    const auto grid = default_time_grid(m, 0);
    for (auto _ : state) benchmark::DoNotOptimize(ttc_cdf(m, 0, grid));
}
BENCHMARK(BM_CompromiseCdfGrid)->Arg(4)->Arg(12);

void BM_ExpectedTtc(benchmark::State& state) {
    const auto m = curve_model(8);
    for (auto _ : state) benchmark::DoNotOptimize(expected_ttc(m, 0));
}
BENCHMARK(BM_ExpectedTtc);

void BM_RegularCell(benchmark::State& state) {
    RegularGraphParams params;
    params.c1 = params.c2 = 5.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(regular_graph_steady_state(10, params));
}
BENCHMARK(BM_RegularCell);

void BM_NetworkSimulation(benchmark::State& state) {
    const auto m = curve_model(4);
    SimConfig cfg;
    cfg.mode = SimMode::Network;
    cfg.horizon = 50.0;
    cfg.replications = 1;
    cfg.seed = 3;
    for (auto _ : state) benchmark::DoNotOptimize(simulate_network(m, cfg));
}
BENCHMARK(BM_NetworkSimulation);

void BM_NodeMixedSimulation(benchmark::State& state) {
    const auto m = curve_model(8);
    SimConfig cfg;
    cfg.replications = 10000;
    cfg.seed = 3;
    cfg.mode = SimMode::NodeMixedEnv;
    for (auto _ : state) benchmark::DoNotOptimize(simulate_ttc_mixed(m, 0, cfg));
}
BENCHMARK(BM_NodeMixedSimulation);

}  // namespace
