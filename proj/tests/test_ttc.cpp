#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "shockmetrics/errors.hpp"
#include "shockmetrics/model.hpp"
#include "shockmetrics/quadrature.hpp"
#include "shockmetrics/ttc.hpp"

using namespace shockmetrics;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

// The homogeneous curve family: Weibull(2) push magnitudes scaled by the
// neighbor count, Gamma(2) push inter-arrivals at rate r, exponential pull
// magnitudes scaled by the sustainment level, Gamma(2.5) pull inter-arrivals.
AttackDefenseModel curve_model(int degree) {
    static const std::string text =
        slurp(std::string(SHOCKMETRICS_TEST_DATA_DIR) + "/curve_family.json");
    const auto cfg = parse_model_config(text, "curve_family.json");
    return build_model(make_regular(degree, degree + 1), cfg);
}

// A model whose pull stream can never exceed the threshold (magnitudes capped
// at 0.5 against c2 = 1) and whose push environment is the given local pmf.
AttackDefenseModel capped_pull_model(const std::string& local_env_json) {
    const std::string text = R"({
  "families": {
    "push_magnitude": {"family": "weibull", "shape": 2, "scale": 1, "env_link": "scale_times_env"},
    "push_interarrival": {"family": "exponential", "rate": 1, "env_link": "rate_times_env"},
    "pull_magnitude": {"family": "uniform", "a": 0, "b": 0.5},
    "pull_interarrival": {"family": "exponential", "rate": 1}
  },
  "node_defaults": {
    "c1": 1, "c2": 1, "recovery_mean": 1,
    "local_env": )" + local_env_json + R"(,
    "global_env": {"family": "dirac", "atom": 1}
  }
})";
    const auto cfg = parse_model_config(text, "inline");
    return build_model(make_regular(2, 8), cfg);
}

}  // namespace

TEST_SUITE_BEGIN("ttc");

TEST_CASE("frozen-environment references") {
    EnvFamily push_mag{FamilyKind::PushMagnitude, DistributionSpec::weibull(2.0, 1.0),
                       EnvLink::ScaleTimesEnv};
    EnvFamily push_int{FamilyKind::PushInterarrival, DistributionSpec::gamma(2.0, 1.0),
                       EnvLink::RateTimesEnv};
    EnvFamily pull_mag{FamilyKind::PullMagnitude, DistributionSpec::weibull(1.0, 1.0),
                       EnvLink::ScaleTimesEnv};
    EnvFamily pull_int{FamilyKind::PullInterarrival, DistributionSpec::gamma(2.5, 1.0),
                       EnvLink::RateTimesEnv};
    const auto pu = stream_point(push_mag, push_int, 2.0, 4.0);
    const auto pl = stream_point(pull_mag, pull_int, 2.0, 1.5);

    SUBCASE("compromise probability at t = 1") {
        const double q = 1.0 - stream_pgf(pu, 1.0) * stream_pgf(pl, 1.0);
        CHECK(q == doctest::Approx(0.8291250229082036).epsilon(1e-12));
    }
    SUBCASE("expected time to compromise") {
        const double et = integrate_survival(
            [&](double t) { return stream_pgf(pu, t) * stream_pgf(pl, t); }, 1e-9);
        CHECK(et == doctest::Approx(0.6190685732712518).epsilon(1e-8));
    }
    SUBCASE("the model-level conditional survival agrees") {
        const auto m = curve_model(8);
        const double s = ttc_survival_given_env(m, 0, 4.0, 1.5, 1.0);
        CHECK(1.0 - s == doctest::Approx(0.8291250229082036).epsilon(1e-12));
    }
}

TEST_CASE("the compromise-time distribution behaves like a cdf") {
    const auto m = curve_model(8);
    const auto grid = default_time_grid(m, 0);
    const auto q = ttc_cdf(m, 0, grid);
    REQUIRE(q.size() == grid.size());
    CHECK(q.front() >= 0.0);
    CHECK(q.front() <= 1e-12);
    for (std::size_t i = 0; i < q.size(); ++i) {
        CHECK(q[i] >= 0.0);
        CHECK(q[i] <= 1.0);
        if (i > 0) CHECK(q[i] >= q[i - 1] - 1e-12);
    }
    // The default grid runs far enough to capture 99% of the reachable mass.
    const auto ns = node_streams(m, 0);
    CHECK(q.back() >= 0.99 * (1.0 - ns.immortal_mass));
}

TEST_CASE("the closed-form bound dominates the exact distribution") {
    const auto m = curve_model(8);
    const auto grid = default_time_grid(m, 0);
    const auto q = ttc_cdf(m, 0, grid);
    const auto qu = ttc_cdf_upper(m, 0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(q[i] <= qu[i] + 1e-12);
        CHECK(qu[i] <= 1.0);
    }
}

TEST_CASE("the bound refuses inter-arrival laws outside its aging class") {
    const auto cfg = parse_model_config(
        slurp(std::string(SHOCKMETRICS_TEST_DATA_DIR) + "/heavy_tail_family.json"), "h");
    const auto m = build_model(make_regular(4, 9), cfg);
    const std::vector<double> grid = {0.0, 0.5, 1.0};
    CHECK_THROWS_AS(ttc_cdf_upper(m, 0, grid), validation_error);
    CHECK_NOTHROW(ttc_cdf_upper(m, 0, grid, /*skip_validation=*/true));
}

TEST_CASE("expected time and its lower bound on the curve family") {
    const auto m = curve_model(8);
    const double et = expected_ttc(m, 0);
    const double lo = expected_ttc_lower_iid(m, 0);
    CHECK(et == doctest::Approx(1.006329).epsilon(2e-5));
    CHECK(lo == doctest::Approx(0.957635).epsilon(2e-5));
    CHECK(lo <= et + 1e-9);
}

TEST_CASE("the raw large-defense asymptotic is an unclamped sum of two terms") {
    const auto m = curve_model(8);
    const auto grid = default_time_grid(m, 0);
    const auto qa = ttc_cdf_asymptotic(m, 0, grid);
    double peak = 0.0;
    for (double x : qa) peak = std::max(peak, x);
    // At a small threshold the two mixture terms each saturate, so the raw
    // sum climbs well past 1; presentation layers clamp it.
    CHECK(peak > 1.0);
}

TEST_CASE("environment mass that can never be compromised") {
    SUBCASE("fully immortal node") {
        const auto m = capped_pull_model(R"({"family": "dirac", "atom": 0})");
        const auto ns = node_streams(m, 0);
        CHECK(ns.immortal_mass == doctest::Approx(1.0).epsilon(1e-12));
        const std::vector<double> grid = {0.0, 1.0, 10.0, 100.0};
        for (double qi : ttc_cdf(m, 0, grid)) CHECK(qi == doctest::Approx(0.0));
        CHECK(std::isinf(expected_ttc(m, 0)));
    }
    SUBCASE("one quarter of the environment mass is immortal") {
        // Two attackers, each compromised with probability 1/2, and a pull
        // stream that cannot win: environment (0 neighbors) has mass 1/4.
        const auto m = capped_pull_model(R"({"family": "binomial", "trials": 2, "prob": 0.5})");
        const auto ns = node_streams(m, 0);
        CHECK(ns.immortal_mass == doctest::Approx(0.25).epsilon(1e-12));
        const std::vector<double> grid = {0.0, 1.0, 10.0, 100.0, 1000.0};
        const auto q = ttc_cdf(m, 0, grid);
        CHECK(q.back() > 0.7);
        CHECK(q.back() <= 0.75 + 1e-9);
        CHECK(std::isinf(expected_ttc(m, 0)));
    }
}

TEST_CASE("a single exponential stream has closed-form answers") {
    // Pull disabled, push always sees exactly one compromised neighbor:
    // a rate-1 Poisson attack stream where each attack wins with probability
    // surv_weibull2(1) = exp(-1).
    const auto m = capped_pull_model(R"({"family": "dirac", "atom": 1})");
    const double s = std::exp(-1.0);

    const std::vector<double> grid = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
    const auto q = ttc_cdf(m, 0, grid);
    const auto qu = ttc_cdf_upper(m, 0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double expect = 1.0 - std::exp(-s * grid[i]);
        CHECK(q[i] == doctest::Approx(expect).epsilon(1e-10));
        // The aging bound is tight for exponential inter-arrivals.
        CHECK(qu[i] == doctest::Approx(expect).epsilon(1e-10));
    }
    // Mean inter-arrival divided by the per-attack win probability.
    CHECK(expected_ttc(m, 0) == doctest::Approx(1.0 / s).epsilon(1e-6));
    CHECK(expected_ttc_lower_iid(m, 0) == doctest::Approx(1.0 / s).epsilon(1e-6));
}

TEST_CASE("sequence-model lower bound") {
    SUBCASE("identical attacks reduce to the renewal-reward value") {
        SequenceStream push;
        push.threshold = 1.0;
        for (int i = 0; i < 80; ++i) {
            push.magnitudes.push_back(DistributionSpec::weibull(1.0, 1.0));
            push.interarrival_means.push_back(0.5);
        }
        SequenceStream none;  // pull absent
        const double want = 0.5 / std::exp(-1.0);  // E[Y] / P(win per attack)
        CHECK(expected_ttc_lower_seq(push, none) == doctest::Approx(want).epsilon(1e-9));
    }
    SUBCASE("two streams combine harmonically") {
        auto one = [](double mean) {
            SequenceStream s;
            s.threshold = 0.5;
            for (int i = 0; i < 80; ++i) {
                s.magnitudes.push_back(DistributionSpec::weibull(1.0, 1.0));
                s.interarrival_means.push_back(mean);
            }
            return s;
        };
        const double f = std::exp(-0.5);
        const double e1 = 1.0 / f, e2 = 2.0 / f;
        const double want = 1.0 / (1.0 / e1 + 1.0 / e2);
        CHECK(expected_ttc_lower_seq(one(1.0), one(2.0)) ==
              doctest::Approx(want).epsilon(1e-9));
    }
    SUBCASE("weakening magnitudes are rejected") {
        SequenceStream s;
        s.threshold = 1.5;
        s.magnitudes = {DistributionSpec::dirac(2.0), DistributionSpec::dirac(1.0)};
        s.interarrival_means = {1.0, 1.0};
        CHECK_THROWS_AS(expected_ttc_lower_seq(s, SequenceStream{}), validation_error);
    }
    SUBCASE("slowing attacks are rejected") {
        SequenceStream s;
        s.threshold = 1.0;
        s.magnitudes = {DistributionSpec::weibull(1.0, 1.0), DistributionSpec::weibull(1.0, 1.0)};
        s.interarrival_means = {1.0, 2.0};
        CHECK_THROWS_AS(expected_ttc_lower_seq(s, SequenceStream{}), validation_error);
    }
    SUBCASE("a never-winning stream reports its partial sum") {
        SequenceStream s;
        s.threshold = 1.0;
        for (int i = 0; i < 5; ++i) {
            s.magnitudes.push_back(DistributionSpec::dirac(0.5));  // never exceeds c
            s.interarrival_means.push_back(1.0);
        }
        try {
            expected_ttc_lower_seq(s, SequenceStream{});
            FAIL("expected non_convergence");
        } catch (const non_convergence& e) {
            CHECK(e.partial_value == doctest::Approx(5.0).epsilon(1e-12));
            CHECK(std::isinf(e.error_estimate));
        }
    }
    SUBCASE("mixture weights must sum to one") {
        SequenceStream s;
        s.threshold = 1.0;
        for (int i = 0; i < 80; ++i) {
            s.magnitudes.push_back(DistributionSpec::weibull(1.0, 1.0));
            s.interarrival_means.push_back(1.0);
        }
        std::vector<std::pair<double, SequenceStream>> bad = {{0.5, s}};
        CHECK_THROWS_AS(expected_ttc_lower_seq_mixed(bad, {}), validation_error);
        std::vector<std::pair<double, SequenceStream>> good = {{0.25, s}, {0.75, s}};
        CHECK(expected_ttc_lower_seq_mixed(good, {}) ==
              doctest::Approx(expected_ttc_lower_seq(s, SequenceStream{})).epsilon(1e-9));
    }
}

TEST_CASE("the bundled computation carries its verified-assumption notes") {
    const auto m = curve_model(4);
    const auto grid = default_time_grid(m, 0, 41);
    const auto res = compute_ttc(m, 0, grid, /*with_upper=*/true, /*with_asymptotic=*/true);
    CHECK(res.q.size() == grid.size());
    CHECK(res.q_upper.size() == grid.size());
    CHECK(res.q_asymptotic.size() == grid.size());
    CHECK(res.expected_ttc > 0.0);
    CHECK_FALSE(res.provenance.empty());

    const auto bare = compute_ttc(m, 0, grid, false, false);
    CHECK(bare.q_upper.empty());
    CHECK(bare.q_asymptotic.empty());
}

TEST_SUITE_END();
