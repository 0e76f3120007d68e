#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "shockmetrics/dist.hpp"
#include "shockmetrics/errors.hpp"
#include "shockmetrics/quadrature.hpp"
#include "shockmetrics/renewal.hpp"
#include "shockmetrics/rng.hpp"

using namespace shockmetrics;

namespace {

CountingProcess process(DistributionSpec d) { return CountingProcess{d, 1e-12}; }

double poisson_pmf(double lambda, int m) {
    return std::exp(m * std::log(lambda) - lambda - std::lgamma(m + 1.0));
}

}  // namespace

TEST_SUITE_BEGIN("renewal");

TEST_CASE("exponential inter-arrivals give Poisson counts") {
    const auto cp = process(DistributionSpec::exponential(1.3));
    for (double t : {0.5, 2.0, 7.0}) {
        for (int m = 0; m <= 25; ++m) {
            CHECK(count_pmf(cp, m, t) ==
                  doctest::Approx(poisson_pmf(1.3 * t, m)).epsilon(1e-10));
        }
    }
}

TEST_CASE("gamma count probabilities form a distribution") {
    const auto cp = process(DistributionSpec::gamma(2.5, 1.2));
    for (double t : {0.3, 1.0, 4.0}) {
        // No arrival by t exactly when the first inter-arrival outlives t.
        CHECK(count_pmf(cp, 0, t) ==
              doctest::Approx(cp.interarrival.survival(t)).epsilon(1e-12));
        double total = 0.0;
        for (int m = 0; m <= 60; ++m) {
            const double p = count_pmf(cp, m, t);
            CHECK(p >= 0.0);
            total += p;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("deterministic inter-arrivals count whole periods") {
    const auto cp = process(DistributionSpec::dirac(0.75));
    CHECK(count_pmf(cp, 0, 0.5) == 1.0);
    CHECK(count_pmf(cp, 1, 0.8) == 1.0);
    CHECK(count_pmf(cp, 2, 0.8) == 0.0);
    CHECK(count_pmf(cp, 4, 3.0) == 1.0);  // floor(3 / 0.75) = 4
    CHECK(count_pgf(cp, 0.5, 3.0) == doctest::Approx(std::pow(0.5, 4.0)).epsilon(1e-14));
}

TEST_CASE("a process with no arrivals stays at zero") {
    const auto cp = process(DistributionSpec::empty());
    CHECK(count_pmf(cp, 0, 100.0) == 1.0);
    CHECK(count_pmf(cp, 1, 100.0) == 0.0);
    CHECK(count_pgf(cp, 0.3, 100.0) == 1.0);
}

TEST_CASE("families without convolution powers are refused with guidance") {
    const auto cp = process(DistributionSpec::weibull(2.0, 1.0));
    try {
        count_pgf(cp, 0.5, 1.0);
        FAIL("expected unsupported_family");
    } catch (const unsupported_family& e) {
        CHECK(std::string(e.what()).find("use the simulator") != std::string::npos);
    }
}

TEST_CASE("pgf boundary cases") {
    const auto cp = process(DistributionSpec::gamma(2.0, 1.0));
    CHECK(count_pgf(cp, 1.0, 5.0) == 1.0);
    CHECK(count_pgf(cp, 0.3, 0.0) == 1.0);
    CHECK_THROWS_AS(count_pgf(cp, -0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(count_pgf(cp, 1.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(count_pgf(cp, 0.5, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(count_pmf(cp, -1, 1.0), std::invalid_argument);
}

TEST_CASE("exponential pgf closed form") {
    const auto cp = process(DistributionSpec::exponential(0.9));
    for (double s : {0.0, 0.2, 0.5, 0.8, 0.99}) {
        for (double t : {0.1, 1.0, 5.0, 30.0}) {
            CHECK(count_pgf(cp, s, t) ==
                  doctest::Approx(std::exp(-0.9 * t * (1.0 - s))).epsilon(1e-10));
        }
    }
}

TEST_CASE("gamma pgf reference value") {
    const auto cp = process(DistributionSpec::gamma(2.0, 1.0));
    CHECK(count_pgf(cp, 0.8, 1.0) == doctest::Approx(0.944036557011289).epsilon(1e-12));
}

TEST_CASE("pgf equals the power series over count probabilities") {
    const auto cp = process(DistributionSpec::gamma(1.7, 2.0));
    for (double t : {0.4, 1.5, 3.0}) {
        for (double s : {0.2, 0.6, 0.95}) {
            double series = 0.0;
            for (int m = 0; m <= 120; ++m) series += std::pow(s, m) * count_pmf(cp, m, t);
            CHECK(count_pgf(cp, s, t) == doctest::Approx(series).epsilon(1e-9));
        }
    }
}

TEST_CASE("pgf matches a direct Monte Carlo estimate") {
    const auto cp = process(DistributionSpec::gamma(2.0, 1.5));
    const double s = 0.7, t = 2.5;
    Rng g(31415);
    const int reps = 20000;
    double sum = 0.0, sq = 0.0;
    for (int r = 0; r < reps; ++r) {
        double clock = 0.0;
        int n = 0;
        while (true) {
            clock += cp.interarrival.sample(g);
            if (clock > t) break;
            ++n;
        }
        const double x = std::pow(s, n);
        sum += x;
        sq += x * x;
    }
    const double mean = sum / reps;
    const double se = std::sqrt((sq / reps - mean * mean) / reps);
    const double exact = count_pgf(cp, s, t);
    CHECK(std::abs(mean - exact) < 4.0 * se + 1e-12);
}

TEST_CASE("integrated pgf satisfies the renewal identity") {
    // integral_0^inf E[s^N(t)] dt == mean inter-arrival / (1 - s).
    for (const auto& d :
         {DistributionSpec::gamma(2.0, 1.0), DistributionSpec::exponential(1.4)}) {
        const auto cp = process(d);
        for (double s : {0.3, 0.7}) {
            const double lhs =
                integrate_survival([&](double t) { return count_pgf(cp, s, t); }, 1e-9);
            CHECK(lhs == doctest::Approx(d.mean() / (1.0 - s)).epsilon(1e-6));
        }
    }
}

TEST_CASE("the aging lower bound sits below the pgf") {
    const auto cp = process(DistributionSpec::gamma(2.0, 1.0));
    for (double s : {0.1, 0.5, 0.9}) {
        for (double t : {0.2, 1.0, 4.0}) {
            CHECK(nbu_pgf_lower_bound(cp, s, t) <= count_pgf(cp, s, t) + 1e-12);
        }
    }
    // Reference value at s = 0.8, t = 1: survival(1)^(1-s) for Gamma(2, 1).
    CHECK(nbu_pgf_lower_bound(cp, 0.8, 1.0) ==
          doctest::Approx(0.9404746692461614).epsilon(1e-13));
}

TEST_CASE("the aging bound is tight exactly for exponential inter-arrivals") {
    const auto cp = process(DistributionSpec::exponential(1.2));
    for (double s : {0.0, 0.4, 0.85}) {
        for (double t : {0.5, 2.0, 10.0}) {
            CHECK(std::abs(nbu_pgf_lower_bound(cp, s, t) - count_pgf(cp, s, t)) <= 1e-12);
        }
    }
}

TEST_CASE("the pgf is continuous across the half-integer shape ladder") {
    const auto a = process(DistributionSpec::gamma(2.5, 1.0));
    const auto b = process(DistributionSpec::gamma(2.5 + 1e-12, 1.0));
    for (double t : {0.5, 2.0, 8.0}) {
        CHECK(count_pgf(a, 0.6, t) == doctest::Approx(count_pgf(b, 0.6, t)).epsilon(1e-9));
    }
}

TEST_SUITE_END();
