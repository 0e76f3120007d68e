#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "shockmetrics/dist.hpp"
#include "shockmetrics/quadrature.hpp"
#include "shockmetrics/rng.hpp"

using namespace shockmetrics;

namespace {

std::vector<double> default_grid() {
    std::vector<double> g;
    for (double x = 0.0; x <= 12.0; x += 0.125) g.push_back(x);
    return g;
}

}  // namespace

TEST_SUITE_BEGIN("dist");

TEST_CASE("validate rejects out-of-range parameters") {
    CHECK_THROWS_AS(DistributionSpec::weibull(0.0, 1.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(DistributionSpec::weibull(1.0, -2.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(DistributionSpec::gamma(-1.0, 1.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(DistributionSpec::exponential(0.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(DistributionSpec::uniform_interval(2.0, 1.0).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(DistributionSpec::uniform_interval(-0.5, 1.0).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(DistributionSpec::binomial(-1, 0.5).validate(), std::invalid_argument);
    CHECK_THROWS_AS(DistributionSpec::binomial(3, 1.5).validate(), std::invalid_argument);
    CHECK_THROWS_AS(DistributionSpec::dirac(-1.0).validate(), std::invalid_argument);
    CHECK_NOTHROW(DistributionSpec::empty().validate());
}

TEST_CASE("cdf and survival are complementary") {
    const std::vector<DistributionSpec> specs = {
        DistributionSpec::weibull(1.7, 2.0),  DistributionSpec::gamma(2.5, 1.3),
        DistributionSpec::exponential(0.8),   DistributionSpec::uniform_interval(0.5, 2.0),
        DistributionSpec::binomial(6, 0.35),  DistributionSpec::dirac(1.25),
    };
    for (const auto& d : specs) {
        for (double x = 0.0; x <= 8.0; x += 0.31) {
            CHECK(d.cdf(x) + d.survival(x) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(d.cdf(x) >= 0.0);
            CHECK(d.survival(x) >= 0.0);
        }
    }
}

TEST_CASE("log_survival agrees with survival") {
    const std::vector<DistributionSpec> specs = {
        DistributionSpec::weibull(2.0, 3.0),
        DistributionSpec::gamma(1.5, 0.7),
        DistributionSpec::exponential(1.1),
    };
    for (const auto& d : specs) {
        for (double x = 0.1; x <= 20.0; x *= 1.7) {
            const double s = d.survival(x);
            if (s > 0.0) {
                CHECK(std::exp(d.log_survival(x)) == doctest::Approx(s).epsilon(1e-11));
            }
        }
    }
    // Deep in the tail the log form keeps resolution the linear form loses.
    const auto e = DistributionSpec::exponential(1.0);
    CHECK(e.log_survival(800.0) == doctest::Approx(-800.0).epsilon(1e-12));
}

TEST_CASE("mean matches the integral of the survival function") {
    const std::vector<DistributionSpec> specs = {
        DistributionSpec::weibull(2.0, 3.0),    DistributionSpec::gamma(2.0, 1.0),
        DistributionSpec::exponential(0.5),     DistributionSpec::uniform_interval(1.0, 2.0),
        DistributionSpec::binomial(10, 0.3),    DistributionSpec::dirac(2.5),
    };
    for (const auto& d : specs) {
        const double by_quad =
            integrate_survival([&](double t) { return d.survival(t); }, 1e-10);
        CHECK(d.mean() == doctest::Approx(by_quad).epsilon(1e-6));
    }
}

TEST_CASE("binomial cdf equals the partial pmf sum") {
    const auto d = DistributionSpec::binomial(8, 0.4);
    auto pmf = [](int n, double p, int k) {
        double lp = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                    k * std::log(p) + (n - k) * std::log1p(-p);
        return std::exp(lp);
    };
    double acc = 0.0;
    for (int k = 0; k <= 8; ++k) {
        acc += pmf(8, 0.4, k);
        CHECK(d.cdf(static_cast<double>(k)) == doctest::Approx(acc).epsilon(1e-12));
        // Flat between the atoms.
        CHECK(d.cdf(k + 0.5) == doctest::Approx(acc).epsilon(1e-12));
    }
}

TEST_CASE("dirac is a unit step at its atom") {
    const auto d = DistributionSpec::dirac(1.5);
    CHECK(d.cdf(1.4999) == 0.0);
    CHECK(d.cdf(1.5) == 1.0);
    CHECK(d.survival(1.4999) == 1.0);
    CHECK(d.survival(1.5) == 0.0);
    CHECK(d.mean() == doctest::Approx(1.5));
    Rng g(1);
    CHECK(d.sample(g) == 1.5);
}

TEST_CASE("the empty distribution never produces an event") {
    const auto d = DistributionSpec::empty();
    CHECK(d.cdf(1e12) == 0.0);
    CHECK(d.survival(1e12) == 1.0);
    CHECK(std::isinf(d.mean()));
    Rng g(1);
    CHECK_THROWS_AS(d.sample(g), std::logic_error);
}

TEST_CASE("sampling matches the analytic mean") {
    Rng g(77);
    const auto d = DistributionSpec::uniform_interval(1.0, 3.0);
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += d.sample(g);
    CHECK(sum / n == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("aging checks separate light and heavy tails") {
    const auto grid = default_grid();

    SUBCASE("gamma with shape above one is new-better-than-used") {
        const auto d = DistributionSpec::gamma(2.0, 1.0);
        CHECK(check_nbu(d, grid, 1e-9).holds);
        CHECK(check_nbue(d, grid, 1e-9).holds);
    }
    SUBCASE("gamma with shape below one fails both checks") {
        const auto d = DistributionSpec::gamma(0.5, 1.0);
        const auto nbu = check_nbu(d, grid, 1e-9);
        CHECK_FALSE(nbu.holds);
        CHECK(nbu.worst_violation > 0.0);
        const auto nbue = check_nbue(d, grid, 1e-9);
        CHECK_FALSE(nbue.holds);
        CHECK(nbue.worst_violation > 0.0);
    }
    SUBCASE("the exponential sits exactly on the boundary") {
        const auto d = DistributionSpec::exponential(1.3);
        const auto nbu = check_nbu(d, grid, 1e-9);
        CHECK(nbu.holds);
        CHECK(nbu.worst_violation <= 1e-12);
        const auto nbue = check_nbue(d, grid, 1e-9);
        CHECK(nbue.holds);
        CHECK(nbue.worst_violation <= 1e-7);
    }
    SUBCASE("an infinite-mean input cannot be checked in expectation") {
        CHECK_THROWS_AS(check_nbue(DistributionSpec::empty(), grid, 1e-9),
                        std::invalid_argument);
    }
}

TEST_SUITE_END();
