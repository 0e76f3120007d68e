#pragma once

#include <string>
#include <vector>

#include "shockmetrics/rng.hpp"

namespace shockmetrics {

enum class Family {
    Weibull,         // shape alpha > 0, scale > 0
    Gamma,           // shape k > 0, rate rho > 0
    Exponential,     // rate rho > 0
    UniformInterval, // 0 <= a < b
    Binomial,        // trials n >= 0, success prob p in [0, 1]
    Dirac,           // atom x >= 0
    Empty,           // no events ever: cdf == 0, survival == 1, mean = +inf
};

const char* family_name(Family f);

// A parametric one-dimensional nonnegative distribution.  The two parameter
// slots are family-specific; use the named factories.
struct DistributionSpec {
    Family family = Family::Empty;
    double p1 = 0.0;
    double p2 = 0.0;

    static DistributionSpec weibull(double shape, double scale);
    static DistributionSpec gamma(double shape, double rate);
    static DistributionSpec exponential(double rate);
    static DistributionSpec uniform_interval(double a, double b);
    static DistributionSpec binomial(int trials, double prob);
    static DistributionSpec dirac(double atom);
    static DistributionSpec empty();

    // Throws std::invalid_argument naming the violated parameter constraint.
    void validate() const;

    bool is_discrete() const;

    double cdf(double x) const;       // P(Z <= x), x >= 0
    double survival(double x) const;  // P(Z > x), computed on its own branch
    double log_survival(double x) const;
    double mean() const;              // +inf for Empty
    double sample(Rng& rng) const;    // throws std::logic_error for Empty

    bool operator==(const DistributionSpec&) const = default;
};

struct AgingCheckResult {
    bool holds = true;
    double worst_violation = 0.0;  // max positive excess over the inequality
    double at_z1 = 0.0;            // witness point(s) of the worst violation
    double at_z2 = 0.0;            // unused by the NBUE check
};

// New-better-than-used: survival(z1 + z2) <= survival(z1) * survival(z2) + tol
// over all ordered grid pairs.
AgingCheckResult check_nbu(const DistributionSpec& d, const std::vector<double>& grid,
                           double tol);

// New-better-than-used-in-expectation:
// integral_z^inf survival(x) dx <= mean * survival(z) + tol at every grid z.
// The tail integral uses the adaptive quadrature at absolute tolerance 1e-10
// for continuous families and exact sums for discrete ones.
// Throws std::invalid_argument for infinite-mean input.
AgingCheckResult check_nbue(const DistributionSpec& d, const std::vector<double>& grid,
                            double tol);

}  // namespace shockmetrics
