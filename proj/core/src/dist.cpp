#include "shockmetrics/dist.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "shockmetrics/quadrature.hpp"
#include "shockmetrics/special.hpp"

namespace shockmetrics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void bad_param(const char* family, const char* constraint, double value) {
    std::ostringstream os;
    os << family << ": parameter constraint violated: " << constraint << " (got " << value
       << ")";
    throw std::invalid_argument(os.str());
}

// P(Z <= k) for Binomial(n, p) by direct pmf accumulation; n is small in
// practice (attack surface sizes), so the O(n) sum is exact enough.
double binomial_cdf_int(int k, int n, double p) {
    if (k < 0) return 0.0;
    if (k >= n) return 1.0;
    if (p <= 0.0) return 1.0;
    if (p >= 1.0) return k >= n ? 1.0 : 0.0;
    // pmf(0) computed in log space to survive large n.
    double logq = std::log1p(-p);
    double logp = std::log(p);
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) {
        double logpmf = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) -
                        std::lgamma(n - j + 1.0) + j * logp + (n - j) * logq;
        acc += std::exp(logpmf);
    }
    return acc < 1.0 ? acc : 1.0;
}

double binomial_survival_int(int k, int n, double p) {
    // P(Z > k) summed from the upper tail on its own branch.
    if (k < 0) return 1.0;
    if (k >= n) return 0.0;
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return 1.0;
    double logq = std::log1p(-p);
    double logp = std::log(p);
    double acc = 0.0;
    for (int j = k + 1; j <= n; ++j) {
        double logpmf = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) -
                        std::lgamma(n - j + 1.0) + j * logp + (n - j) * logq;
        acc += std::exp(logpmf);
    }
    return acc < 1.0 ? acc : 1.0;
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Weibull: return "weibull";
        case Family::Gamma: return "gamma";
        case Family::Exponential: return "exponential";
        case Family::UniformInterval: return "uniform";
        case Family::Binomial: return "binomial";
        case Family::Dirac: return "dirac";
        case Family::Empty: return "empty";
    }
    return "?";
}

DistributionSpec DistributionSpec::weibull(double shape, double scale) {
    return {Family::Weibull, shape, scale};
}
DistributionSpec DistributionSpec::gamma(double shape, double rate) {
    return {Family::Gamma, shape, rate};
}
DistributionSpec DistributionSpec::exponential(double rate) {
    return {Family::Exponential, rate, 0.0};
}
DistributionSpec DistributionSpec::uniform_interval(double a, double b) {
    return {Family::UniformInterval, a, b};
}
DistributionSpec DistributionSpec::binomial(int trials, double prob) {
    return {Family::Binomial, static_cast<double>(trials), prob};
}
DistributionSpec DistributionSpec::dirac(double atom) {
    return {Family::Dirac, atom, 0.0};
}
DistributionSpec DistributionSpec::empty() { return {Family::Empty, 0.0, 0.0}; }

void DistributionSpec::validate() const {
    switch (family) {
        case Family::Weibull:
            if (!(p1 > 0.0) || !std::isfinite(p1)) bad_param("weibull", "shape > 0", p1);
            if (!(p2 > 0.0) || !std::isfinite(p2)) bad_param("weibull", "scale > 0", p2);
            break;
        case Family::Gamma:
            if (!(p1 > 0.0) || !std::isfinite(p1)) bad_param("gamma", "shape > 0", p1);
            if (!(p2 > 0.0) || !std::isfinite(p2)) bad_param("gamma", "rate > 0", p2);
            break;
        case Family::Exponential:
            if (!(p1 > 0.0) || !std::isfinite(p1)) bad_param("exponential", "rate > 0", p1);
            break;
        case Family::UniformInterval:
            if (!(p1 >= 0.0) || !std::isfinite(p1))
                bad_param("uniform", "lower endpoint >= 0", p1);
            if (!(p2 > p1) || !std::isfinite(p2))
                bad_param("uniform", "upper endpoint > lower endpoint", p2);
            break;
        case Family::Binomial: {
            double n = p1;
            if (!(n >= 0.0) || n != std::floor(n) || !std::isfinite(n))
                bad_param("binomial", "trials is a nonnegative integer", n);
            if (!(p2 >= 0.0) || !(p2 <= 1.0)) bad_param("binomial", "prob in [0, 1]", p2);
            break;
        }
        case Family::Dirac:
            if (!(p1 >= 0.0) || !std::isfinite(p1)) bad_param("dirac", "atom >= 0", p1);
            break;
        case Family::Empty:
            break;
    }
}

bool DistributionSpec::is_discrete() const {
    return family == Family::Binomial || family == Family::Dirac;
}

double DistributionSpec::cdf(double x) const {
    if (x < 0.0) return 0.0;
    switch (family) {
        case Family::Weibull: return -std::expm1(-std::pow(x / p2, p1));
        case Family::Gamma: return reg_lower_inc_gamma(p1, p2 * x);
        case Family::Exponential: return -std::expm1(-p1 * x);
        case Family::UniformInterval:
            if (x <= p1) return 0.0;
            if (x >= p2) return 1.0;
            return (x - p1) / (p2 - p1);
        case Family::Binomial:
            return binomial_cdf_int(static_cast<int>(std::floor(x)),
                                    static_cast<int>(p1), p2);
        case Family::Dirac: return x >= p1 ? 1.0 : 0.0;
        case Family::Empty: return 0.0;
    }
    return 0.0;
}

double DistributionSpec::survival(double x) const {
    if (x < 0.0) return 1.0;
    switch (family) {
        case Family::Weibull: return std::exp(-std::pow(x / p2, p1));
        case Family::Gamma: return reg_upper_inc_gamma(p1, p2 * x);
        case Family::Exponential: return std::exp(-p1 * x);
        case Family::UniformInterval:
            if (x <= p1) return 1.0;
            if (x >= p2) return 0.0;
            return (p2 - x) / (p2 - p1);
        case Family::Binomial:
            return binomial_survival_int(static_cast<int>(std::floor(x)),
                                         static_cast<int>(p1), p2);
        case Family::Dirac: return x < p1 ? 1.0 : 0.0;
        case Family::Empty: return 1.0;
    }
    return 1.0;
}

double DistributionSpec::log_survival(double x) const {
    if (x < 0.0) return 0.0;
    switch (family) {
        case Family::Weibull: return -std::pow(x / p2, p1);
        case Family::Gamma: return log_reg_upper_inc_gamma(p1, p2 * x);
        case Family::Exponential: return -p1 * x;
        default: {
            double s = survival(x);
            return s > 0.0 ? std::log(s) : -kInf;
        }
    }
}

double DistributionSpec::mean() const {
    switch (family) {
        case Family::Weibull: return p2 * std::tgamma(1.0 + 1.0 / p1);
        case Family::Gamma: return p1 / p2;
        case Family::Exponential: return 1.0 / p1;
        case Family::UniformInterval: return 0.5 * (p1 + p2);
        case Family::Binomial: return p1 * p2;
        case Family::Dirac: return p1;
        case Family::Empty: return kInf;
    }
    return 0.0;
}

double DistributionSpec::sample(Rng& rng) const {
    switch (family) {
        case Family::Weibull: return rng.weibull(p1, p2);
        case Family::Gamma: return rng.gamma(p1, p2);
        case Family::Exponential: return rng.exponential(p1);
        case Family::UniformInterval: return rng.uniform(p1, p2);
        case Family::Binomial:
            return static_cast<double>(rng.binomial(static_cast<int>(p1), p2));
        case Family::Dirac: return p1;
        case Family::Empty:
            throw std::logic_error("cannot sample from the empty (no-event) distribution");
    }
    return 0.0;
}

AgingCheckResult check_nbu(const DistributionSpec& d, const std::vector<double>& grid,
                           double tol) {
    AgingCheckResult r;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i; j < grid.size(); ++j) {
            double z1 = grid[i], z2 = grid[j];
            if (z1 < 0.0 || z2 < 0.0) continue;
            double excess = d.survival(z1 + z2) - d.survival(z1) * d.survival(z2);
            if (excess > r.worst_violation) {
                r.worst_violation = excess;
                r.at_z1 = z1;
                r.at_z2 = z2;
            }
        }
    }
    r.holds = r.worst_violation <= tol;
    return r;
}

namespace {

// E[(Z - z)^+] = integral_z^inf survival(x) dx.
double tail_expectation(const DistributionSpec& d, double z) {
    switch (d.family) {
        case Family::Dirac: return z < d.p1 ? d.p1 - z : 0.0;
        case Family::Binomial: {
            int n = static_cast<int>(d.p1);
            double p = d.p2;
            if (p <= 0.0) return 0.0;
            double logq = p < 1.0 ? std::log1p(-p) : -kInf;
            double logp = std::log(p);
            double acc = 0.0;
            for (int k = static_cast<int>(std::floor(z)) + 1; k <= n; ++k) {
                double logpmf =
                    p < 1.0 ? std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                                  std::lgamma(n - k + 1.0) + k * logp + (n - k) * logq
                            : (k == n ? 0.0 : -kInf);
                acc += (k - z) * std::exp(logpmf);
            }
            return acc;
        }
        default:
            return integrate_survival([&d, z](double u) { return d.survival(z + u); },
                                      1e-10);
    }
}

}  // namespace

AgingCheckResult check_nbue(const DistributionSpec& d, const std::vector<double>& grid,
                            double tol) {
    double mu = d.mean();
    if (!std::isfinite(mu))
        throw std::invalid_argument(
            "used-life expectation check requires a finite mean");
    AgingCheckResult r;
    for (double z : grid) {
        if (z < 0.0) continue;
        double excess = tail_expectation(d, z) - mu * d.survival(z);
        if (excess > r.worst_violation) {
            r.worst_violation = excess;
            r.at_z1 = z;
        }
    }
    r.holds = r.worst_violation <= tol;
    return r;
}

}  // namespace shockmetrics
