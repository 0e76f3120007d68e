#include "shockmetrics/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace shockmetrics {

namespace {

constexpr double kEps = 1e-16;
constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;
constexpr int kMaxIter = 40000;

void check_domain(double a, double x) {
    if (!(a > 0.0))
        throw std::domain_error("reg_lower_inc_gamma: shape a must be positive, got " +
                                std::to_string(a));
    if (!(x >= 0.0))
        throw std::domain_error("reg_lower_inc_gamma: argument x must be nonnegative, got " +
                                std::to_string(x));
}

// log of the common prefactor x^a e^{-x} / Gamma(a).
double log_prefactor(double a, double x) {
    return a * std::log(x) - x - std::lgamma(a);
}

// Series for P(a, x), valid and fast for x < a + 1.
double lower_series_scaled(double a, double x) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps) return sum;
    }
    throw std::runtime_error("reg_lower_inc_gamma: series did not converge");
}

// Modified Lentz continued fraction for Q(a, x), valid for x >= a + 1.
// Returns the fraction h with Q = prefactor * h.
double upper_cf_scaled(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw std::runtime_error("reg_lower_inc_gamma: continued fraction did not converge");
}

}  // namespace

double reg_lower_inc_gamma(double a, double x) {
    check_domain(a, x);
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) {
        const double lp = log_prefactor(a, x);
        return lower_series_scaled(a, x) * std::exp(lp);
    }
    const double q = reg_upper_inc_gamma(a, x);
    return 1.0 - q;
}

double reg_upper_inc_gamma(double a, double x) {
    check_domain(a, x);
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) {
        const double lp = log_prefactor(a, x);
        return 1.0 - lower_series_scaled(a, x) * std::exp(lp);
    }
    const double lp = log_prefactor(a, x);
    const double h = upper_cf_scaled(a, x);
    if (lp < -745.0) return 0.0;
    return std::exp(lp) * h;
}

double log_reg_upper_inc_gamma(double a, double x) {
    check_domain(a, x);
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) {
        // Q is not small on this branch (x below the mean), 1 - P is safe.
        const double lp = log_prefactor(a, x);
        const double p = lower_series_scaled(a, x) * std::exp(lp);
        if (p >= 1.0) return -std::numeric_limits<double>::infinity();
        return std::log1p(-p);
    }
    const double lp = log_prefactor(a, x);
    const double h = upper_cf_scaled(a, x);
    return lp + std::log(h);
}

}  // namespace shockmetrics
