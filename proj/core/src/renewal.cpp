#include "shockmetrics/renewal.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "shockmetrics/errors.hpp"
#include "shockmetrics/special.hpp"

namespace shockmetrics {

namespace {

void check_st(double s, double t) {
    if (!(s >= 0.0) || !(s <= 1.0))
        throw std::invalid_argument("pgf argument s must lie in [0, 1]");
    if (!(t >= 0.0)) throw std::invalid_argument("time must be nonnegative");
}

// Walks P(a, x) down the integer-step recurrence
//   P(a+1, x) = P(a, x) - x^a e^{-x} / Gamma(a+1).
// One full incomplete-gamma evaluation seeds the chain; every later value
// costs a handful of flops.  Absolute error stays at the seed's level because
// the subtracted terms are exact to rounding.
struct GammaLadder {
    bool ready = false;
    double x = 0.0;
    double a = 0.0;
    double p = 0.0;     // P(a, x)
    double term = 0.0;  // x^a e^{-x} / Gamma(a+1)

    void init(double a0, double x0) {
        x = x0;
        a = a0;
        p = reg_lower_inc_gamma(a0, x0);
        term = std::exp(a0 * std::log(x0) - x0 - std::lgamma(a0 + 1.0));
        ready = true;
    }
    void advance_to(double target) {
        auto steps = static_cast<std::int64_t>(std::llround(target - a));
        for (std::int64_t i = 0; i < steps; ++i) {
            p -= term;
            if (p < 0.0) p = 0.0;
            a += 1.0;
            term *= x / a;
        }
    }
};

// E[s^{N(t)}] for Gamma(shape, rate) inter-arrivals, x = rate * t.
// Summation by parts gives
//   E[s^N] = 1 - ((1-s)/s) * sum_{m>=1} s^m P(m*shape, x)
// and with m_lo chosen so P(m*shape, x) == 1 to machine precision for all
// m < m_lo, the head telescopes:
//   E[s^N] = s^{m_lo - 1} - ((1-s)/s) * sum_{m>=m_lo} s^m P(m*shape, x).
// The remaining sum only matters across the central window
// |m*shape - x| <= 12*sqrt(x) + 25 and is cut early once s^m < 1e-16.
double gamma_count_pgf(double shape, double x, double s) {
    if (s == 1.0) return 1.0;
    if (x == 0.0) return 1.0;
    if (s == 0.0) return reg_upper_inc_gamma(shape, x);

    const double logs = std::log(s);
    const double nbar = x / shape;  // asymptotic mean count

    // Second-order cumulant approximation exp(nbar*ln s + Var*ln^2 s / 2)
    // with Var = x / shape^2; absolute error below 1e-10 once nbar > 2e7.
    auto cumulant2 = [&]() {
        double v = nbar * logs + 0.5 * (nbar / shape) * logs * logs;
        double g = std::exp(v);
        return g < 1.0 ? g : 1.0;
    };
    if (nbar > 2e7) return cumulant2();

    const double w = 12.0 * std::sqrt(x) + 25.0;
    const double a_lo = x - w;
    const double a_hi = x + w;

    std::int64_t m_lo = 1;
    if (a_lo > shape)
        m_lo = static_cast<std::int64_t>(std::ceil(a_lo / shape));
    const auto m_hi = static_cast<std::int64_t>(std::floor(a_hi / shape));

    const double head = std::exp(static_cast<double>(m_lo - 1) * logs);  // s^{m_lo-1}
    if (head < 1e-18) return 0.0;  // window cannot rescue a dead head

    // Number of window terms that survive the geometric decay of s^m.
    std::int64_t m_cut = m_hi;
    if (logs < 0.0) {
        double lim = static_cast<double>(m_lo) - 36.9 / logs;  // s^lim ~ 1e-16
        if (lim < static_cast<double>(m_cut)) m_cut = static_cast<std::int64_t>(lim) + 1;
    }

    const double two_shape = 2.0 * shape;
    const bool half_integer_shape = std::abs(two_shape - std::llround(two_shape)) < 1e-9;
    constexpr std::int64_t kDirectCap = 20000;   // full evaluations, general shape
    constexpr std::int64_t kLadderCap = 5000000; // recurrence steps, half-integer shape
    if (!half_integer_shape && m_cut - m_lo + 1 > kDirectCap) return cumulant2();
    if (half_integer_shape &&
        static_cast<double>(m_cut - m_lo + 1) * shape > static_cast<double>(kLadderCap))
        return cumulant2();

    GammaLadder chains[2];  // fractional offsets 0.0 and 0.5
    double wsum = 0.0;      // sum_{m >= m_lo} s^m P(m*shape, x)
    double spow = head * s; // s^{m_lo}
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
        if (spow < 1e-16) break;
        const double a = static_cast<double>(m) * shape;
        double p;
        if (half_integer_shape) {
            const double fr = a - std::floor(a);
            GammaLadder& chain = chains[fr > 0.25 ? 1 : 0];
            if (!chain.ready)
                chain.init(a, x);
            else
                chain.advance_to(a);
            p = chain.p;
        } else {
            p = reg_lower_inc_gamma(a, x);
        }
        wsum += spow * p;
        spow *= s;
        if ((m - m_lo) % 4096 == 4095)  // refresh against multiplicative drift
            spow = std::exp(static_cast<double>(m + 1) * logs);
    }

    double g = head - (1.0 - s) / s * wsum;
    if (g < 0.0) g = 0.0;
    if (g > 1.0) g = 1.0;
    return g;
}

}  // namespace

double count_pmf(const CountingProcess& cp, int m, double t) {
    if (m < 0) throw std::invalid_argument("count must be nonnegative");
    if (!(t >= 0.0)) throw std::invalid_argument("time must be nonnegative");
    const DistributionSpec& g = cp.interarrival;
    if (g.family == Family::Empty) return m == 0 ? 1.0 : 0.0;
    if (t == 0.0) return m == 0 ? 1.0 : 0.0;
    switch (g.family) {
        case Family::Exponential: {
            const double xt = g.p1 * t;
            return std::exp(m * std::log(xt) - xt - std::lgamma(m + 1.0));
        }
        case Family::Gamma: {
            const double x = g.p2 * t;
            const double lo = m == 0 ? 1.0 : reg_lower_inc_gamma(m * g.p1, x);
            const double hi = reg_lower_inc_gamma((m + 1.0) * g.p1, x);
            const double d = lo - hi;
            return d > 0.0 ? d : 0.0;
        }
        case Family::Dirac: {
            if (!(g.p1 > 0.0))
                throw std::invalid_argument("deterministic inter-arrival must be positive");
            return static_cast<double>(std::floor(t / g.p1)) == static_cast<double>(m)
                       ? 1.0
                       : 0.0;
        }
        default:
            throw unsupported_family(
                std::string("no analytic convolution powers for inter-arrival family '") +
                family_name(g.family) + "'; use the simulator");
    }
}

double count_pgf(const CountingProcess& cp, double s, double t) {
    check_st(s, t);
    const DistributionSpec& g = cp.interarrival;
    if (g.family == Family::Empty) return 1.0;
    if (t == 0.0 || s == 1.0) return 1.0;
    switch (g.family) {
        case Family::Exponential:
            return std::exp(-g.p1 * t * (1.0 - s));
        case Family::Gamma:
            return gamma_count_pgf(g.p1, g.p2 * t, s);
        case Family::Dirac: {
            if (!(g.p1 > 0.0))
                throw std::invalid_argument("deterministic inter-arrival must be positive");
            const double n = std::floor(t / g.p1);
            if (n == 0.0) return 1.0;
            return s == 0.0 ? 0.0 : std::exp(n * std::log(s));
        }
        default:
            throw unsupported_family(
                std::string("no analytic convolution powers for inter-arrival family '") +
                family_name(g.family) + "'; use the simulator");
    }
}

double nbu_pgf_lower_bound(const CountingProcess& cp, double s, double t) {
    check_st(s, t);
    if (s == 1.0) return 1.0;
    const double ls = cp.interarrival.log_survival(t);
    if (std::isinf(ls)) return 0.0;
    return std::exp((1.0 - s) * ls);
}

}  // namespace shockmetrics
