#include "shockmetrics/rng.hpp"

#include <cmath>

namespace shockmetrics {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng Rng::derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    // Avalanche the seed before each index is folded in; otherwise two seeds
    // differing only in low bits would produce permutations of the same
    // stream set across an index range.
    std::uint64_t s = seed;
    s = splitmix64(s) ^ (0x6a09e667f3bcc909ULL + a);
    s = splitmix64(s) ^ (0xbb67ae8584caa73bULL + b);
    return Rng(splitmix64(s));
}

double Rng::uniform01() {
    // 53-bit mantissa, shifted into (0, 1) by a half-ulp offset.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::exponential(double rate) { return -std::log(uniform01()) / rate; }

double Rng::weibull(double shape, double scale) {
    return scale * std::pow(-std::log(uniform01()), 1.0 / shape);
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double Rng::normal() {
    // Polar Box-Muller; the spare deviate is discarded to keep the
    // consumption pattern simple and deterministic.
    for (;;) {
        const double u = 2.0 * uniform01() - 1.0;
        const double v = 2.0 * uniform01() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
    }
}

double Rng::gamma(double shape, double rate) {
    if (shape < 1.0) {
        // Boost: draw Gamma(shape + 1) and scale by U^{1/shape}.
        const double g = gamma(shape + 1.0, rate);
        return g * std::pow(uniform01(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
}

int Rng::binomial(int trials, double p) {
    int k = 0;
    for (int i = 0; i < trials; ++i)
        if (uniform01() < p) ++k;
    return k;
}

}  // namespace shockmetrics
