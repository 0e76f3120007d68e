#pragma once

#include <cstdint>
#include <random>

namespace shockmetrics {

// Deterministic random stream.  All samplers are implemented on top of the
// raw 64-bit output so results are bit-identical across standard libraries
// (std::*_distribution would not be).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Derive an independent stream from (seed, index...) without correlating
    // nearby indices; used for per-replication and per-node streams.
    static Rng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on (0, 1): never returns 0 or 1, safe under log().
    double uniform01();

    double exponential(double rate);
    double weibull(double shape, double scale);
    double uniform(double a, double b);
    double normal();
    // Marsaglia-Tsang for shape >= 1, boosted for shape < 1.
    double gamma(double shape, double rate);
    int binomial(int trials, double p);

private:
    std::mt19937_64 engine_;
};

// splitmix64 step, also used for seed mixing.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace shockmetrics
