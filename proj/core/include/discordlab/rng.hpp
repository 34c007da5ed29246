#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "discordlab/complex_matrix.hpp"

namespace discordlab {

/// splitmix64 finalizer; full-avalanche 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Substream key for sample `index` under a scan seed. Samples are a pure
/// function of (seed, index), so evaluation order and worker count never
/// change the ensemble.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index));
}

/// Deterministic random stream: mt19937_64 driven uniforms plus standard
/// normal variates via the polar (Marsaglia) transform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0,1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Two independent standard normal variates.
    std::pair<double, double> gaussian_pair() {
        double x, y, s;
        do {
            x = 2.0 * uniform() - 1.0;
            y = 2.0 * uniform() - 1.0;
            s = x * x + y * y;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        return {x * f, y * f};
    }

    /// Gaussian complex number with independent N(0,1) real and imaginary parts.
    cdouble complex_gaussian() {
        const auto [re, im] = gaussian_pair();
        return {re, im};
    }

private:
    std::mt19937_64 engine_;
};

} // namespace discordlab
