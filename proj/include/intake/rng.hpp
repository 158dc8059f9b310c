#pragma once

#include <cmath>
#include <cstdint>

namespace intake {

// splitmix64 (Steele, Lea, Flood 2014). Chosen as the generator because its
// integer output sequence is reproducible from a 64-bit seed on any platform
// and trivially reimplemented in other languages.
//
// Floating-point helpers layered on top:
//   uniform:     (next() >> 11) * 2^-53              in [0, 1)
//   normal:      Box-Muller, sqrt(-2 ln u1) cos(2 pi u2), one draw per call
//   exponential: -mean * ln(1 - u)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform over [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) {
            u1 = uniform();
        }
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    double exponential(double mean) { return -mean * std::log1p(-uniform()); }

private:
    static constexpr double kPi = 3.14159265358979323846;
    std::uint64_t state_;
};

} // namespace intake
