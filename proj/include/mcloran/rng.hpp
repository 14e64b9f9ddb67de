#pragma once

// Reproducible random generation.
//
// Every stochastic quantity in the toolkit is drawn from an explicitly
// specified algorithm so that a (scenario, seed) pair produces identical
// output everywhere:
//   * stream seeds are derived with splitmix64 from the master seed and an
//     FNV-1a hash of a textual stream tag, so generation order between
//     streams does not matter;
//   * raw bits come from std::mt19937_64 (fully specified by the standard);
//   * uniform doubles are (x >> 11) * 2^-53, giving [0, 1);
//   * normals use the Box-Muller transform on those uniforms, with the
//     second variate of each pair cached.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace mcloran {

inline constexpr std::uint64_t FNV64_OFFSET = 1469598103934665603ULL;
inline constexpr std::uint64_t FNV64_PRIME = 1099511628211ULL;

inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t hash = FNV64_OFFSET) {
    for (unsigned char c : data) {
        hash ^= c;
        hash *= FNV64_PRIME;
    }
    return hash;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic substream seed from a master seed and a stream tag.
inline std::uint64_t substream_seed(std::uint64_t master, std::string_view tag) {
    std::uint64_t state = master ^ fnv1a64(tag);
    return splitmix64(state);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Normal variate, Box-Muller.
    double normal(double mean = 0.0, double sigma = 1.0) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + sigma * spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return mean + sigma * r * std::cos(theta);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// -1 or +1 with equal probability.
    double sign() { return bernoulli(0.5) ? 1.0 : -1.0; }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace mcloran
