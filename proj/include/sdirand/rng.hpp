#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace sdirand {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace detail

/// xoshiro256++ generator with explicit (seed, stream) derivation.
///
/// Restarts, trials and simulation rounds each own a stream derived from
/// (seed, index), so results are identical no matter how work is split
/// across threads, and identical across platforms (no std:: distributions
/// are used anywhere in the library).
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::uint64_t sm = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        s_[0] = detail::splitmix64(sm);
        s_[1] = detail::splitmix64(sm);
        s_[2] = detail::splitmix64(sm);
        s_[3] = detail::splitmix64(sm);
    }

    std::uint64_t next_u64() {
        std::uint64_t* s = s_;
        const std::uint64_t result = detail::rotl(s[0] + s[3], 23) + s[0];
        const std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = detail::rotl(s[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform integer in [0, n). n must be >= 1.
    std::uint64_t uniform_int(std::uint64_t n) {
        std::uint64_t v = static_cast<std::uint64_t>(uniform01() * static_cast<double>(n));
        return v < n ? v : n - 1;
    }

    /// Standard normal via Box-Muller (deterministic, no cached spare).
    double gaussian() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t s_[4];
};

} // namespace sdirand
