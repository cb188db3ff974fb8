#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace lppl {

// splitmix64 finalizer; bijective on 64-bit values.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Small deterministic generator (splitmix64). One instance per logical
// stream; streams are derived by hashing identifying integers so that
// consumers are independent of execution order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

private:
    std::uint64_t state_;
};

// Stream keyed by (seed, a, b), e.g. one per calibration window (t2, t1).
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return SplitMix64(mix64(mix64(mix64(seed) ^ a) ^ b));
}

// Standard normal deviates via Box-Muller on top of SplitMix64. Keeps the
// spare value, so a stream yields a fixed sequence regardless of call sites.
class NormalStream {
public:
    explicit NormalStream(SplitMix64 rng) : rng_(rng) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] so the log is finite.
        double u1 = static_cast<double>((rng_.next() >> 11) + 1) * 0x1.0p-53;
        double u2 = rng_.uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace lppl
