#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace guechan {

// Reproducible random stream addressed by (seed, stream). Two streams with the
// same seed but different ids are statistically independent; identical
// (seed, stream) pairs reproduce identical draws on every platform (the
// mt19937_64 engine is specified bit-exactly by the standard and the Gaussian
// transform below is our own, so no libstdc++/libc++ divergence).
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream), engine_(mix(seed, stream)) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    // Derive an independent stream from the same seed.
    RngStream substream(std::uint64_t id) const {
        return RngStream(seed_, mix(stream_, id));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in (0, 1]; never returns 0 so log() below is safe.
    double next_uniform() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (pairs cached).
    double next_normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

private:
    // splitmix64 finalizer; used to hash (seed, stream) into an engine seed.
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace guechan
