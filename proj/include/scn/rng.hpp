#pragma once

#include <complex>
#include <cstdint>

namespace scn {

// xoshiro256++ with SplitMix64-derived per-stream seeding.
//
// Stream construction (pinned so that a (seed, stream) pair reproduces
// the same draws across builds): the SplitMix64 state starts at
//   (seed + 0x9E3779B97F4A7C15) xor (0xBF58476D1CE4E5B9 * (stream + 1))
// and its first four outputs fill the xoshiro256++ state.  The Monte
// Carlo driver gives every trial its own stream, which makes results
// independent of how trials are partitioned across worker threads.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(uint64_t seed, uint64_t stream = 0) {
        uint64_t sm = (seed + 0x9E3779B97F4A7C15ULL) ^
                      (0xBF58476D1CE4E5B9ULL * (stream + 1ULL));
        bool all_zero = true;
        for (auto& w : s_) {
            w = splitmix_next(sm);
            all_zero = all_zero && w == 0;
        }
        if (all_zero) s_[0] = 0x9E3779B97F4A7C15ULL;
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // 53-bit uniforms; the open variant excludes 0 so logs are safe.
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform01_open() { return double((next() >> 11) + 1) * 0x1.0p-53; }

    // Standard complex Gaussian, E|z|^2 = 1 (Re and Im independent
    // N(0, 1/2)), via the polar Box-Muller form:
    //   z = sqrt(-ln u1) * exp(2*pi*i*u2).
    std::complex<double> complex_gaussian() {
        const double r = std::sqrt(-std::log(uniform01_open()));
        const double theta = 6.283185307179586476925286766559 * uniform01();
        return {r * std::cos(theta), r * std::sin(theta)};
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    static uint64_t splitmix_next(uint64_t& x) {
        x += 0x9E3779B97F4A7C15ULL;
        uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t s_[4];
};

}  // namespace scn
