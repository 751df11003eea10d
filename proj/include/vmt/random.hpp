#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "vmt/errors.hpp"

namespace vmt {

// Seeded counter-based random source. Hand-rolled xoshiro256++ (seeded via
// splitmix64) so that a given seed yields the same stream on every compiler;
// std::mt19937 distributions are not portable across standard libraries.
class RandomSource {
public:
    explicit RandomSource(uint64_t seed) : seed_(seed) {
        uint64_t x = seed;
        for (auto& s : state_) {
            // splitmix64
            x += 0x9e3779b97f4a7c15ull;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            s = z ^ (z >> 31);
        }
        if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0) {
            state_[0] = 1;
        }
    }

    uint64_t seed() const { return seed_; }
    uint64_t position() const { return position_; }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        ++position_;
        return result;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller. Two uniforms per draw, no caching, so
    // the stream position is a pure function of the number of draws.
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    // Uniform integer in [lo, hi).
    int64_t uniform_int(int64_t lo, int64_t hi) {
        if (hi <= lo) throw dim_error("uniform_int: empty range");
        return lo + static_cast<int64_t>(uniform() * static_cast<double>(hi - lo));
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<uint64_t, 4> state_{};
    uint64_t seed_ = 0;
    uint64_t position_ = 0;
};

}  // namespace vmt
