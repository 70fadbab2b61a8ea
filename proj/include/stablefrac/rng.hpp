#pragma once

#include <cstdint>

namespace stablefrac {

// Counter-based splittable RNG (SplitMix64 core). A stream is fully
// determined by (seed, stream_id), so parallel workers can each own an
// independent stream without coordination and results are reproducible
// bit-for-bit under any scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed)) {}

    Rng(std::uint64_t seed, std::uint64_t stream_id)
        : state_(mix(seed ^ mix(stream_id + 0x632be59bd9b4e019ull))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform in the open interval (0,1).
    double uniform() {
        double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return u > 0.0 ? u : 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace stablefrac
