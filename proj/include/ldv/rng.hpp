#pragma once

#include <cstdint>
#include <random>

namespace ldv {

/// Seeded deterministic random stream. Doubles are derived from the raw
/// 64-bit output directly (53-bit mantissa), so identical seeds yield
/// identical streams independent of the standard library's distribution
/// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniformIn(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace ldv
