#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace glab {

/// Seeded generator with platform-independent helpers. All randomized
/// operations in the library take explicit seeds and route through this.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0,1) with 53 bits of precision.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Index sampled from a discrete distribution given by weights
    /// (assumed nonnegative, summing to ~1).
    int discrete(const std::vector<double>& weights) {
        double u = uniform01();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(weights.size()) - 1;
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace glab
