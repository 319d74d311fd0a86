#pragma once

#include <cstdint>
#include <random>

namespace coupledfp {

/// Deterministic uniform double stream. Draws come straight from raw
/// mt19937_64 output, so sequences are identical across standard library
/// implementations (std::uniform_real_distribution is not portable).
class UniformSampler {
  public:
    explicit UniformSampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double unit() { return double(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Uniform integer in [0, n). Modulo bias is irrelevant at sampling scale.
    std::uint64_t index(std::uint64_t n) { return engine_() % n; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace coupledfp
