#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace capstab {

/// Neumaier compensated accumulator. Quadrature sums and the exponential
/// integrals are differences of near-equal quantities, so plain summation
/// noise would leak into the h^2-scaled tolerances.
class KahanSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Deterministic xorshift-based generator for test fields and sample
/// placement. Fixed algorithm (not std::mt19937) so emitted artifacts are
/// bit-stable across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed * 2685821657736338717ULL + 1) {}

    std::uint64_t next_u64() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 2685821657736338717ULL;
    }

    /// Uniform in [0, 1).
    double next_double() { return (next_u64() >> 11) * (1.0 / 9007199254740992.0); }

    /// Uniform in [a, b).
    double uniform(double a, double b) { return a + (b - a) * next_double(); }

    /// Uniform integer in [0, n).
    int next_index(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

  private:
    std::uint64_t state_;
};

}  // namespace capstab
