#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace polylap {

/// Dense full-spectrum work is O(n^3); domains above this size are refused.
inline constexpr int kFullSpectrumCap = 10000;

/// Ambient graphs above this vertex count are refused at construction.
inline constexpr int kAmbientVertexCap = 100000;

/// Raised when an eigensolve fails to converge, an assembled matrix violates
/// its symmetry tolerance, or another numeric contract is broken.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a Fourier grid is too coarse for the requested integrand.
/// The message names the minimum admissible grid size.
struct GridCertificateError : std::invalid_argument {
    GridCertificateError(int got, int required)
        : std::invalid_argument("fourier grid too coarse: N=" + std::to_string(got) +
                                ", need N >= " + std::to_string(required)),
          got_n(got), required_n(required) {}
    int got_n;
    int required_n;
};

/// Compensated (Kahan) accumulator. Bound verdicts compare sums that sit close
/// to analytic formulas, so plain accumulation error is worth avoiding.
class KahanSum {
  public:
    void add(double x) {
        const double y = x - carry_;
        const double t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

inline double kahan_total(std::span<const double> xs) {
    KahanSum s;
    for (double x : xs) s.add(x);
    return s.value();
}

/// Small deterministic RNG (splitmix64). Used wherever reproducible streams
/// matter more than statistical sophistication: CLI checks, property tests.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n).
    int next_below(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

  private:
    std::uint64_t state_;
};

}  // namespace polylap
