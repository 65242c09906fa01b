#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace histopt {

/// Deterministic random stream: the same seed yields the same draw sequence
/// regardless of platform, so runs are reproducible bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  /// Unbiased integer in [0, n); n must be positive.
  int below(int n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t r;
    do {
      r = engine_();
    } while (r < min);
    return static_cast<int>(r % bound);
  }

  /// Standard normal via Box-Muller; consumes exactly two uniforms.
  double gaussian() {
    double u1;
    do {
      u1 = uniform01();
    } while (u1 == 0.0);
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

 private:
  static constexpr double kTwoPi = 6.283185307179586476925286766559;
  std::mt19937_64 engine_;
};

}  // namespace histopt
