#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace evfusion {

/// Seedable generator whose output is identical on every platform.
///
/// The engine is std::mt19937_64, whose sequence the standard fixes. The
/// standard distributions are implementation-defined, so the mappings to
/// [0, 1) and to bounded integers are done here.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm =
      "mt19937_64; uniform01 = (draw >> 11) * 2^-53; below(n) = rejection sampling on 64-bit "
      "draws";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t below(std::size_t n) {
    const std::uint64_t bound = n;
    // Largest multiple of bound that fits; draws at or above it are rejected.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return static_cast<std::size_t>(x % bound);
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace evfusion
