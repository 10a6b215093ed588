#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cga {

/// Deterministic RNG wrapper. mt19937_64 has a standard-defined stream, and
/// the uniform mapping below avoids std::uniform_real_distribution, whose
/// output is implementation-defined; results are reproducible across
/// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling keeps the draw unbiased.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  /// FNV-1a label mixing for fanning one root seed out to independent
  /// sub-streams.
  static std::uint64_t derive(std::uint64_t root, std::string_view label) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](unsigned char b) {
      h ^= b;
      h *= 1099511628211ull;
    };
    for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(root >> (8 * i)));
    for (char c : label) mix(static_cast<unsigned char>(c));
    return h;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cga
