#pragma once

#include <cstdint>
#include <random>

namespace midmile {

// mt19937_64 output is fully specified by the standard; the standard
// distributions are not. All draws go through the hand-rolled methods
// below so that runs are reproducible across standard libraries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  // Derives an independent stream from (seed, a, b), used to give each
  // individual of each generation its own reproducible stream.
  static RngStream child(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = mix(mix(mix(seed) ^ a) ^ b);
    return RngStream(s);
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n) by rejection; n must be > 0.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  bool chance(double p) { return next_double() < p; }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace midmile
