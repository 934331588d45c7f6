#pragma once

#include <cstdint>

namespace geofrechet {

// Counter-based generator (splitmix64). Cheap to seed, so independent streams
// can be derived per (iteration, row) without sharing state across threads.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), exact (rejection sampling).
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b) {
  SplitMix64 s(a ^ (b + 0x632BE59BD9B4E019ull) * 0x9E3779B97F4A7C15ull);
  s.next();
  return s.next();
}

}  // namespace geofrechet
