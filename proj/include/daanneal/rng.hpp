#pragma once

#include <cstdint>
#include <random>

namespace daanneal {

/// Seeded generator with a fully specified output sequence.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the C++ standard.
/// The standard distributions are not portable across library vendors, so the
/// conversions below are defined here:
///   uniform()  = (next() >> 11) * 2^-53, a double in [0, 1)
///   below(m)   = next() mod m, rejecting draws below (2^64 - m) mod m
///   coin()     = top bit of next()
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t below(std::uint64_t m) {
    const std::uint64_t threshold = (0 - m) % m;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % m;
    }
  }

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Seed for replica `index` of a run with `master_seed`.
///
/// Frozen: z = master_seed + (index + 1) * 0x9E3779B97F4A7C15, then the
/// splitmix64 finalizer. The finalizer is a bijection on 64-bit words and the
/// increment is odd, so distinct indices below 2^64 never collide.
constexpr std::uint64_t derive_replica_seed(std::uint64_t master_seed, std::uint64_t index) {
  std::uint64_t z = master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace daanneal
