#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace deltaft {

/// Portable seeded randomness. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; bounded draws use rejection sampling
/// rather than std::uniform_int_distribution, whose algorithm is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return lo + static_cast<int>(x % span);
  }

  int sign() { return (next() & 1U) ? 1 : -1; }

 private:
  std::mt19937_64 engine_;
};

/// Seed for the index-th independent stream under a master seed (splitmix64).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace deltaft
