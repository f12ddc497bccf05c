#pragma once

#include <cstdint>
#include <random>

namespace satrrm {

// splitmix64, used both as a seed scrambler and to derive independent seed
// streams (per episode, per slot, ...) from one master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0) {
  std::uint64_t s = base;
  std::uint64_t h = splitmix64(s);
  s ^= a * 0x9e3779b97f4a7c15ULL;
  h ^= splitmix64(s);
  s ^= b * 0xc2b2ae3d27d4eb4fULL;
  h ^= splitmix64(s);
  return h;
}

// Uniform double in [lo, hi) from the top 53 bits of the engine. We roll our
// own instead of std::uniform_real_distribution so that streams are identical
// across standard libraries.
inline double uniform_double(std::mt19937_64& gen, double lo, double hi) {
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

/// Uniform index in [0, n). n must be >= 1.
inline int uniform_index(std::mt19937_64& gen, int n) {
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  const int k = static_cast<int>(u * n);
  return k >= n ? n - 1 : k;
}

}  // namespace satrrm
