#pragma once

#include <cstdint>

namespace windmill {

// Portable deterministic generator (splitmix64). std::uniform_int_distribution is
// implementation-defined, so reports seeded through this stay byte-identical
// across platforms.
struct DetRand {
  std::uint64_t state;

  explicit DetRand(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0. Rejection-free modulo is fine at these sizes.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

}  // namespace windmill
