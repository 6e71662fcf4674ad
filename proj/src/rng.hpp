#pragma once

#include <cstdint>

namespace terrafold {

// SplitMix64. Chosen for the terrain generator because the whole sequence is
// pinned by the algorithm and a single seed, so generated corpora are
// reproducible from the documented recipe alone.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [1, bound] via rejection sampling (no modulo bias).
  uint64_t next_in(uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return 1 + x % bound;
  }
};

}  // namespace terrafold
