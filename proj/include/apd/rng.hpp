#pragma once

#include <vector>

#include "apd/common.hpp"

namespace apd {

// splitmix64; fixed published constants so sampled permutations are
// reproducible across platforms and standard library versions.
struct SplitMix64 {
  u64 state;
  explicit SplitMix64(u64 seed) : state(seed) {}

  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, k), unbiased by rejection below (2^64 mod k)
  u64 bounded(u64 k) {
    u64 threshold = (0 - k) % k;
    for (;;) {
      u64 x = next();
      if (x >= threshold) return x % k;
    }
  }
};

// Fisher-Yates driven by the generator above.
inline std::vector<u32> random_images(i64 n, SplitMix64& g) {
  std::vector<u32> v(static_cast<size_t>(n));
  for (i64 i = 0; i < n; ++i) v[static_cast<size_t>(i)] = static_cast<u32>(i);
  for (i64 i = n - 1; i > 0; --i) {
    u64 j = g.bounded(static_cast<u64>(i) + 1);
    std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
  }
  return v;
}

}  // namespace apd
