#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace apd {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u32 = std::uint32_t;

// Largest supported modulus. Images are stored as 32-bit values and all
// residue arithmetic is done in i64, so products like t*p(x) stay below 2^62.
// Constants larger than this (catalog module) live in arbitrary precision.
inline constexpr i64 max_modulus = (i64(1) << 31) - 1;

inline i64 floor_mod(i64 v, i64 n) {
  i64 r = v % n;
  return r < 0 ? r + n : r;
}

// Canonical offset representative in (-n/2, n/2]. For even n the value n/2 is
// kept and -n/2 never occurs.
inline i64 centered(i64 v, i64 n) {
  i64 r = floor_mod(v, n);
  return 2 * r > n ? r - n : r;
}

}  // namespace apd
