#pragma once

#include <vector>

#include "apd/common.hpp"

namespace apd {

// Bijection of {0,...,k-1} read over the integers: destroys every 3-term
// integer AP, i.e. no a + c = 2b (not all equal) with images also in AP.
struct IntPerm {
  std::vector<u32> images;
  i64 k() const { return static_cast<i64>(images.size()); }
};

struct IntVerdict {
  bool pass = false;
  i64 a = -1, b = -1, c = -1;
};

// O(k^2) enumeration over same-parity endpoint pairs.
IntVerdict verify_int(const IntPerm& p);

// Deterministic construction: even indices keep their order and fill the low
// half, odd indices fill the high half, and the two rank sequences are built
// recursively. An endpoint pair with equal-parity indices lands either in one
// half (reducing to the recursive instance) or splits midpoint from endpoints
// across halves, where image sums cannot balance. Verified before returning.
IntPerm int_ap_destroyer(i64 k);

// Positional transport onto the AP {start, start + step, ...}: element at
// index i of the progression moves to index p(i); returns the image list
// out[i] = start + step * p(i).
std::vector<i64> transport(const IntPerm& p, i64 start, i64 step);

}  // namespace apd
