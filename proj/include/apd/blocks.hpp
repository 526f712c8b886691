#pragma once

#include <vector>

#include "apd/common.hpp"
#include "apd/perm.hpp"

namespace apd {

// Floor partition of Z_n into m consecutive blocks, beta(x) = floor(m*x/n).
struct BlockLayout {
  i64 n = 0, m = 0, k = 0, l = 0;
  std::vector<i64> bounds;  // m+1 boundaries, bounds[j] = ceil(j*n/m)
  i64 beta(i64 x) const { return m * x / n; }
  i64 size(i64 j) const { return bounds[j + 1] - bounds[j]; }
};

BlockLayout block_layout(i64 n, i64 m);

enum class Claim { one, two };

// Verdict of a block-index membership check over all AP triples mod n.
struct ClaimResult {
  bool pass = true;
  i64 a = -1, b = -1, c = -1;  // failing triple when !pass
  i64 value = 0;               // centered block-sum mod m of that triple
};

// claim-1: under the hypothesis k >= m, beta(a) + beta(c) - 2 beta(b) lies in
// {0, +-1, +-2} mod m for every a + c = 2b (mod n), whichever blocks have size
// k+1. claim-2: the floor layout achieves {0, +-1} with no hypothesis on k.
ClaimResult check_claims(i64 n, i64 m, Claim which);

// Same check for an explicit size assignment: sizes must rearrange the floor
// multiset (l blocks of k+1, the rest of k).
ClaimResult check_claims_assignment(i64 n, i64 m, const std::vector<i64>& sizes,
                                    Claim which);

// Enumeration engines, both exact; exposed so tests can cross-validate them.
// Direct walks all (a, b) pairs in O(n^2). Intervals walks block pairs in
// O(m^2): for fixed blocks of a and b the set {2b - a} is a contiguous integer
// range, so the realizable blocks of c are read off the range ends; needs
// every block size >= 2.
ClaimResult check_beta_direct(i64 n, i64 m, const std::vector<i64>& bounds,
                              Claim which);
ClaimResult check_beta_intervals(i64 n, i64 m, const std::vector<i64>& bounds,
                                 Claim which);

// Floor layout, block j moved to slot master(j) with element order kept (slot
// boundaries are the reordered sizes laid end to end), then a transported
// integer destroyer applied inside each slot.
Perm build_destroyer(i64 n, const Perm& master, bool verify_master = true);

}  // namespace apd
