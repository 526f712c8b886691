#pragma once

#include <utility>

#include "apd/verify.hpp"

namespace apd {

struct CrtBasis {
  std::vector<i64> moduli;
  i64 product = 1;
  // tables[i][v] = (e_i * v) mod product, where e_i is the idempotent
  // (N/n_i) * ((N/n_i)^{-1} mod n_i); combine is then a sum of lookups.
  std::vector<std::vector<u32>> tables;
};

// Rejects moduli < 2, non-coprime pairs (naming the pair and gcd), and
// products beyond the supported modulus bound.
CrtBasis make_basis(std::vector<i64> moduli);

std::vector<i64> split(i64 x, const CrtBasis& basis);
i64 combine(const std::vector<i64>& residues, const CrtBasis& basis);

// The componentwise master permutation: result(x) = combine(p_i(x mod n_i)).
Perm compose_perms(const std::vector<Perm>& components, const CrtBasis& basis);

struct CoverageReport {
  bool pass = false;
  std::string detail;
};

// Soundness preconditions for composing claimed destroyers into an
// (S,T)-almost destroyer: (a) every component claims 0 -> 0, (b) every
// nonzero (s, t) with |s| <= S, |t| <= T is claimed by some component,
// (c) every modulus exceeds 2S and 2T. Components are (modulus, claims).
CoverageReport check_coverage(
    const std::vector<std::pair<i64, std::vector<Pattern>>>& components, i64 S,
    i64 T);

}  // namespace apd
