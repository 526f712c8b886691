#pragma once

#include "apd/perm.hpp"

namespace apd {

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 x);

// Euler's criterion; validates that p is an odd prime.
int legendre(i64 a, i64 p);

struct XiWitness {
  i64 p;
  i64 xi;  // smallest residue with xi and xi-1 both non-residues
};

XiWitness find_xi(i64 p);  // p > 3 prime

// f(x) = x^2 for even x, xi*x^2 for odd x; requires p > 3, p = 3 (mod 8).
Perm prime_destroyer(i64 p);

// Whether a*x^2 + b*xy + c*y^2 = 0 (mod p) has a solution besides (0, 0);
// decided by legendre(b^2 - 4ac) != -1. Requires p odd prime not dividing
// a or c (the form's outer coefficients; b may be anything).
bool form_solvable(i64 a, i64 b, i64 c, i64 p);

}  // namespace apd
