#pragma once

#include <string>
#include <vector>

#include "apd/common.hpp"
#include "apd/perm.hpp"

namespace apd {

// Consecutive grouping of M blocks into floor(M/(t+1)) superblocks of t+1 or
// t+2 blocks each, the enlarged ones placed furthest clockwise.
struct SuperblockPlan {
  i64 M = 0, t = 0;
  std::vector<i64> group_sizes;
  std::vector<i64> group_start;  // first block index of each group, plus M
};

SuperblockPlan superblock_partition(i64 M, i64 t);

// chi(r*x + y) = r*chi_m(x) + chi_r(y) on Z_{rm}; requires m > 2.
Perm product_perm(const Perm& chi_m, const Perm& chi_r);

// Drop a fixed point at N-1, leaving a permutation of Z_{N-1}.
Perm restrict_at_fixed_point(const Perm& p);

// Greedily selected pairwise coprime terms of {first + j*diff}.
std::vector<i64> coprime_ap_terms(i64 first, i64 diff, i64 count);

// Block index of every element after each stage of the four-stage build:
// beta1 before any move, beta2 after the superblock interleave, beta3 after
// the block reorder (beta3 = master(beta2) pointwise), beta4 at the end.
struct StageTrace {
  i64 n = 0, m = 0, t = 0;
  std::vector<i64> beta1, beta2, beta3, beta4;
};

struct AlmostResult {
  Perm perm;
  StageTrace trace;
};

// Four-stage construction on Z_n with an M-block floor layout: deal each
// superblock round-robin so every block holds an AP of difference t+1 or t+2,
// move block j to slot master(j), apply a transported integer destroyer
// inside each slot, then reverse the dealing on the slot layout. With
// verify_master the master must pass the (4t+7, 4t+7)-almost check.
AlmostResult build_almost(i64 n, i64 t, const Perm& master, bool verify_master = true);

std::string stage_trace_json(const StageTrace& trace);

}  // namespace apd
