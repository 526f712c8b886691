#pragma once

#include <optional>
#include <vector>

#include "apd/common.hpp"
#include "apd/perm.hpp"
#include "apd/verify.hpp"

namespace apd {

struct SearchConfig {
  std::vector<Pattern> patterns;
  bool normalize = true;  // pin p(0) = 0; sound, output translation is free
  i64 node_limit = 0;     // 0 = unlimited; otherwise assignments tried
  i64 threads = 1;
  u64 seed = 0;  // 0 = ascending value order, else a seeded shuffle
  bool exhaustive = false;
};

enum class SearchStatus { found, none, limit };

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<Perm> witness;
  i64 count = 0;  // exhaustive mode: witnesses seen (lower bound on limit)
  i64 nodes = 0;
  bool deterministic_witness = true;
};

// Depth-first assignment of p(0), p(1), ... with incremental pruning: a value
// is rejected as soon as some fully assigned triple realizes a forbidden
// pattern. Returned witnesses are re-verified before being handed out.
SearchResult search_perm(i64 n, const SearchConfig& config);

// Number of permutations of Z_n destroying all patterns, by full enumeration
// (normalize counts only those with p(0) = 0). Documented ceiling n <= 10.
i64 exhaust_count(i64 n, const std::vector<Pattern>& patterns, bool normalize = false);

}  // namespace apd
