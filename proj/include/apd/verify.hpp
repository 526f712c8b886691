#pragma once

#include <optional>
#include <vector>

#include "apd/perm.hpp"

namespace apd {

// Pattern s -> t: forbidden transition a+c-2b = s, p(a)+p(c)-2p(b) = t, both
// mod n. Stored as plain integers; reduced to centered representatives
// against a concrete modulus at use time.
struct Pattern {
  i64 s = 0;
  i64 t = 0;
  bool operator==(const Pattern&) const = default;
};

struct Counterexample {
  i64 a, b, c;
  i64 eta1, eta2;  // centered offsets realized by the triple
};

struct Certificate {
  Perm perm;
  std::vector<Pattern> claims;
  bool pass = false;
  std::optional<Counterexample> counterexample;
};

// Exhaustive verdict for one pattern. Enumeration: for each (a, b) the third
// point is c = 2b - a + s; a triple is trivial exactly when a = b = c. On
// failure the lexicographically smallest (a, b) counterexample is reported,
// independent of thread count.
Certificate check_pattern(const Perm& p, Pattern pat, int threads = 0);

// All patterns in list order; first failing pattern supplies the counterexample.
Certificate check_patterns(const Perm& p, const std::vector<Pattern>& pats,
                           int threads = 0);

// (s,t)-almost AP destruction: every pattern s' -> t' with |s'| <= s,
// |t'| <= t. Requires 2s < n and 2t < n so the offsets name distinct residues.
Certificate check_almost(const Perm& p, i64 s, i64 t, int threads = 0);

// Number of ordered non-trivial triples realizing the pattern.
u64 count_survivors(const Perm& p, Pattern pat, int threads = 0);

struct SurvivorStats {
  i64 n = 0;
  u64 trials = 0;
  double mean = 0.0;
  double variance = 0.0;  // population variance over the trials
  u64 seed = 0;
};

// Mean/variance of count_survivors(., 0->0) over `trials` uniform random
// permutations drawn from the splitmix64/Fisher-Yates sampler; identical seed
// gives identical output.
SurvivorStats survivor_stats(i64 n, u64 trials, u64 seed, int threads = 0);

std::string certificate_json(const Certificate& cert);
std::string survivor_stats_json(const SurvivorStats& st);

}  // namespace apd
