#include "apd/verify.hpp"

#include <atomic>
#include <climits>

#include <json.hpp>

#include "apd/parallel.hpp"
#include "apd/rng.hpp"

namespace apd {

namespace {

struct Hit {
  i64 a = -1, b = -1, c = -1;
};

// Scans a in [alo, ahi) for the first violating (a, b). Chunks with index
// above an already-hit chunk may abort early; lower chunks always finish, so
// the merged result is the global lexicographic minimum.
Hit scan_pattern(const Perm& p, i64 sm, i64 tm, i64 alo, i64 ahi, int chunk,
                 std::atomic<int>* first_hit_chunk) {
  const u32* P = p.images().data();
  const i64 n = p.n();
  for (i64 a = alo; a < ahi; ++a) {
    if (first_hit_chunk && first_hit_chunk->load(std::memory_order_relaxed) < chunk)
      return {};
    i64 c = floor_mod(sm - a, n);
    for (i64 b = 0; b < n; ++b) {
      if (!(a == b && b == c)) {
        i64 d = static_cast<i64>(P[a]) + P[c] - 2 * static_cast<i64>(P[b]) - tm;
        if (d % n == 0) {
          if (first_hit_chunk) {
            int cur = first_hit_chunk->load(std::memory_order_relaxed);
            while (chunk < cur &&
                   !first_hit_chunk->compare_exchange_weak(cur, chunk)) {
            }
          }
          return {a, b, c};
        }
      }
      c += 2;
      if (c >= n) c -= n;
    }
  }
  return {};
}

u64 scan_count(const Perm& p, i64 sm, i64 tm, i64 alo, i64 ahi) {
  const u32* P = p.images().data();
  const i64 n = p.n();
  u64 cnt = 0;
  for (i64 a = alo; a < ahi; ++a) {
    i64 c = floor_mod(sm - a, n);
    for (i64 b = 0; b < n; ++b) {
      if (!(a == b && b == c)) {
        i64 d = static_cast<i64>(P[a]) + P[c] - 2 * static_cast<i64>(P[b]) - tm;
        if (d % n == 0) ++cnt;
      }
      c += 2;
      if (c >= n) c -= n;
    }
  }
  return cnt;
}

std::optional<Counterexample> find_counterexample(const Perm& p, Pattern pat,
                                                  int threads) {
  const i64 n = p.n();
  const i64 sm = floor_mod(pat.s, n), tm = floor_mod(pat.t, n);
  int k = resolve_threads(threads);
  std::optional<Counterexample> out;
  if (k <= 1 || n < 256) {
    Hit h = scan_pattern(p, sm, tm, 0, n, 0, nullptr);
    if (h.a >= 0) out = Counterexample{h.a, h.b, h.c, centered(sm, n), centered(tm, n)};
    return out;
  }
  std::vector<Hit> hits(static_cast<size_t>(k) + 1);
  std::atomic<int> first_hit_chunk{INT_MAX};
  parallel_chunks(n, k, [&](int chunk, i64 lo, i64 hi) {
    hits[static_cast<size_t>(chunk)] =
        scan_pattern(p, sm, tm, lo, hi, chunk, &first_hit_chunk);
  });
  for (const Hit& h : hits)
    if (h.a >= 0) {
      out = Counterexample{h.a, h.b, h.c, centered(sm, n), centered(tm, n)};
      break;
    }
  return out;
}

}  // namespace

Certificate check_pattern(const Perm& p, Pattern pat, int threads) {
  auto cex = find_counterexample(p, pat, threads);
  return Certificate{p, {pat}, !cex.has_value(), cex};
}

Certificate check_patterns(const Perm& p, const std::vector<Pattern>& pats,
                           int threads) {
  for (const Pattern& pat : pats) {
    auto cex = find_counterexample(p, pat, threads);
    if (cex) return Certificate{p, pats, false, cex};
  }
  return Certificate{p, pats, true, std::nullopt};
}

Certificate check_almost(const Perm& p, i64 s, i64 t, int threads) {
  if (s < 0 || t < 0)
    throw std::invalid_argument("check_almost: s and t must be nonnegative");
  if (2 * s >= p.n() || 2 * t >= p.n())
    throw std::invalid_argument(
        "check_almost: need 2s < n and 2t < n (s=" + std::to_string(s) +
        ", t=" + std::to_string(t) + ", n=" + std::to_string(p.n()) + ")");
  std::vector<Pattern> pats;
  pats.reserve(static_cast<size_t>((2 * s + 1) * (2 * t + 1)));
  for (i64 sp = -s; sp <= s; ++sp)
    for (i64 tp = -t; tp <= t; ++tp) pats.push_back({sp, tp});
  return check_patterns(p, pats, threads);
}

u64 count_survivors(const Perm& p, Pattern pat, int threads) {
  const i64 n = p.n();
  const i64 sm = floor_mod(pat.s, n), tm = floor_mod(pat.t, n);
  int k = resolve_threads(threads);
  if (k <= 1 || n < 256) return scan_count(p, sm, tm, 0, n);
  std::vector<u64> parts(static_cast<size_t>(k) + 1, 0);
  parallel_chunks(n, k, [&](int chunk, i64 lo, i64 hi) {
    parts[static_cast<size_t>(chunk)] = scan_count(p, sm, tm, lo, hi);
  });
  u64 total = 0;
  for (u64 v : parts) total += v;
  return total;
}

SurvivorStats survivor_stats(i64 n, u64 trials, u64 seed, int threads) {
  if (trials < 1) throw std::invalid_argument("survivor_stats: trials must be >= 1");
  SplitMix64 gen(seed);
  long double sum = 0.0L, sumsq = 0.0L;
  for (u64 i = 0; i < trials; ++i) {
    Perm p(random_images(n, gen));
    u64 c = count_survivors(p, {0, 0}, threads);
    long double x = static_cast<long double>(c);
    sum += x;
    sumsq += x * x;
  }
  long double mean = sum / static_cast<long double>(trials);
  long double var = sumsq / static_cast<long double>(trials) - mean * mean;
  if (var < 0.0L) var = 0.0L;
  return SurvivorStats{n, trials, static_cast<double>(mean),
                       static_cast<double>(var), seed};
}

std::string certificate_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["n"] = cert.perm.n();
  j["perm"] = cert.perm.images();
  auto pats = nlohmann::ordered_json::array();
  for (const Pattern& pt : cert.claims)
    pats.push_back(nlohmann::ordered_json::array({pt.s, pt.t}));
  j["patterns"] = pats;
  j["verdict"] = cert.pass ? "pass" : "fail";
  if (cert.counterexample) {
    const Counterexample& cx = *cert.counterexample;
    j["counterexample"] = {{"a", cx.a},
                           {"b", cx.b},
                           {"c", cx.c},
                           {"eta1", cx.eta1},
                           {"eta2", cx.eta2}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j.dump();
}

std::string survivor_stats_json(const SurvivorStats& st) {
  nlohmann::ordered_json j;
  j["n"] = st.n;
  j["trials"] = st.trials;
  j["mean"] = st.mean;
  j["variance"] = st.variance;
  j["seed"] = st.seed;
  return j.dump();
}

}  // namespace apd
