#include "apd/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "apd/parallel.hpp"
#include "apd/rng.hpp"

namespace apd {

namespace {

constexpr i64 search_ceiling = 512;
constexpr i64 exhaust_ceiling = 10;

struct Triple {
  int16_t a, b, c, t;
};

// Constraint triples grouped by their largest index, deduplicated across
// patterns that coincide mod n. A triple with max index i involves only
// assigned points once p(0..i) are set.
std::vector<std::vector<Triple>> build_triples(i64 n, const std::vector<Pattern>& patterns) {
  std::set<std::pair<i64, i64>> seen;
  std::vector<std::vector<Triple>> by_max(static_cast<size_t>(n));
  for (const Pattern& pat : patterns) {
    const i64 sm = floor_mod(pat.s, n);
    const i64 tm = floor_mod(pat.t, n);
    if (!seen.insert({sm, tm}).second) continue;
    for (i64 a = 0; a < n; ++a) {
      i64 c = floor_mod(sm - a, n);
      for (i64 b = 0; b < n; ++b) {
        if (!(a == b && b == c)) {
          const i64 mx = std::max({a, b, c});
          by_max[static_cast<size_t>(mx)].push_back({static_cast<int16_t>(a),
                                                     static_cast<int16_t>(b),
                                                     static_cast<int16_t>(c),
                                                     static_cast<int16_t>(tm)});
        }
        c += 2;
        if (c >= n) c -= n;
      }
    }
  }
  return by_max;
}

struct Worker {
  i64 n = 0;
  const std::vector<std::vector<Triple>>* by_max = nullptr;
  bool exhaustive = false;
  i64 node_limit = 0;
  std::atomic<bool>* stop = nullptr;

  std::vector<i64> perm, order;
  std::vector<char> used;
  i64 nodes = 0, count = 0;
  bool limit_hit = false;
  std::vector<i64> witness;

  bool ok_at(i64 idx) const {
    for (const Triple& tr : (*by_max)[static_cast<size_t>(idx)]) {
      i64 v = perm[static_cast<size_t>(tr.a)] + perm[static_cast<size_t>(tr.c)] -
              2 * perm[static_cast<size_t>(tr.b)];
      v %= n;
      if (v < 0) v += n;
      if (v == tr.t) return false;
    }
    return true;
  }

  // true unwinds the whole search: first witness, exhausted budget, or a stop
  // signalled by another worker.
  bool place(i64 idx, i64 v) {
    ++nodes;
    if (node_limit > 0 && nodes > node_limit) {
      limit_hit = true;
      return true;
    }
    if (stop != nullptr && (nodes & 1023) == 0 && stop->load(std::memory_order_relaxed))
      return true;
    perm[static_cast<size_t>(idx)] = v;
    used[static_cast<size_t>(v)] = 1;
    bool done = false;
    if (ok_at(idx)) {
      if (idx == n - 1) {
        ++count;
        if (witness.empty()) witness = perm;
        if (!exhaustive) {
          if (stop != nullptr) stop->store(true, std::memory_order_relaxed);
          done = true;
        }
      } else {
        done = descend(idx + 1);
      }
    }
    used[static_cast<size_t>(v)] = 0;
    return done;
  }

  bool descend(i64 idx) {
    for (i64 v : order) {
      if (used[static_cast<size_t>(v)]) continue;
      if (place(idx, v)) return true;
    }
    return false;
  }
};

void init_worker(Worker& w, i64 n, const std::vector<std::vector<Triple>>& by_max,
                 const SearchConfig& cfg, const std::vector<i64>& order,
                 std::atomic<bool>* stop) {
  w.n = n;
  w.by_max = &by_max;
  w.exhaustive = cfg.exhaustive;
  w.node_limit = cfg.node_limit;
  w.stop = stop;
  w.perm.assign(static_cast<size_t>(n), -1);
  w.used.assign(static_cast<size_t>(n), 0);
  w.order = order;
}

}  // namespace

SearchResult search_perm(i64 n, const SearchConfig& config) {
  if (n < 1) throw std::invalid_argument("search_perm: modulus must be positive");
  if (n > search_ceiling)
    throw std::invalid_argument("search_perm: modulus exceeds the search ceiling of " +
                                std::to_string(search_ceiling));
  if (config.node_limit < 0)
    throw std::invalid_argument("search_perm: node limit must be non-negative");

  const std::vector<std::vector<Triple>> by_max = build_triples(n, config.patterns);
  std::vector<i64> order(static_cast<size_t>(n));
  for (i64 v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
  if (config.seed != 0) {
    SplitMix64 g{config.seed};
    for (i64 i = n - 1; i > 0; --i)
      std::swap(order[static_cast<size_t>(i)],
                order[static_cast<size_t>(g.bounded(static_cast<u64>(i) + 1))]);
  }

  // A shared node budget would make the limit-versus-none verdict depend on
  // scheduling, so bounded runs stay sequential.
  const i64 root_idx = config.normalize ? 1 : 0;
  i64 threads = config.node_limit == 0 ? static_cast<i64>(resolve_threads(static_cast<int>(config.threads))) : 1;
  if (threads > n - root_idx) threads = n - root_idx;
  if (threads < 1) threads = 1;

  SearchResult res;
  std::vector<Worker> workers(static_cast<size_t>(threads));

  if (threads <= 1) {
    Worker& w = workers[0];
    init_worker(w, n, by_max, config, order, nullptr);
    if (config.normalize)
      (void)w.place(0, 0);
    else
      (void)w.descend(0);
  } else {
    std::atomic<bool> stop{false};
    std::vector<std::thread> pool;
    for (i64 i = 0; i < threads; ++i) {
      Worker& w = workers[static_cast<size_t>(i)];
      init_worker(w, n, by_max, config, order, &stop);
      pool.emplace_back([&w, &stop, &order, root_idx, i, threads, normalize = config.normalize] {
        if (normalize) {
          w.perm[0] = 0;
          w.used[0] = 1;
        }
        i64 seen = 0;
        for (i64 v : order) {
          if (w.used[static_cast<size_t>(v)]) continue;
          const bool mine = seen % threads == i;
          ++seen;
          if (!mine) continue;
          if (stop.load(std::memory_order_relaxed)) break;
          if (w.place(root_idx, v)) break;
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }

  for (const Worker& w : workers) {
    res.nodes += w.nodes;
    res.count += w.count;
    if (w.limit_hit) res.status = SearchStatus::limit;
    if (!res.witness.has_value() && !w.witness.empty()) res.witness = make_perm(w.witness);
  }
  if (res.status != SearchStatus::limit)
    res.status = res.count > 0 ? SearchStatus::found : SearchStatus::none;
  res.deterministic_witness = threads <= 1 || config.exhaustive;

  if (res.witness.has_value() && !check_patterns(*res.witness, config.patterns).pass)
    throw std::logic_error("search_perm: witness failed re-verification");
  return res;
}

i64 exhaust_count(i64 n, const std::vector<Pattern>& patterns, bool normalize) {
  if (n < 1) throw std::invalid_argument("exhaust_count: modulus must be positive");
  if (n > exhaust_ceiling)
    throw std::invalid_argument("exhaust_count: modulus exceeds the enumeration ceiling of " +
                                std::to_string(exhaust_ceiling));
  SearchConfig cfg;
  cfg.patterns = patterns;
  cfg.normalize = normalize;
  cfg.exhaustive = true;
  cfg.threads = 1;
  return search_perm(n, cfg).count;
}

}  // namespace apd
