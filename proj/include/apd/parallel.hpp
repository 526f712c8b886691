#pragma once

#include <functional>
#include <thread>
#include <vector>

#include "apd/common.hpp"

namespace apd {

inline int default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

inline int resolve_threads(int requested) {
  return requested <= 0 ? default_threads() : requested;
}

// Splits [0, total) into contiguous chunks and runs body(chunk_index, lo, hi)
// on its own thread per chunk. Callers combine per-chunk results in chunk
// order, which keeps every derived verdict independent of the thread count.
inline void parallel_chunks(i64 total, int threads,
                            const std::function<void(int, i64, i64)>& body) {
  if (total <= 0) return;
  int k = threads;
  if (static_cast<i64>(k) > total) k = static_cast<int>(total);
  if (k <= 1) {
    body(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(k));
  i64 base = total / k, rem = total % k, lo = 0;
  for (int c = 0; c < k; ++c) {
    i64 hi = lo + base + (c < rem ? 1 : 0);
    pool.emplace_back(body, c, lo, hi);
    lo = hi;
  }
  for (auto& th : pool) th.join();
}

}  // namespace apd
