#include "apd/intseq.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace apd {

IntVerdict verify_int(const IntPerm& p) {
  const i64 k = p.k();
  const auto& im = p.images;
  for (i64 a = 0; a < k; ++a) {
    for (i64 c = a + 2; c < k; c += 2) {
      const i64 b = (a + c) / 2;
      if (static_cast<i64>(im[a]) + static_cast<i64>(im[c]) ==
          2 * static_cast<i64>(im[b])) {
        return {false, a, b, c};
      }
    }
  }
  return {true, -1, -1, -1};
}

namespace {

// rec(k) destroys integer APs; evens of the index set map below odds.
std::vector<u32> rec(i64 k) {
  if (k <= 2) {
    std::vector<u32> out(static_cast<size_t>(k));
    for (i64 i = 0; i < k; ++i) out[static_cast<size_t>(i)] = static_cast<u32>(i);
    return out;
  }
  const i64 h = (k + 1) / 2;  // evens 0,2,...: h of them
  const std::vector<u32> lo = rec(h);
  const std::vector<u32> hi = rec(k - h);
  std::vector<u32> out(static_cast<size_t>(k));
  for (i64 i = 0; i < h; ++i) out[static_cast<size_t>(2 * i)] = lo[static_cast<size_t>(i)];
  for (i64 i = 0; i < k - h; ++i)
    out[static_cast<size_t>(2 * i + 1)] = static_cast<u32>(h + hi[static_cast<size_t>(i)]);
  return out;
}

}  // namespace

IntPerm int_ap_destroyer(i64 k) {
  if (k < 1) throw std::invalid_argument("int_ap_destroyer: k must be positive");
  static std::mutex mu;
  static std::map<i64, IntPerm> cache;
  {
    const std::lock_guard<std::mutex> lock(mu);
    const auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  IntPerm p{rec(k)};
  const IntVerdict v = verify_int(p);
  if (!v.pass) throw std::logic_error("int_ap_destroyer: construction failed verification");
  const std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(k, std::move(p)).first->second;
}

std::vector<i64> transport(const IntPerm& p, i64 start, i64 step) {
  std::vector<i64> out(p.images.size());
  for (size_t i = 0; i < p.images.size(); ++i)
    out[i] = start + step * static_cast<i64>(p.images[i]);
  return out;
}

}  // namespace apd
