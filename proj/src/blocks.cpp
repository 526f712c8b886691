#include "apd/blocks.hpp"

#include <stdexcept>
#include <string>

#include "apd/intseq.hpp"
#include "apd/verify.hpp"

namespace apd {

BlockLayout block_layout(i64 n, i64 m) {
  if (n < 1 || n > max_modulus)
    throw std::invalid_argument("block_layout: modulus out of range: " + std::to_string(n));
  if (m < 1 || m > n)
    throw std::invalid_argument("block_layout: need 1 <= m <= n, got m=" + std::to_string(m) +
                                " n=" + std::to_string(n));
  BlockLayout lay;
  lay.n = n;
  lay.m = m;
  lay.k = n / m;
  lay.l = n - lay.k * m;
  lay.bounds.resize(static_cast<size_t>(m) + 1);
  for (i64 j = 0; j <= m; ++j)
    lay.bounds[static_cast<size_t>(j)] = (j * n + m - 1) / m;
  return lay;
}

namespace {

// Membership table for beta(a) + beta(c) - 2 beta(b), indexed value + 2m.
struct OkTable {
  std::vector<char> ok;
  bool all = true;
  explicit OkTable(i64 m, Claim which) {
    const i64 span = which == Claim::one ? 2 : 1;
    std::vector<char> res(static_cast<size_t>(m), 0);
    for (i64 d = -span; d <= span; ++d) res[static_cast<size_t>(floor_mod(d, m))] = 1;
    for (char r : res)
      if (!r) all = false;
    ok.assign(static_cast<size_t>(4 * m + 1), 0);
    for (i64 v = -2 * m; v <= 2 * m; ++v)
      ok[static_cast<size_t>(v + 2 * m)] = res[static_cast<size_t>(floor_mod(v, m))];
  }
};

std::vector<i64> beta_from_bounds(i64 n, i64 m, const std::vector<i64>& bounds) {
  if (static_cast<i64>(bounds.size()) != m + 1 || bounds.front() != 0 || bounds.back() != n)
    throw std::invalid_argument("block engine: bounds must cover [0, n) with m blocks");
  std::vector<i64> beta(static_cast<size_t>(n));
  for (i64 j = 0; j < m; ++j) {
    if (bounds[static_cast<size_t>(j)] >= bounds[static_cast<size_t>(j) + 1])
      throw std::invalid_argument("block engine: empty block " + std::to_string(j));
    for (i64 x = bounds[static_cast<size_t>(j)]; x < bounds[static_cast<size_t>(j) + 1]; ++x)
      beta[static_cast<size_t>(x)] = j;
  }
  return beta;
}

}  // namespace

ClaimResult check_beta_direct(i64 n, i64 m, const std::vector<i64>& bounds, Claim which) {
  const OkTable tab(m, which);
  if (tab.all) return {};
  const std::vector<i64> beta = beta_from_bounds(n, m, bounds);
  for (i64 a = 0; a < n; ++a) {
    i64 c = n - a;
    if (c == n) c = 0;
    for (i64 b = 0; b < n; ++b) {
      const i64 v = beta[static_cast<size_t>(a)] + beta[static_cast<size_t>(c)] -
                    2 * beta[static_cast<size_t>(b)];
      if (!tab.ok[static_cast<size_t>(v + 2 * m)])
        return {false, a, b, c, centered(floor_mod(v, m), m)};
      c += 2;
      if (c >= n) c -= n;
    }
  }
  return {};
}

ClaimResult check_beta_intervals(i64 n, i64 m, const std::vector<i64>& bounds, Claim which) {
  const OkTable tab(m, which);
  if (tab.all) return {};
  const std::vector<i64> beta = beta_from_bounds(n, m, bounds);
  for (i64 j = 0; j < m; ++j)
    if (bounds[static_cast<size_t>(j) + 1] - bounds[static_cast<size_t>(j)] < 2)
      throw std::invalid_argument("check_beta_intervals: needs every block size >= 2");

  auto fail_at = [&](i64 ja, i64 jb, i64 jc) -> ClaimResult {
    for (i64 a = bounds[static_cast<size_t>(ja)]; a < bounds[static_cast<size_t>(ja) + 1]; ++a)
      for (i64 b = bounds[static_cast<size_t>(jb)]; b < bounds[static_cast<size_t>(jb) + 1]; ++b) {
        const i64 c = floor_mod(2 * b - a, n);
        if (beta[static_cast<size_t>(c)] == jc)
          return {false, a, b, c, centered(floor_mod(ja + jc - 2 * jb, m), m)};
      }
    throw std::logic_error("check_beta_intervals: realizable block triple without witness");
  };

  for (i64 ja = 0; ja < m; ++ja) {
    for (i64 jb = 0; jb < m; ++jb) {
      const i64 lo = 2 * bounds[static_cast<size_t>(jb)] - (bounds[static_cast<size_t>(ja) + 1] - 1);
      const i64 hi = 2 * (bounds[static_cast<size_t>(jb) + 1] - 1) - bounds[static_cast<size_t>(ja)];
      if (hi - lo + 1 >= n) {
        for (i64 jc = 0; jc < m; ++jc)
          if (!tab.ok[static_cast<size_t>(ja + jc - 2 * jb + 2 * m)]) return fail_at(ja, jb, jc);
        continue;
      }
      i64 pos = lo;
      while (pos <= hi) {
        const i64 r = floor_mod(pos, n);
        const i64 jc = beta[static_cast<size_t>(r)];
        if (!tab.ok[static_cast<size_t>(ja + jc - 2 * jb + 2 * m)]) return fail_at(ja, jb, jc);
        pos += bounds[static_cast<size_t>(jc) + 1] - r;
      }
    }
  }
  return {};
}

namespace {

ClaimResult dispatch_engines(i64 n, i64 m, const std::vector<i64>& bounds, i64 k, Claim which) {
  if (OkTable(m, which).all) return {};
  if (k >= 2 && m >= 4) return check_beta_intervals(n, m, bounds, which);
  return check_beta_direct(n, m, bounds, which);
}

void require_claim_hypothesis(i64 k, i64 m, Claim which, const char* who) {
  if (which == Claim::one && k < m)
    throw std::invalid_argument(std::string(who) + ": claim-1 hypothesis k >= m fails (k=" +
                                std::to_string(k) + ", m=" + std::to_string(m) + ")");
}

}  // namespace

ClaimResult check_claims(i64 n, i64 m, Claim which) {
  const BlockLayout lay = block_layout(n, m);
  require_claim_hypothesis(lay.k, m, which, "check_claims");
  return dispatch_engines(n, m, lay.bounds, lay.k, which);
}

ClaimResult check_claims_assignment(i64 n, i64 m, const std::vector<i64>& sizes, Claim which) {
  const BlockLayout lay = block_layout(n, m);
  require_claim_hypothesis(lay.k, m, which, "check_claims_assignment");
  if (static_cast<i64>(sizes.size()) != m)
    throw std::invalid_argument("check_claims_assignment: need exactly m sizes");
  i64 big = 0, sum = 0;
  for (i64 s : sizes) {
    if (s != lay.k && s != lay.k + 1)
      throw std::invalid_argument("check_claims_assignment: size " + std::to_string(s) +
                                  " is neither k nor k+1");
    big += s == lay.k + 1 ? 1 : 0;
    sum += s;
  }
  if (sum != n || big != lay.l)
    throw std::invalid_argument("check_claims_assignment: sizes must rearrange the floor multiset");
  std::vector<i64> bounds(static_cast<size_t>(m) + 1, 0);
  for (i64 j = 0; j < m; ++j)
    bounds[static_cast<size_t>(j) + 1] = bounds[static_cast<size_t>(j)] + sizes[static_cast<size_t>(j)];
  return dispatch_engines(n, m, bounds, lay.k, which);
}

Perm build_destroyer(i64 n, const Perm& master, bool verify_master) {
  const i64 m = master.n();
  if (n < m * m)
    throw std::invalid_argument("build_destroyer: need n >= m^2 (n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ")");
  if (verify_master) {
    const Certificate cert = check_almost(master, 1, 2);
    if (!cert.pass) {
      const Counterexample& cx = *cert.counterexample;
      throw std::invalid_argument("build_destroyer: master fails (1,2)-almost check at pattern " +
                                  std::to_string(cx.eta1) + " -> " + std::to_string(cx.eta2));
    }
  }
  const BlockLayout lay = block_layout(n, m);
  const Perm inv = perm_inverse(master);
  std::vector<i64> slot_start(static_cast<size_t>(m) + 1, 0);
  for (i64 j = 0; j < m; ++j)
    slot_start[static_cast<size_t>(j) + 1] =
        slot_start[static_cast<size_t>(j)] + lay.size(inv(j));

  const IntPerm tau_small = int_ap_destroyer(lay.k);
  const IntPerm tau_big = lay.l > 0 ? int_ap_destroyer(lay.k + 1) : IntPerm{};
  std::vector<i64> out(static_cast<size_t>(n));
  for (i64 b = 0; b < m; ++b) {
    const i64 base = slot_start[static_cast<size_t>(master(b))];
    const i64 lo = lay.bounds[static_cast<size_t>(b)];
    const i64 sz = lay.size(b);
    const IntPerm& tau = sz == lay.k ? tau_small : tau_big;
    for (i64 d = 0; d < sz; ++d)
      out[static_cast<size_t>(lo + d)] = base + static_cast<i64>(tau.images[static_cast<size_t>(d)]);
  }
  return make_perm(out);
}

}  // namespace apd
