#include "apd/almost.hpp"

#include <nlohmann/json.hpp>
#include <numeric>
#include <stdexcept>

#include "apd/blocks.hpp"
#include "apd/intseq.hpp"
#include "apd/verify.hpp"

namespace apd {

SuperblockPlan superblock_partition(i64 M, i64 t) {
  if (t < 0) throw std::invalid_argument("superblock_partition: t must be non-negative");
  if (M < t + 1)
    throw std::invalid_argument("superblock_partition: need M >= t+1 (M=" + std::to_string(M) +
                                ", t=" + std::to_string(t) + ")");
  const i64 G = M / (t + 1);
  const i64 rem = M - G * (t + 1);
  if (rem > G)
    throw std::invalid_argument("superblock_partition: M=" + std::to_string(M) +
                                " does not split into groups of " + std::to_string(t + 1) +
                                " or " + std::to_string(t + 2));
  SuperblockPlan plan;
  plan.M = M;
  plan.t = t;
  plan.group_sizes.assign(static_cast<size_t>(G), t + 1);
  for (i64 g = G - rem; g < G; ++g) plan.group_sizes[static_cast<size_t>(g)] = t + 2;
  plan.group_start.resize(static_cast<size_t>(G) + 1, 0);
  for (i64 g = 0; g < G; ++g)
    plan.group_start[static_cast<size_t>(g) + 1] =
        plan.group_start[static_cast<size_t>(g)] + plan.group_sizes[static_cast<size_t>(g)];
  return plan;
}

Perm product_perm(const Perm& chi_m, const Perm& chi_r) {
  const i64 m = chi_m.n();
  const i64 r = chi_r.n();
  if (m <= 2)
    throw std::invalid_argument("product_perm: left factor modulus must exceed 2, got " +
                                std::to_string(m));
  if (m > max_modulus / r)
    throw std::invalid_argument("product_perm: product modulus exceeds supported range");
  std::vector<i64> out(static_cast<size_t>(m * r));
  for (i64 x = 0; x < m; ++x)
    for (i64 y = 0; y < r; ++y)
      out[static_cast<size_t>(r * x + y)] = r * chi_m(x) + chi_r(y);
  return make_perm(out);
}

Perm restrict_at_fixed_point(const Perm& p) {
  const i64 N = p.n();
  if (N < 2) throw std::invalid_argument("restrict_at_fixed_point: needs modulus at least 2");
  if (p(N - 1) != N - 1)
    throw std::invalid_argument("restrict_at_fixed_point: " + std::to_string(N - 1) +
                                " is not a fixed point");
  std::vector<i64> out(static_cast<size_t>(N - 1));
  for (i64 x = 0; x < N - 1; ++x) out[static_cast<size_t>(x)] = p(x);
  return make_perm(out);
}

std::vector<i64> coprime_ap_terms(i64 first, i64 diff, i64 count) {
  if (count < 1) throw std::invalid_argument("coprime_ap_terms: count must be positive");
  if (first < 2) throw std::invalid_argument("coprime_ap_terms: first must be at least 2");
  if (diff < 1) throw std::invalid_argument("coprime_ap_terms: diff must be positive");
  if (std::gcd(first, diff) != 1)
    throw std::invalid_argument("coprime_ap_terms: first and diff share factor " +
                                std::to_string(std::gcd(first, diff)));
  std::vector<i64> out;
  out.reserve(static_cast<size_t>(count));
  for (i64 term = first; static_cast<i64>(out.size()) < count; term += diff) {
    if (term > (i64(1) << 61))
      throw std::runtime_error("coprime_ap_terms: terms exceed supported range");
    bool ok = true;
    for (i64 s : out)
      if (std::gcd(s, term) != 1) {
        ok = false;
        break;
      }
    if (ok) out.push_back(term);
  }
  return out;
}

namespace {

// Stable size-descending order of the indices [lo, lo+g): with sizes limited
// to {w-many big, rest small} this is the big indices in order, then the rest.
void ranks_by_size(i64 lo, i64 g, const std::vector<i64>& start, i64 big, std::vector<i64>& out) {
  out.clear();
  for (i64 j = lo; j < lo + g; ++j)
    if (start[static_cast<size_t>(j) + 1] - start[static_cast<size_t>(j)] == big) out.push_back(j);
  for (i64 j = lo; j < lo + g; ++j)
    if (start[static_cast<size_t>(j) + 1] - start[static_cast<size_t>(j)] != big) out.push_back(j);
}

}  // namespace

AlmostResult build_almost(i64 n, i64 t, const Perm& master, bool verify_master) {
  const i64 M = master.n();
  if (t < 0) throw std::invalid_argument("build_almost: t must be non-negative");
  if (M < (t + 2) * (t + 2))
    throw std::invalid_argument("build_almost: need M >= (t+2)^2 (M=" + std::to_string(M) +
                                ", t=" + std::to_string(t) + ")");
  if (n < M * M)
    throw std::invalid_argument("build_almost: need n >= M^2 (n=" + std::to_string(n) +
                                ", M=" + std::to_string(M) + ")");
  if (n / M <= t)
    throw std::invalid_argument("build_almost: block size floor(n/M) must exceed t");
  if (verify_master) {
    const Certificate cert = check_almost(master, 4 * t + 7, 4 * t + 7);
    if (!cert.pass) {
      const Counterexample& cx = *cert.counterexample;
      throw std::invalid_argument("build_almost: master fails (4t+7, 4t+7)-almost check at pattern " +
                                  std::to_string(cx.eta1) + " -> " + std::to_string(cx.eta2));
    }
  }

  const BlockLayout lay = block_layout(n, M);
  const SuperblockPlan plan = superblock_partition(M, t);
  const i64 G = static_cast<i64>(plan.group_sizes.size());

  // Stage 1 deal order per superblock.
  std::vector<i64> rank_block(static_cast<size_t>(M));
  {
    std::vector<i64> tmp;
    for (i64 g = 0; g < G; ++g) {
      ranks_by_size(plan.group_start[static_cast<size_t>(g)], plan.group_sizes[static_cast<size_t>(g)],
                    lay.bounds, lay.k + 1, tmp);
      for (size_t r = 0; r < tmp.size(); ++r)
        rank_block[static_cast<size_t>(plan.group_start[static_cast<size_t>(g)]) + r] = tmp[r];
    }
  }

  // Stage 2 slot layout: slot j holds block master^{-1}(j).
  const Perm inv = perm_inverse(master);
  std::vector<i64> slot_start(static_cast<size_t>(M) + 1, 0);
  for (i64 j = 0; j < M; ++j)
    slot_start[static_cast<size_t>(j) + 1] = slot_start[static_cast<size_t>(j)] + lay.size(inv(j));

  // Stage 3 integer destroyers for the two slot sizes.
  const IntPerm tau0 = int_ap_destroyer(lay.k);
  const IntPerm tau1 = lay.l > 0 ? int_ap_destroyer(lay.k + 1) : IntPerm{};

  // Stage 4 reverse deal on slots: element d of slot j goes to position
  // base4[j] + d * step4[j] inside j's superblock range.
  std::vector<i64> base4(static_cast<size_t>(M)), step4(static_cast<size_t>(M));
  {
    std::vector<i64> tmp;
    for (i64 g = 0; g < G; ++g) {
      const i64 s0 = plan.group_start[static_cast<size_t>(g)];
      const i64 gs = plan.group_sizes[static_cast<size_t>(g)];
      ranks_by_size(s0, gs, slot_start, lay.k + 1, tmp);
      for (size_t r = 0; r < tmp.size(); ++r) {
        base4[static_cast<size_t>(tmp[r])] = slot_start[static_cast<size_t>(s0)] + static_cast<i64>(r);
        step4[static_cast<size_t>(tmp[r])] = gs;
      }
    }
  }

  std::vector<int> slot_of(static_cast<size_t>(n));
  for (i64 j = 0; j < M; ++j)
    for (i64 p = slot_start[static_cast<size_t>(j)]; p < slot_start[static_cast<size_t>(j) + 1]; ++p)
      slot_of[static_cast<size_t>(p)] = static_cast<int>(j);

  std::vector<i64> out(static_cast<size_t>(n));
  StageTrace tr;
  tr.n = n;
  tr.m = M;
  tr.t = t;
  tr.beta1.resize(static_cast<size_t>(n));
  tr.beta2.resize(static_cast<size_t>(n));
  tr.beta3.resize(static_cast<size_t>(n));
  tr.beta4.resize(static_cast<size_t>(n));

  for (i64 g = 0; g < G; ++g) {
    const i64 b0 = plan.group_start[static_cast<size_t>(g)];
    const i64 gs = plan.group_sizes[static_cast<size_t>(g)];
    const i64 P = lay.bounds[static_cast<size_t>(b0)];
    const i64 L = lay.bounds[static_cast<size_t>(b0 + gs)] - P;
    i64 r = 0, q = 0, b1 = b0;
    for (i64 j = 0; j < L; ++j) {
      const i64 x = P + j;
      while (x >= lay.bounds[static_cast<size_t>(b1) + 1]) ++b1;
      const i64 b2 = rank_block[static_cast<size_t>(b0 + r)];
      const i64 s = master(b2);
      const IntPerm& tau = lay.size(b2) == lay.k ? tau0 : tau1;
      const i64 d = static_cast<i64>(tau.images[static_cast<size_t>(q)]);
      const i64 p4 = base4[static_cast<size_t>(s)] + d * step4[static_cast<size_t>(s)];
      out[static_cast<size_t>(x)] = p4;
      tr.beta1[static_cast<size_t>(x)] = b1;
      tr.beta2[static_cast<size_t>(x)] = b2;
      tr.beta3[static_cast<size_t>(x)] = s;
      tr.beta4[static_cast<size_t>(x)] = slot_of[static_cast<size_t>(p4)];
      if (++r == gs) {
        r = 0;
        ++q;
      }
    }
  }
  return {make_perm(out), std::move(tr)};
}

std::string stage_trace_json(const StageTrace& trace) {
  nlohmann::ordered_json doc;
  doc["n"] = trace.n;
  doc["m"] = trace.m;
  doc["t"] = trace.t;
  doc["beta1"] = trace.beta1;
  doc["beta2"] = trace.beta2;
  doc["beta3"] = trace.beta3;
  doc["beta4"] = trace.beta4;
  return doc.dump();
}

}  // namespace apd
