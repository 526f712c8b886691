#include "apd/crt.hpp"

#include <algorithm>
#include <numeric>

namespace apd {

CrtBasis make_basis(std::vector<i64> moduli) {
  if (moduli.empty()) throw std::invalid_argument("basis needs at least one modulus");
  for (i64 m : moduli)
    if (m < 2) throw std::invalid_argument("basis modulus " + std::to_string(m) + " < 2");
  for (size_t i = 0; i < moduli.size(); ++i)
    for (size_t j = i + 1; j < moduli.size(); ++j) {
      i64 g = std::gcd(moduli[i], moduli[j]);
      if (g != 1)
        throw std::invalid_argument("moduli " + std::to_string(moduli[i]) + " and " +
                                    std::to_string(moduli[j]) +
                                    " not coprime (gcd " + std::to_string(g) + ")");
    }
  i64 product = 1;
  for (i64 m : moduli) {
    if (product > max_modulus / m)
      throw std::invalid_argument("basis product exceeds supported modulus bound");
    product *= m;
  }
  CrtBasis basis;
  basis.moduli = std::move(moduli);
  basis.product = product;
  basis.tables.reserve(basis.moduli.size());
  for (i64 m : basis.moduli) {
    i64 big = product / m;
    i64 e = (big % product) * mod_inv(big % m, m) % product;
    std::vector<u32> tab(static_cast<size_t>(m));
    for (i64 v = 0; v < m; ++v)
      tab[static_cast<size_t>(v)] = static_cast<u32>(e * v % product);
    basis.tables.push_back(std::move(tab));
  }
  return basis;
}

std::vector<i64> split(i64 x, const CrtBasis& basis) {
  if (x < 0 || x >= basis.product)
    throw std::invalid_argument("split: value " + std::to_string(x) +
                                " outside [0, " + std::to_string(basis.product) + ")");
  std::vector<i64> out;
  out.reserve(basis.moduli.size());
  for (i64 m : basis.moduli) out.push_back(x % m);
  return out;
}

i64 combine(const std::vector<i64>& residues, const CrtBasis& basis) {
  if (residues.size() != basis.moduli.size())
    throw std::invalid_argument("combine: expected " +
                                std::to_string(basis.moduli.size()) + " residues");
  i64 acc = 0;
  for (size_t i = 0; i < residues.size(); ++i) {
    i64 r = residues[i];
    if (r < 0 || r >= basis.moduli[i])
      throw std::invalid_argument("combine: residue " + std::to_string(r) +
                                  " outside [0, " + std::to_string(basis.moduli[i]) + ")");
    acc += basis.tables[i][static_cast<size_t>(r)];
    if (acc >= basis.product) acc -= basis.product;
  }
  return acc;
}

Perm compose_perms(const std::vector<Perm>& components, const CrtBasis& basis) {
  if (components.size() != basis.moduli.size())
    throw std::invalid_argument("compose: expected " +
                                std::to_string(basis.moduli.size()) + " components");
  const size_t k = components.size();
  for (size_t i = 0; i < k; ++i)
    if (components[i].n() != basis.moduli[i])
      throw std::invalid_argument("component " + std::to_string(i) + " has modulus " +
                                  std::to_string(components[i].n()) + ", basis expects " +
                                  std::to_string(basis.moduli[i]));
  const i64 N = basis.product;
  std::vector<u32> out(static_cast<size_t>(N));
  std::vector<i64> counter(k, 0);  // x mod n_i, maintained incrementally
  for (i64 x = 0; x < N; ++x) {
    i64 acc = 0;
    for (size_t i = 0; i < k; ++i) {
      acc += basis.tables[i][static_cast<size_t>(components[i](counter[i]))];
      if (acc >= N) acc -= N;
      if (++counter[i] == basis.moduli[i]) counter[i] = 0;
    }
    out[static_cast<size_t>(x)] = static_cast<u32>(acc);
  }
  return Perm(std::move(out));
}

CoverageReport check_coverage(
    const std::vector<std::pair<i64, std::vector<Pattern>>>& components, i64 S,
    i64 T) {
  if (S < 0 || T < 0) throw std::invalid_argument("check_coverage: S, T must be >= 0");
  for (size_t i = 0; i < components.size(); ++i) {
    const auto& [n_i, claims] = components[i];
    if (std::find(claims.begin(), claims.end(), Pattern{0, 0}) == claims.end())
      return {false, "component " + std::to_string(i) + " (modulus " +
                         std::to_string(n_i) + ") does not claim 0 -> 0"};
    if (n_i <= 2 * S || n_i <= 2 * T)
      return {false, "modulus " + std::to_string(n_i) + " not above 2*max(S,T) = " +
                         std::to_string(2 * std::max(S, T))};
  }
  for (i64 s = -S; s <= S; ++s)
    for (i64 t = -T; t <= T; ++t) {
      if (s == 0 && t == 0) continue;
      bool covered = false;
      for (const auto& [n_i, claims] : components)
        if (std::find(claims.begin(), claims.end(), Pattern{s, t}) != claims.end()) {
          covered = true;
          break;
        }
      if (!covered)
        return {false, "pattern " + std::to_string(s) + " -> " + std::to_string(t) +
                           " not claimed by any component"};
    }
  return {true, "all " + std::to_string((2 * S + 1) * (2 * T + 1) - 1) +
                    " nonzero patterns covered; moduli bounds hold"};
}

}  // namespace apd
