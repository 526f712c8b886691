#include "apd/perm.hpp"

namespace apd {

Perm::Perm(std::vector<u32> images) : img_(std::move(images)) {
  if (img_.empty()) throw std::invalid_argument("empty image sequence");
  if (n() > max_modulus)
    throw std::invalid_argument("modulus " + std::to_string(n()) +
                                " exceeds supported bound " +
                                std::to_string(max_modulus));
  std::vector<bool> seen(img_.size(), false);
  for (size_t i = 0; i < img_.size(); ++i) {
    u32 v = img_[i];
    if (v >= img_.size())
      throw std::invalid_argument("image " + std::to_string(v) +
                                  " out of range at index " + std::to_string(i));
    if (seen[v])
      throw std::invalid_argument("duplicate image " + std::to_string(v) +
                                  " at index " + std::to_string(i));
    seen[v] = true;
  }
}

Perm Perm::identity(i64 n) {
  std::vector<u32> v(static_cast<size_t>(n));
  for (i64 i = 0; i < n; ++i) v[static_cast<size_t>(i)] = static_cast<u32>(i);
  return Perm(std::move(v));
}

Perm make_perm(const std::vector<i64>& images) {
  std::vector<u32> v;
  v.reserve(images.size());
  for (size_t i = 0; i < images.size(); ++i) {
    i64 x = images[i];
    if (x < 0 || x >= static_cast<i64>(images.size()))
      throw std::invalid_argument("image " + std::to_string(x) +
                                  " out of range at index " + std::to_string(i));
    v.push_back(static_cast<u32>(x));
  }
  return Perm(std::move(v));
}

Perm perm_inverse(const Perm& p) {
  std::vector<u32> inv(static_cast<size_t>(p.n()));
  for (i64 x = 0; x < p.n(); ++x) inv[p(x)] = static_cast<u32>(x);
  return Perm(std::move(inv));
}

i64 mod_inv(i64 x, i64 n) {
  if (n < 1) throw std::invalid_argument("mod_inv: modulus must be positive");
  if (n == 1) return 0;
  i64 a = floor_mod(x, n);
  // extended Euclid on (a, n)
  i64 r0 = a, r1 = n, s0 = 1, s1 = 0;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    i64 s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1)
    throw std::invalid_argument("mod_inv: " + std::to_string(x) +
                                " not invertible mod " + std::to_string(n) +
                                " (gcd " + std::to_string(r0) + ")");
  return floor_mod(s0, n);
}

}  // namespace apd
