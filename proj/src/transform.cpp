#include "apd/transform.hpp"

#include <numeric>

namespace apd {

namespace {

i64 require_unit(i64 v, i64 n, const char* what) {
  i64 r = floor_mod(v, n);
  i64 g = std::gcd(r, n);
  if (g != 1)
    throw std::invalid_argument(std::string(what) + " " + std::to_string(v) +
                                " not coprime to modulus " + std::to_string(n) +
                                " (gcd " + std::to_string(g) + ")");
  return r;
}

}  // namespace

Perm scale_output(const Perm& p, i64 t) {
  const i64 n = p.n();
  i64 tm = require_unit(t, n, "scale factor");
  std::vector<u32> out(static_cast<size_t>(n));
  for (i64 x = 0; x < n; ++x)
    out[static_cast<size_t>(x)] = static_cast<u32>((tm * p(x)) % n);
  return Perm(std::move(out));
}

Perm scale_both(const Perm& p, i64 s, i64 t) {
  const i64 n = p.n();
  i64 sm = require_unit(s, n, "input scale");
  i64 tm = require_unit(t, n, "output scale");
  i64 sinv = mod_inv(sm, n);
  std::vector<u32> out(static_cast<size_t>(n));
  for (i64 x = 0; x < n; ++x)
    out[static_cast<size_t>(x)] = static_cast<u32>((tm * p((sinv * x) % n)) % n);
  return Perm(std::move(out));
}

Perm fix_point_translate(const Perm& p, i64 q) {
  const i64 n = p.n();
  if (q < 0 || q >= n)
    throw std::invalid_argument("fix point " + std::to_string(q) +
                                " out of range for modulus " + std::to_string(n));
  i64 shift = floor_mod(q - p(q), n);
  std::vector<u32> out(static_cast<size_t>(n));
  for (i64 x = 0; x < n; ++x)
    out[static_cast<size_t>(x)] = static_cast<u32>((p(x) + shift) % n);
  return Perm(std::move(out));
}

}  // namespace apd
