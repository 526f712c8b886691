#include "apd/prime.hpp"

namespace apd {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

i64 require_odd_prime(i64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<u64>(p)))
    throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  if (p > max_modulus)
    throw std::invalid_argument("prime " + std::to_string(p) +
                                " exceeds supported modulus bound");
  return p;
}

}  // namespace

bool is_prime(u64 x) {
  if (x < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (x == q) return true;
    if (x % q == 0) return false;
  }
  u64 d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 v = powmod(a, d, x);
    if (v == 1 || v == x - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      v = mulmod(v, v, x);
      if (v == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int legendre(i64 a, i64 p) {
  require_odd_prime(p);
  i64 r = floor_mod(a, p);
  if (r == 0) return 0;
  u64 v = powmod(static_cast<u64>(r), static_cast<u64>((p - 1) / 2),
                 static_cast<u64>(p));
  return v == 1 ? 1 : -1;
}

XiWitness find_xi(i64 p) {
  require_odd_prime(p);
  if (p <= 3) throw std::invalid_argument("find_xi needs p > 3");
  for (i64 xi = 2; xi < p; ++xi)
    if (legendre(xi, p) == -1 && legendre(xi - 1, p) == -1) return {p, xi};
  throw std::logic_error("no xi witness found for p = " + std::to_string(p));
}

Perm prime_destroyer(i64 p) {
  require_odd_prime(p);
  if (p <= 3 || p % 8 != 3)
    throw std::invalid_argument("prime_destroyer needs p > 3 with p = 3 (mod 8), got " +
                                std::to_string(p));
  i64 xi = find_xi(p).xi;
  std::vector<u32> img(static_cast<size_t>(p));
  for (i64 x = 0; x < p; ++x) {
    i64 sq = x * x % p;
    img[static_cast<size_t>(x)] = static_cast<u32>(x % 2 == 0 ? sq : xi * sq % p);
  }
  return Perm(std::move(img));
}

bool form_solvable(i64 a, i64 b, i64 c, i64 p) {
  require_odd_prime(p);
  i64 am = floor_mod(a, p), bm = floor_mod(b, p), cm = floor_mod(c, p);
  if (am == 0 || cm == 0)
    throw std::invalid_argument("form_solvable: outer coefficient divisible by p");
  i64 disc = floor_mod(bm * bm - 4 * (am * cm % p), p);
  return legendre(disc, p) != -1;
}

}  // namespace apd
