#pragma once

#include <vector>

#include "apd/common.hpp"

namespace apd {

// A bijection of Z_n stored as its image sequence: img_[x] = p(x).
class Perm {
 public:
  explicit Perm(std::vector<u32> images);
  static Perm identity(i64 n);

  i64 n() const { return static_cast<i64>(img_.size()); }
  u32 operator()(i64 x) const { return img_[static_cast<size_t>(x)]; }
  const std::vector<u32>& images() const { return img_; }

  bool operator==(const Perm&) const = default;

 private:
  std::vector<u32> img_;
};

// Validating constructor accepting raw integers; rejects repeated or
// out-of-range entries naming the offending value and index.
Perm make_perm(const std::vector<i64>& images);

Perm perm_inverse(const Perm& p);

// Inverse of x modulo n; throws with the gcd value when not coprime.
i64 mod_inv(i64 x, i64 n);

}  // namespace apd
