#pragma once

#include "apd/perm.hpp"

namespace apd {

// q(x) = t*p(x). Sends a destroyed pattern a -> b to a -> t*b; in particular
// a 0 -> 1 destroyer becomes a 0 -> t destroyer.
Perm scale_output(const Perm& p, i64 t);

// q(x) = t*p(s^{-1} x). Sends 1 -> 1 to s -> t.
Perm scale_both(const Perm& p, i64 s, i64 t);

// x -> p(x) + (q - p(q)); fixes q and preserves every pattern verdict.
Perm fix_point_translate(const Perm& p, i64 q);

}  // namespace apd
