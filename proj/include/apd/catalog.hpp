#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "apd/verify.hpp"

namespace apd {

using bigint = boost::multiprecision::cpp_int;

struct TableEntry {
  int index;  // 1..15
  Perm perm;
  std::vector<Pattern> claimed;  // always includes 0 -> 0
};

// The fifteen published permutations with their claimed patterns; every claim
// is re-verified by brute force on first access and a failure throws.
const std::vector<TableEntry>& table_entries();

struct ComponentEntry {
  int index;
  Perm perm;
  std::vector<Pattern> claims;
};

enum class Part { one, two };

// part one: the six components on moduli 9, 11, 16, 17, 19, 23; entries
// 1-4 and 6 are table rows, entry 5 is 2*(inverse of the modulus-19 row)
// claiming {0->0, 1->2, 1->-2}. Together they cover all fourteen nonzero
// (s, t) with |s| <= 1, |t| <= 2.
// part two: nine transforms of the remaining rows on moduli 25, 29, 31, 37,
// 41, 43, 47, 13, 49 covering all ten patterns with s in {+-2}, |t| <= 2.
// Every claim is verified at construction; a failure throws.
const std::vector<ComponentEntry>& derived_components(Part part);

struct CompositeConstants {
  i64 sqrt_n0;  // 9*11*16*17*19*23
  bigint n0;    // sqrt_n0^2
  bigint r;     // product of all fifteen moduli
};

const CompositeConstants& constants();

}  // namespace apd
