#include <numeric>

#include "apd/catalog.hpp"
#include "apd/prime.hpp"
#include "apd/transform.hpp"
#include "apd/verify.hpp"
#include "doctest.h"

using namespace apd;

namespace {

const TableEntry& row_with_modulus(i64 n) {
  for (const auto& e : table_entries())
    if (e.perm.n() == n) return e;
  throw std::logic_error("no table row with that modulus");
}

i64 fm(i64 v, i64 n) { return ((v % n) + n) % n; }

}  // namespace

TEST_CASE("scale_output doubles the modulus-13 row into a 0 -> 2 destroyer") {
  const Perm& p = row_with_modulus(13).perm;
  Perm q = scale_output(p, 2);
  CHECK(q == make_perm({0, 2, 8, 4, 1, 12, 11, 5, 9, 3, 6, 10, 7}));
  CHECK(check_pattern(q, {0, 2}).pass);
}

TEST_CASE("scale_output identity cases") {
  Perm id5 = Perm::identity(5);
  CHECK(scale_output(id5, 2) == make_perm({0, 2, 4, 1, 3}));
  for (const auto& e : table_entries()) CHECK(scale_output(e.perm, 1) == e.perm);
}

TEST_CASE("scale_output rejects non-units") {
  CHECK_THROWS_AS(scale_output(Perm::identity(9), 3), std::invalid_argument);
  CHECK_THROWS_AS(scale_output(Perm::identity(10), 4), std::invalid_argument);
  CHECK_THROWS_WITH_AS(scale_output(Perm::identity(6), 0),
                       "scale factor 0 not coprime to modulus 6 (gcd 6)",
                       std::invalid_argument);
}

TEST_CASE("scale_both sends 1 -> 1 destroyers where claimed") {
  const Perm& p16 = row_with_modulus(16).perm;
  CHECK(check_pattern(p16, {1, 1}).pass);
  CHECK(check_pattern(scale_both(p16, 3, 5), {3, 5}).pass);

  const Perm& p29 = row_with_modulus(29).perm;
  CHECK(check_pattern(scale_both(p29, 2, 2), {2, 2}).pass);

  CHECK(scale_both(p16, 1, 1) == p16);
}

TEST_CASE("scale_both rejects non-units") {
  const Perm& p16 = row_with_modulus(16).perm;
  CHECK_THROWS_AS(scale_both(p16, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(scale_both(p16, 3, 6), std::invalid_argument);
}

// q(x) = t*p(s^{-1}x) turns a destroyed a -> b into a destroyed sa -> tb;
// checked for every published row, every claim, every unit pair up to 4.
TEST_CASE("scale_both transports every claimed pattern") {
  for (const auto& e : table_entries()) {
    const i64 n = e.perm.n();
    for (i64 s = -4; s <= 4; ++s) {
      if (std::gcd(fm(s, n), n) != 1) continue;
      for (i64 t = -4; t <= 4; ++t) {
        if (std::gcd(fm(t, n), n) != 1) continue;
        Perm q = scale_both(e.perm, s, t);
        for (const auto& pat : e.claimed) {
          Certificate cert = check_pattern(q, {fm(s * pat.s, n), fm(t * pat.t, n)});
          CAPTURE(n);
          CAPTURE(s);
          CAPTURE(t);
          CAPTURE(pat.s);
          CAPTURE(pat.t);
          CHECK(cert.pass);
        }
      }
    }
  }
}

TEST_CASE("scale_output transports claims along the output axis") {
  for (const auto& e : table_entries()) {
    const i64 n = e.perm.n();
    for (i64 t = -4; t <= 4; ++t) {
      if (std::gcd(fm(t, n), n) != 1) continue;
      Perm q = scale_output(e.perm, t);
      for (const auto& pat : e.claimed)
        CHECK(check_pattern(q, {pat.s, fm(t * pat.t, n)}).pass);
    }
  }
}

TEST_CASE("inverse of a row destroying s -> t destroys t -> s") {
  for (const auto& e : table_entries()) {
    Perm inv = perm_inverse(e.perm);
    for (const auto& pat : e.claimed)
      CHECK(check_pattern(inv, {pat.t, pat.s}).pass);
  }
}

TEST_CASE("fix_point_translate examples") {
  Perm id7 = Perm::identity(7);
  CHECK(fix_point_translate(id7, 6) == id7);

  Perm p = make_perm({1, 2, 0});
  Perm q = fix_point_translate(p, 2);
  CHECK(q == make_perm({0, 1, 2}));
  CHECK(q(2) == 2);

  CHECK_THROWS_AS(fix_point_translate(p, 3), std::invalid_argument);
  CHECK_THROWS_AS(fix_point_translate(p, -1), std::invalid_argument);
}

TEST_CASE("fix_point_translate fixes the point and keeps all verdicts") {
  Perm p = prime_destroyer(11);
  Perm q = fix_point_translate(p, 10);
  CHECK(q(10) == 10);
  for (i64 s = -3; s <= 3; ++s)
    for (i64 t = -3; t <= 3; ++t)
      CHECK(check_pattern(p, {s, t}).pass == check_pattern(q, {s, t}).pass);
}

TEST_CASE("fix_point_translate preserves verdicts on every row") {
  for (const auto& e : table_entries()) {
    const i64 n = e.perm.n();
    for (i64 point : {i64{0}, n - 1, i64{3} % n}) {
      Perm q = fix_point_translate(e.perm, point);
      CHECK(q(point) == point);
      for (i64 s = -3; s <= 3; ++s)
        for (i64 t = -3; t <= 3; ++t)
          CHECK(check_pattern(e.perm, {s, t}).pass ==
                check_pattern(q, {s, t}).pass);
    }
  }
}
