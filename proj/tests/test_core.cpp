#include <doctest.h>

#include <stdexcept>

#include "apd/io.hpp"
#include "apd/perm.hpp"
#include "apd/rng.hpp"

using namespace apd;

TEST_CASE("make_perm validates") {
  CHECK(make_perm({0, 2, 1}).n() == 3);
  CHECK(make_perm({0})(0) == 0);
  CHECK_THROWS_WITH_AS(make_perm({0, 0, 1}), doctest::Contains("duplicate image 0"),
                       std::invalid_argument);
  CHECK_THROWS_AS(make_perm({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_perm({-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_perm({}), std::invalid_argument);
}

TEST_CASE("identity") {
  const Perm id = Perm::identity(5);
  for (i64 x = 0; x < 5; ++x) CHECK(id(x) == x);
  CHECK(Perm::identity(1).n() == 1);
}

TEST_CASE("perm_inverse is an involution on random permutations") {
  SplitMix64 g{42};
  for (i64 n : {1, 2, 3, 17, 100, 1000}) {
    const Perm p{random_images(n, g)};
    const Perm q = perm_inverse(p);
    for (i64 x = 0; x < n; ++x) {
      CHECK(q(p(x)) == x);
      CHECK(p(q(x)) == x);
    }
    CHECK(perm_inverse(q) == p);
  }
}

TEST_CASE("mod_inv") {
  CHECK(mod_inv(3, 7) == 5);
  CHECK(mod_inv(2, 25) == 13);
  for (i64 n = 2; n <= 500; ++n) {
    CHECK(mod_inv(1, n) == 1);
    for (i64 a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const i64 inv = mod_inv(a, n);
      CHECK(floor_mod(a * inv, n) == 1);
    }
  }
  CHECK(mod_inv(1, 1) == 0);  // the zero residue class of Z_1
  CHECK_THROWS_WITH_AS(mod_inv(6, 9), doctest::Contains("not invertible"),
                       std::invalid_argument);
}

TEST_CASE("centered representatives") {
  CHECK(centered(0, 5) == 0);
  CHECK(centered(3, 5) == -2);
  CHECK(centered(2, 5) == 2);
  CHECK(centered(-3, 5) == 2);
  CHECK(centered(2, 4) == 2);   // even n keeps n/2
  CHECK(centered(-2, 4) == 2);
  CHECK(centered(3, 4) == -1);
  for (i64 n = 1; n <= 40; ++n)
    for (i64 v = -3 * n; v <= 3 * n; ++v) {
      const i64 c = centered(v, n);
      CHECK(floor_mod(c - v, n) == 0);
      CHECK(2 * c <= n);
      CHECK(2 * c > -n);
    }
}

TEST_CASE("text format round trip") {
  const Perm p = make_perm({0, 2, 1});
  const std::string text = perm_to_text(p);
  CHECK(text == "n=3\n0 2 1\n");
  CHECK(perm_from_text(text) == p);
  CHECK(perm_from_string(text) == p);
}

TEST_CASE("json format round trip") {
  const Perm p = make_perm({1, 0, 2});
  const std::string text = perm_to_json(p);
  CHECK(perm_from_json(text) == p);
  CHECK(perm_from_string(text) == p);
}

TEST_CASE("malformed permutation files are rejected") {
  CHECK_THROWS_AS(perm_from_text("0 2 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(perm_from_text("n=3\n0 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(perm_from_text("n=3\n0 2 1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(perm_from_text("n=x\n0\n"), std::invalid_argument);
  CHECK_THROWS_AS(perm_from_text("n=3\n0 2 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(perm_from_json("{\"n\":4,\"perm\":[0,2,1]}"), std::invalid_argument);
  CHECK_THROWS_AS(perm_from_json("{\"perm\":[0,2,1]}"), std::invalid_argument);
}

TEST_CASE("random permutations are reproducible for a fixed seed") {
  SplitMix64 g1{7}, g2{7};
  CHECK(random_images(50, g1) == random_images(50, g2));
  SplitMix64 g3{8};
  CHECK(random_images(50, g1) != random_images(50, g3));
}
