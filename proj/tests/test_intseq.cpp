#include "apd/intseq.hpp"
#include "doctest.h"

using namespace apd;

namespace {

bool affine_images_ap_free(const std::vector<i64>& out) {
  const i64 k = static_cast<i64>(out.size());
  for (i64 a = 0; a < k; ++a)
    for (i64 c = a + 2; c < k; c += 2) {
      i64 b = (a + c) / 2;
      if (out[static_cast<size_t>(a)] + out[static_cast<size_t>(c)] ==
          2 * out[static_cast<size_t>(b)])
        return false;
    }
  return true;
}

}  // namespace

TEST_CASE("small integer destroyers") {
  CHECK(int_ap_destroyer(1).images == std::vector<u32>{0});
  CHECK(int_ap_destroyer(2).images == std::vector<u32>{0, 1});
  CHECK(int_ap_destroyer(3).images == std::vector<u32>{0, 2, 1});
  CHECK(int_ap_destroyer(8).images == std::vector<u32>{0, 4, 2, 6, 1, 5, 3, 7});
  CHECK_THROWS_AS(int_ap_destroyer(0), std::invalid_argument);
  CHECK_THROWS_AS(int_ap_destroyer(-4), std::invalid_argument);
}

TEST_CASE("verify_int verdicts") {
  IntVerdict bad = verify_int(IntPerm{{0, 1, 2}});
  CHECK_FALSE(bad.pass);
  CHECK(bad.a == 0);
  CHECK(bad.b == 1);
  CHECK(bad.c == 2);

  CHECK(verify_int(IntPerm{{0, 2, 1}}).pass);
  CHECK(verify_int(IntPerm{{1, 0}}).pass);
  CHECK(verify_int(IntPerm{{0}}).pass);
  CHECK_FALSE(verify_int(IntPerm{{3, 2, 1, 0}}).pass);
}

TEST_CASE("construction verifies for a range of sizes") {
  for (i64 k = 1; k <= 200; ++k) {
    IntPerm p = int_ap_destroyer(k);
    REQUIRE(p.k() == k);
    CAPTURE(k);
    CHECK(verify_int(p).pass);
  }
  CHECK(verify_int(int_ap_destroyer(512)).pass);
  CHECK(verify_int(int_ap_destroyer(1001)).pass);
}

TEST_CASE("construction is deterministic and cached copies agree") {
  IntPerm a = int_ap_destroyer(37);
  IntPerm b = int_ap_destroyer(37);
  CHECK(a.images == b.images);
}

TEST_CASE("every even index precedes every odd index") {
  IntPerm p = int_ap_destroyer(33);
  const i64 half = (33 + 1) / 2;
  for (i64 i = 0; i < 33; ++i) {
    if (i % 2 == 0)
      CHECK(p.images[static_cast<size_t>(i)] < half);
    else
      CHECK(p.images[static_cast<size_t>(i)] >= half);
  }
}

TEST_CASE("transport keeps progressions destroyed") {
  IntPerm p = int_ap_destroyer(5);
  CHECK(transport(p, 10, 3) ==
        std::vector<i64>{10 + 3 * i64(p.images[0]), 10 + 3 * i64(p.images[1]),
                         10 + 3 * i64(p.images[2]), 10 + 3 * i64(p.images[3]),
                         10 + 3 * i64(p.images[4])});
  for (i64 k = 1; k <= 64; ++k) {
    IntPerm q = int_ap_destroyer(k);
    CHECK(affine_images_ap_free(transport(q, 0, 1)));
    CHECK(affine_images_ap_free(transport(q, 7, 4)));
    CHECK(affine_images_ap_free(transport(q, -3, 9)));
  }
}
