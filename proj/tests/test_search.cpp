#include "apd/search.hpp"
#include "doctest.h"

using namespace apd;

namespace {

const std::vector<Pattern> plain{{0, 0}};

SearchConfig cfg(std::vector<Pattern> pats) {
  SearchConfig c;
  c.patterns = std::move(pats);
  return c;
}

}  // namespace

TEST_CASE("exhaustive counts of plain destroyers match ground truth") {
  // Raw counts over all n! permutations.
  CHECK(exhaust_count(1, plain) == 1);
  CHECK(exhaust_count(2, plain) == 0);
  CHECK(exhaust_count(3, plain) == 0);
  CHECK(exhaust_count(4, plain) == 16);
  CHECK(exhaust_count(5, plain) == 0);
  CHECK(exhaust_count(6, plain) == 72);
  CHECK(exhaust_count(7, plain) == 0);
}

TEST_CASE("translation symmetry: raw count is n times the pinned count") {
  for (i64 n = 1; n <= 6; ++n) {
    i64 raw = exhaust_count(n, plain, false);
    i64 pinned = exhaust_count(n, plain, true);
    CHECK(raw == n * pinned);
  }
}

TEST_CASE("exhaustive mode over the ceiling is rejected") {
  CHECK_THROWS_AS(exhaust_count(11, plain), std::invalid_argument);
  CHECK_THROWS_AS(exhaust_count(0, plain), std::invalid_argument);
}

TEST_CASE("first-found search returns verified witnesses") {
  SearchResult r = search_perm(9, cfg({{0, 0}, {0, 2}, {-1, -2}}));
  REQUIRE(r.status == SearchStatus::found);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->n() == 9);
  CHECK(check_patterns(*r.witness, {{0, 0}, {0, 2}, {-1, -2}}).pass);
  CHECK(r.deterministic_witness);

  SearchResult four = search_perm(4, cfg(plain));
  REQUIRE(four.status == SearchStatus::found);
  CHECK(*four.witness == make_perm({0, 1, 3, 2}));
}

TEST_CASE("non-existence is proven by exhaustion") {
  for (i64 n : {i64{2}, i64{3}, i64{5}, i64{7}}) {
    SearchResult r = search_perm(n, cfg(plain));
    CHECK(r.status == SearchStatus::none);
    CHECK_FALSE(r.witness.has_value());
  }
}

TEST_CASE("node limits give a distinct verdict") {
  SearchConfig c = cfg(plain);
  c.node_limit = 3;
  SearchResult r = search_perm(7, c);
  CHECK(r.status == SearchStatus::limit);
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.nodes <= c.node_limit + 1);

  // A generous limit resolves the same instance.
  c.node_limit = 10'000'000;
  CHECK(search_perm(7, c).status == SearchStatus::none);
}

TEST_CASE("seeded value orders still land on correct witnesses") {
  for (u64 seed : {u64{1}, u64{9}, u64{77}}) {
    SearchConfig c = cfg(plain);
    c.seed = seed;
    SearchResult r = search_perm(8, c);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(check_pattern(*r.witness, {0, 0}).pass);
  }
}

TEST_CASE("thread splitting changes neither verdict nor exhaustive count") {
  for (i64 threads : {i64{1}, i64{2}, i64{4}}) {
    SearchConfig c = cfg(plain);
    c.threads = threads;
    CHECK(search_perm(5, c).status == SearchStatus::none);
    CHECK(search_perm(6, c).status == SearchStatus::found);

    SearchConfig ex = cfg(plain);
    ex.threads = threads;
    ex.exhaustive = true;
    ex.normalize = false;
    SearchResult r = search_perm(6, ex);
    CHECK(r.status == SearchStatus::found);
    CHECK(r.count == 72);
    CHECK(r.deterministic_witness);
  }
}

TEST_CASE("parallel first-found witnesses are flagged and re-verified") {
  SearchConfig c = cfg(plain);
  c.threads = 3;
  SearchResult r = search_perm(9, c);
  REQUIRE(r.status == SearchStatus::found);
  CHECK(check_pattern(*r.witness, {0, 0}).pass);
  if (r.witness.has_value() && c.threads > 1) CHECK_FALSE(r.deterministic_witness);
}

TEST_CASE("search ceiling and argument validation") {
  CHECK_THROWS_AS(search_perm(513, cfg(plain)), std::invalid_argument);
  CHECK_THROWS_AS(search_perm(0, cfg(plain)), std::invalid_argument);
  CHECK_THROWS_AS(search_perm(-3, cfg(plain)), std::invalid_argument);
  SearchConfig bad = cfg(plain);
  bad.node_limit = -2;
  CHECK_THROWS_AS(search_perm(6, bad), std::invalid_argument);
}

TEST_CASE("duplicate patterns reduce to one constraint set") {
  SearchResult a = search_perm(6, cfg(plain));
  SearchResult b = search_perm(6, cfg({{0, 0}, {0, 0}, {6, 6}}));
  REQUIRE(a.status == SearchStatus::found);
  REQUIRE(b.status == SearchStatus::found);
  CHECK(*a.witness == *b.witness);
  CHECK(a.nodes == b.nodes);
}
