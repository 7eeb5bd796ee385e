#include <doctest.h>

#include "lzero/classify.hpp"
#include "lzero/errors.hpp"
#include "lzero/indexing.hpp"
#include "lzero/invariants.hpp"
#include "support.hpp"

using namespace lzero;
using lzero::testing::load_fixture;

TEST_CASE("Arf invariants") {
  CHECK(arf(load_fixture("unknot.lz"), 1) == 0);
  CHECK(arf(load_fixture("trefoil.lz"), 1) == 1);
  CHECK(arf(load_fixture("fig8.lz"), 1) == 1);
  CHECK(arf(load_fixture("granny.lz"), 1) == 0);
  CHECK(arf(load_fixture("cinquefoil.lz"), 1) == 1);
  CHECK_THROWS_AS(arf(load_fixture("unknot.lz"), 2), DiagramError);
}

TEST_CASE("Arf depends only on the component") {
  auto d = representative(parse_class("m=3; a=1,0,1; b=-1; c=1,0,1"));
  for (int i = 1; i <= 3; ++i) CHECK(arf(d, i) == arf(sublink(d, {i}), 1));
}

TEST_CASE("Sato-Levine invariants") {
  CHECK(sato_levine(load_fixture("unlink2.lz"), 1, 2) == 0);
  CHECK(sato_levine(load_fixture("whitehead.lz"), 1, 2) == 1);
  CHECK(sato_levine(load_fixture("whitehead.lz"), 2, 1) == 1);

  // two clasps in a row on a 2-unlink
  Tangle t = representative_tangle(parse_class("m=2; a=0,0; b=; c=1"));
  t.append(representative_tangle(parse_class("m=2; a=0,0; b=; c=1")));
  CHECK(sato_levine(t.closure(), 1, 2) == 2);

  try {
    sato_levine(load_fixture("hopf+.lz"), 1, 2);
    FAIL("expected InvariantUndefined");
  } catch (const InvariantUndefined& e) {
    CHECK(e.linking() == 1);
  }
}

TEST_CASE("invariant tuples") {
  auto u = invariant_tuple(load_fixture("unlink3.lz"));
  CHECK(u.arf == std::vector<int>{0, 0, 0});
  CHECK(u.triple == std::vector<std::int64_t>{0});
  CHECK(u.sato_levine == std::vector<std::int64_t>{0, 0, 0});
  CHECK(linking_vanishes(u.linking));

  auto b = invariant_tuple(load_fixture("borromean.lz"));
  CHECK(b.arf == std::vector<int>{0, 0, 0});
  CHECK(b.triple == std::vector<std::int64_t>{1});
  CHECK(b.sato_levine == std::vector<std::int64_t>{0, 0, 0});

  auto h = invariant_tuple(load_fixture("hopf+.lz"));
  CHECK(!linking_vanishes(h.linking));
  CHECK(!h.triple);
  CHECK(!h.sato_levine);
  CHECK(h.linking == std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}});
}

TEST_CASE("invariant tuple JSON") {
  auto j = to_json(invariant_tuple(load_fixture("borromean.lz")));
  CHECK(j.dump() ==
        R"j({"m":3,"linking":[[0,0,0],[0,0,0],[0,0,0]],"arf":[0,0,0],"triple":{"(1,2,3)":1},)j"
        R"j("sato_levine":{"(1,2)":0,"(1,3)":0,"(2,3)":0}})j");
  auto h = to_json(invariant_tuple(load_fixture("hopf+.lz")));
  CHECK(h["triple"].is_null());
  CHECK(h["sato_levine"].is_null());
}

TEST_CASE("component indexing is lexicographic") {
  auto t = component_triples(4);
  REQUIRE(t.size() == 4);
  CHECK(t[0] == std::array{1, 2, 3});
  CHECK(t[1] == std::array{1, 2, 4});
  CHECK(t[2] == std::array{1, 3, 4});
  CHECK(t[3] == std::array{2, 3, 4});
  auto p = component_pairs(3);
  CHECK(p == std::vector<std::array<int, 2>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(choose2(5) == 10);
  CHECK(choose3(5) == 10);
  CHECK(choose3(2) == 0);
}
