#include "doctest.h"
#include "oracles.hpp"

using namespace infotile;

namespace {

TileSet mono() { return {1, {{1, 1, 1, 1}}}; }
TileSet mismatch() { return {2, {{1, 1, 2, 1}}}; }
TileSet checker() { return {4, {{1, 3, 2, 4}, {2, 4, 1, 3}}}; }

}  // namespace

TEST_CASE("fixed tile sets") {
  auto m = find_periodic_tiling(mono(), 6);
  REQUIRE(m);
  CHECK(m->a == 1);
  CHECK(m->b == 1);
  CHECK(!find_periodic_tiling(mismatch(), 6));
  auto c = find_periodic_tiling(checker(), 6);
  REQUIRE(c);
  CHECK(c->a == 2);
  CHECK(c->b == 2);
  CHECK(oracle::tiling_valid(checker(), *c));
  CHECK(validate_tiling(checker(), *c));
  CHECK(!tile_torus(checker(), 1, 2));
  CHECK(!tile_torus(checker(), 3, 3));
}

TEST_CASE("tiling validation") {
  PeriodicTiling t{2, 2, {{0, 0}, {0, 0}}};
  CHECK(!validate_tiling(checker(), t));
  PeriodicTiling bad{2, 2, {{0, 7}, {0, 0}}};
  CHECK_THROWS(validate_tiling(checker(), bad));
  CHECK_THROWS(validate_tileset({1, {{1, 1, 2, 1}}}));
  CHECK_THROWS(validate_tileset({1, {}}));
}

TEST_CASE("json round trip and rendering") {
  auto c = *find_periodic_tiling(checker(), 4);
  auto back = tiling_from_json(tiling_json(c));
  CHECK(back.grid == c.grid);
  CHECK(tileset_from_json(tileset_json(checker())).tiles == checker().tiles);
  CHECK(!render_tiling(checker(), c).empty());
  CHECK_THROWS_AS(tileset_from_json(json::parse(R"({"colors":2,"tiles":[[1,2,3]]})")), std::invalid_argument);
}

TEST_CASE("agreement with the backtracking oracle, two colors") {
  for (int nt = 1; nt <= 3; ++nt)
    oracle::for_each_tileset(2, nt, [&](const TileSet& ts) {
      bool any = false;
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
          bool want = oracle::torus_tileable(ts, a, b);
          auto got = tile_torus(ts, a, b);
          REQUIRE(got.has_value() == want);
          if (got) REQUIRE(oracle::tiling_valid(ts, *got));
          any = any || want;
        }
      auto f = find_periodic_tiling(ts, 3);
      REQUIRE(f.has_value() == any);
    });
}

TEST_CASE("search is independent of the worker count") {
  TileSet ts{3, {{1, 2, 3, 2}, {3, 2, 1, 2}, {2, 1, 2, 3}}};
  auto a = find_periodic_tiling(ts, 5, {1});
  auto b = find_periodic_tiling(ts, 5, {4});
  REQUIRE(a.has_value() == b.has_value());
  if (a) CHECK(tiling_json(*a) == tiling_json(*b));
}
