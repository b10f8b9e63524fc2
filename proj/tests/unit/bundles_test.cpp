#include <doctest.h>

#include <quiverlab/bundles.hpp>
#include <quiverlab/error.hpp>

using namespace quiverlab;

TEST_SUITE("bundles") {
  TEST_CASE("every expected-value table replays") {
    for (const auto& id : fixture_ids()) {
      FixtureBundle b = load_fixture(id, Field::rationals());
      CHECK_FALSE(b.table.empty());
      for (const auto& r : b.run()) {
        CAPTURE(id);
        CAPTURE(r.key);
        CAPTURE(r.actual);
        CHECK(r.expected == r.actual);
        CHECK(r.passed);
      }
    }
  }

  TEST_CASE("fixtures name their modules") {
    FixtureBundle b = load_fixture("ex4", Field::rationals());
    CHECK(b.module("M").total_dim() == 5);
    CHECK(b.module("E3").dims() == std::vector<std::size_t>{3, 3, 2});
    CHECK_THROWS_AS(b.module("nope"), Error);
    CHECK_THROWS_AS(load_fixture("ex99"), Error);
  }
}
