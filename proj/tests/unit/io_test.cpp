#include <doctest.h>

#include <quiverlab/bundles.hpp>
#include <quiverlab/error.hpp>
#include <quiverlab/fixtures.hpp>
#include <quiverlab/io.hpp>

using namespace quiverlab;

namespace {

void same_algebra(const Algebra& a, const Algebra& b) {
  CHECK(a.quiver() == b.quiver());
  CHECK(a.field() == b.field());
  CHECK(a.max_len() == b.max_len());
  CHECK(a.basis() == b.basis());
  CHECK(serialize_algebra(a) == serialize_algebra(b));
}

std::size_t parse_error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("every fixture algebra and module round-trips") {
    for (const auto& id : fixture_ids()) {
      CAPTURE(id);
      FixtureBundle b = load_fixture(id, Field::rationals());
      AlgebraPtr again = parse_algebra(serialize_algebra(*b.algebra));
      same_algebra(*b.algebra, *again);
      std::string text;
      for (const auto& [name, m] : b.modules) text += serialize_explicit(name, m);
      auto entries = parse_modules(b.algebra, text);
      REQUIRE(entries.size() == b.modules.size());
      for (std::size_t i = 0; i < entries.size(); ++i) {
        CAPTURE(b.modules[i].first);
        CHECK(entries[i].name == b.modules[i].first);
        CHECK(entries[i].module == b.modules[i].second);
      }
    }
  }

  TEST_CASE("algebras over a prime field round-trip") {
    for (AlgebraPtr a : {fixtures::ex13_algebra(Field::prime(5)), fixtures::ex12_algebra(Field::prime(2))}) {
      AlgebraPtr again = parse_algebra(serialize_algebra(*a));
      same_algebra(*a, *again);
    }
  }

  TEST_CASE("presented modules round-trip") {
    AlgebraPtr a = fixtures::delta_algebra(Field::rationals());
    for (const PresentedModule& p : {fixtures::string_module(a, 3), fixtures::hook_module(a)}) {
      auto entries = parse_modules(a, serialize_presented("X", p));
      REQUIRE(entries.size() == 1);
      REQUIRE(entries[0].presented);
      CHECK(entries[0].presented->generators == p.generators);
      CHECK(entries[0].presented->relators == p.relators);
      CHECK(entries[0].module == p.module);
    }
    AlgebraPtr n = fixtures::ex13_algebra(Field::rationals());
    PresentedModule c = fixtures::ex13_c_left(n, 2);
    CHECK(parse_modules(n, serialize_presented("C", c))[0].module == c.module);
  }

  TEST_CASE("elements parse with coefficients and signs") {
    AlgebraPtr a = fixtures::ex13_algebra(Field::rationals());
    AlgebraElement x = parse_element(*a, "2*gamma*alpha - 1/2*delta*beta");
    CHECK(x == a->scale(a->path("gamma*alpha"), Scalar(Rational(3, 2))));
    CHECK(parse_element(*a, format_element(*a, x)) == x);
  }

  TEST_CASE("parse errors name the line") {
    CHECK(parse_error_line([] { parse_algebra("vertex 1\n\narrow a 1 1\nbogus\n"); }) == 4);
    CHECK(parse_error_line([] { parse_algebra("vertex 1 2\narrow a 1 2\nrel a*b\n"); }) == 3);
    CHECK(parse_error_line([] { parse_algebra("# nothing\nfield F 4\n"); }) == 2);
    AlgebraPtr a = fixtures::ex2_algebra(Field::rationals());
    CHECK(parse_error_line([&] { parse_modules(a, "module M\npresented\ngen b1 1\nrel gamma*b1\n"); }) == 4);
    CHECK(parse_error_line([&] { parse_modules(a, "module M\nexplicit\ndims 1 1\narrow alpha 1 2\n"); }) == 4);
    CHECK(parse_error_line([&] { parse_modules(a, "gen b1 1\n"); }) == 1);
    CHECK(parse_error_line([&] { parse_modules(a, "module M\npresented\n\ngen b1 9\n"); }) == 4);
  }

  TEST_CASE("shipped data files load") {
    AlgebraPtr a = load_algebra(QUIVERLAB_DATA_DIR "/ex2.alg");
    CHECK(a->dim() == 6);
    auto strings = load_modules(a, QUIVERLAB_DATA_DIR "/ex2_strings.mod");
    REQUIRE(strings.size() == 3);
    for (std::size_t n = 1; n <= 3; ++n) {
      auto m = find_module(strings, "M" + std::to_string(n));
      CHECK(m.module.dims() == fixtures::string_module(a, n).module.dims());
      CHECK(is_isomorphic(m.module, fixtures::string_module(a, n).module).status == IsoStatus::Yes);
    }
    CHECK_THROWS_AS(find_module(strings, "M9"), Error);
    CHECK(parse_error_line([] { load_algebra(QUIVERLAB_DATA_DIR "/ex15.template.alg"); }) > 0);
  }
}
