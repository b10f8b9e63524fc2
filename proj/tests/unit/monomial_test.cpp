#include <doctest.h>

#include <quiverlab/error.hpp>
#include <quiverlab/fixtures.hpp>
#include <quiverlab/monomial.hpp>

using namespace quiverlab;

TEST_SUITE("monomial") {
  TEST_CASE("syzygies of path modules are path modules") {
    AlgebraPtr a = fixtures::ex2_algebra(Field::rationals());
    const Quiver& q = a->quiver();
    auto om = path_ideal_syzygy(a, q.parse_path("beta"));
    REQUIRE(om.size() == 1);
    CHECK(q.path_string(om[0]) == "gamma");
    auto top = path_ideal_syzygy(a, PathWord::trivial(0));
    CHECK(top.size() == 2);  // Je_1 = Λalpha ⊕ Λbeta
    CHECK_THROWS_AS(path_ideal_syzygy(a, q.parse_path("alpha*gamma")), Error);
  }

  TEST_CASE("exact projective dimensions") {
    AlgebraPtr a = fixtures::ex2_algebra(Field::rationals());
    const Quiver& q = a->quiver();
    CHECK(path_pdim(a, q.parse_path("alpha")).to_string() == "Finite(0)");
    PdimVerdict b = path_pdim(a, q.parse_path("beta"));
    REQUIRE(b.is_infinite());
    REQUIRE(b.cycle);
    CHECK(verify_cycle_witness(a, *b.cycle));
    CHECK(path_pdim(a, PathWord::trivial(1)).is_infinite());
  }

  TEST_CASE("summands of the radical") {
    AlgebraPtr a = fixtures::ex12_algebra(Field::rationals());
    const Quiver& q = a->quiver();
    CHECK(summand_of_radical(a, q.parse_path("alpha"), 0));
    CHECK(summand_of_radical(a, q.parse_path("beta"), 0));
    CHECK_FALSE(summand_of_radical(a, q.parse_path("gamma*beta"), 0));
  }

  TEST_CASE("decomposition into path modules") {
    AlgebraPtr a = fixtures::ex2_algebra(Field::rationals());
    auto parts = decompose_into_path_modules(a, radical(projective_module(a, 0)).module);
    REQUIRE(parts);
    CHECK(parts->size() == 2);
    CHECK_FALSE(decompose_into_path_modules(a, fixtures::string_module(a, 2).module).has_value());
  }

  TEST_CASE("path_pdim refuses non-monomial algebras") {
    AlgebraPtr a = fixtures::ex13_algebra(Field::rationals());
    try {
      path_pdim(a, a->quiver().parse_path("alpha"));
      FAIL("expected NotMonomial");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotMonomial);
    }
  }
}
