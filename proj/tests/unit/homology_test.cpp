#include <doctest.h>

#include <quiverlab/fixtures.hpp>
#include <quiverlab/homology.hpp>
#include <quiverlab/monomial.hpp>

using namespace quiverlab;

namespace {

AlgebraPtr ex2() { return fixtures::ex2_algebra(Field::rationals()); }

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("isomorphism verdicts carry witnesses or invariants") {
    AlgebraPtr a = ex2();
    Representation m2 = fixtures::string_module(a, 2).module;
    IsoVerdict yes = is_isomorphic(m2, fixtures::string_module(a, 2).module);
    REQUIRE(yes.status == IsoStatus::Yes);
    REQUIRE(yes.witness);
    CHECK(yes.witness->is_isomorphism());
    CHECK(compose(inverse_map(*yes.witness), *yes.witness) == ModuleMap::identity(m2));
    IsoVerdict no = is_isomorphic(m2, projective_module(a, 0));
    CHECK(no.status == IsoStatus::No);
    CHECK_FALSE(no.reason.empty());
  }

  TEST_CASE("local summands of the radical") {
    AlgebraPtr a = ex2();
    Representation rad = radical(projective_module(a, 0)).module;
    for (const char* p : {"beta", "alpha"}) {
      auto s = split_local_summand(path_node_module(a, a->quiver().parse_path(p)), rad);
      REQUIRE(s);
      CHECK(compose(s->retraction, s->section) == ModuleMap::identity(s->section.source()));
    }
    CHECK_FALSE(split_local_summand(simple_module(a, 0), rad).has_value());
  }

  TEST_CASE("projective dimension of simples over the two-arrow algebra") {
    AlgebraPtr a = ex2();
    PdimVerdict s2 = pdim(simple_module(a, 1));
    REQUIRE(s2.is_infinite());
    REQUIRE(s2.cycle);
    CHECK(s2.cycle->chain.size() - 1 - s2.cycle->cycle_start == 2);
    CHECK(verify_pdim(simple_module(a, 1), s2));
    CHECK_FALSE(verify_pdim(simple_module(a, 1), PdimVerdict::finite(0)));
    CHECK(pdim(projective_module(a, 0)).to_string() == "Finite(0)");
  }

  TEST_CASE("syzygy iteration finds the period without the monomial shortcut") {
    AlgebraPtr a = ex2();
    PdimOptions o;
    o.use_monomial = false;
    PdimVerdict v = pdim(simple_module(a, 1), o);
    REQUIRE(v.is_infinite());
    CHECK(v.period.has_value());
    CHECK(verify_pdim(simple_module(a, 1), v));
  }

  TEST_CASE("first syzygy of the hook module") {
    AlgebraPtr d = fixtures::delta_algebra(Field::rationals());
    Representation a1 = fixtures::hook_module(d).module;
    Representation two = direct_sum(d, {projective_module(d, 1), projective_module(d, 1)}).module;
    CHECK(is_isomorphic(syzygy(a1), two).status == IsoStatus::Yes);
    CHECK(pdim(a1).to_string() == "Finite(1)");
  }

  TEST_CASE("syzygies stop at zero") {
    AlgebraPtr a = ex2();
    auto omegas = syzygies(projective_module(a, 0), 5);
    CHECK(omegas.size() == 2);
    CHECK(omegas.back().is_zero());
  }
}
