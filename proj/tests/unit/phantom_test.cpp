#include <doctest.h>

#include <quiverlab/error.hpp>
#include <quiverlab/fixtures.hpp>
#include <quiverlab/phantom.hpp>

using namespace quiverlab;

namespace {

AlgebraPtr ex2() { return fixtures::ex2_algebra(Field::rationals()); }

FamilyGenerator strings(const AlgebraPtr& a) {
  return [a](std::size_t n) {
    Representation m = fixtures::string_module(a, n).module;
    return FamilyMember{"M" + std::to_string(n), m, pdim(m)};
  };
}

}  // namespace

TEST_SUITE("phantom") {
  TEST_CASE("N_n dimensions and errors") {
    AlgebraPtr a = ex2();
    auto beta = a->path("beta");
    auto alpha = a->path("alpha");
    for (std::size_t n = 1; n <= 4; ++n) CHECK(build_Nn(a, beta, alpha, n).module.total_dim() == 2 * n + 2);
    CHECK_THROWS_AS(build_Nn(a, beta, a->path("gamma"), 2), Error);
    CHECK_THROWS_AS(build_Nn(a, beta, a->idempotent(0), 2), Error);
    CHECK(pair_module(a, beta, alpha).module.dims() == std::vector<std::size_t>{1, 1});
  }

  TEST_CASE("zipper alignment") {
    AlgebraPtr a = ex2();
    ZipperSpec ok{{0}, {a->path("beta")}, {a->path("alpha")}};
    CHECK_FALSE(ok.alignment_error(*a).has_value());
    ZipperSpec wrong{{1}, {a->path("beta")}, {a->path("alpha")}};
    CHECK(wrong.alignment_error(*a).has_value());
    CHECK_THROWS_AS(build_zipper(a, wrong, 2), Error);
    CHECK(build_zipper(a, ok, 3).module.dims() == build_Nn(a, a->path("beta"), a->path("alpha"), 3).module.dims());
  }

  TEST_CASE("tower over the string modules grows") {
    AlgebraPtr a = ex2();
    PhantomTower t = phantom_tower(simple_module(a, 0), strings(a));
    CHECK(t.coherent());
    TowerReport r = tower_report(t);
    CHECK(r.u_dims == std::vector<std::size_t>{2, 4, 6, 8});
    CHECK(r.growth);
    CHECK(r.verdict == "growth evidence");
    CHECK(tower_dot(t).find("digraph") == 0);
  }

  TEST_CASE("even stages match the naive Fitting oracle") {
    AlgebraPtr a = ex2();
    Representation s1 = simple_module(a, 0);
    TowerOptions o;
    o.budget = 3;
    PhantomTower t = phantom_tower(s1, strings(a), o);
    for (std::size_t i = 0; i + 1 < t.stages.size(); i += 2) {
      CAPTURE(i);
      FiniteCategory c;
      c.closure = kFinitePdim;
      c.add("A", t.stages[i].approx.source(), t.stages[i].pdim);
      ApproxCertificate oracle = right_minimize(naive_approximation(c, s1));
      CHECK(is_isomorphic(oracle.source(), t.stages[i + 1].approx.source()).status == IsoStatus::Yes);
      CHECK(is_approximation(t.stages[i + 1].approx.map, c).ok);
    }
  }

  TEST_CASE("tower with the hook module stabilizes") {
    AlgebraPtr d = fixtures::delta_algebra(Field::rationals());
    Representation a1 = fixtures::hook_module(d).module;
    TowerOptions o;
    o.ambient.push_back({"A1", a1, pdim(a1)});
    TowerReport r = tower_report(phantom_tower(simple_module(d, 0), strings(d), o));
    CHECK(r.u_dims == std::vector<std::size_t>{4, 4, 4, 4});
    CHECK_FALSE(r.growth);
  }

  TEST_CASE("subfactor search") {
    AlgebraPtr a = ex2();
    auto beta = a->path("beta");
    auto alpha = a->path("alpha");
    SubfactorVerdict yes = subfactor_check(fixtures::string_module(a, 2).module, build_Nn(a, beta, alpha, 3).module);
    REQUIRE(yes.status == SubfactorStatus::Yes);
    REQUIRE(yes.surjection);
    CHECK(yes.surjection->is_surjective());
    CHECK(yes.surjection->is_homomorphism());
    CHECK(subfactor_check(build_Nn(a, beta, alpha, 3).module, fixtures::string_module(a, 2).module).status ==
          SubfactorStatus::No);
    CHECK(subfactor_check(simple_module(a, 1), projective_module(a, 1)).status == SubfactorStatus::Yes);
  }
}
