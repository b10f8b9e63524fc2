#include <doctest.h>

#include <quiverlab/criteria.hpp>
#include <quiverlab/error.hpp>
#include <quiverlab/fixtures.hpp>

using namespace quiverlab;

namespace {

AlgebraPtr ex2() { return fixtures::ex2_algebra(Field::rationals()); }

PathWord path(const AlgebraPtr& a, const char* p) { return a->quiver().parse_path(p); }

}  // namespace

TEST_SUITE("criteria") {
  TEST_CASE("two-arrow algebra has no approximation of S1") {
    AlgebraPtr a = ex2();
    CriterionReport r = criterion1_check(a, path(a, "beta"), path(a, "alpha"));
    CHECK(r.overall == OverallVerdict::NoApproximation);
    for (const char* c : {"intersection", "(i)", "(ii)", "(iii)"}) CHECK(r.status(c) == ConditionStatus::Certified);
    CHECK(r.replay());
  }

  TEST_CASE("p = q refutes the intersection condition") {
    AlgebraPtr a = ex2();
    CriterionReport r = criterion1_check(a, path(a, "beta"), path(a, "beta"));
    CHECK(r.overall == OverallVerdict::Inconclusive);
    CHECK(r.status("intersection") == ConditionStatus::Refuted);
  }

  TEST_CASE("swapped paths refute (iii) with a counterexample") {
    AlgebraPtr a = ex2();
    CriterionReport r = criterion1_check(a, path(a, "alpha"), path(a, "beta"));
    CHECK(r.status("(iii)") == ConditionStatus::Refuted);
    const ConditionEntry* e = r.find("(ii)");
    REQUIRE(e);
    CHECK(e->status == ConditionStatus::Refuted);
    CHECK(r.replay());
  }

  TEST_CASE("a path in the ideal fails the precondition") {
    AlgebraPtr a = ex2();
    CriterionReport r = criterion1_check(a, path(a, "beta"), path(a, "alpha*gamma"));
    CHECK(r.precondition_failure.has_value());
    CHECK(r.overall == OverallVerdict::Inconclusive);
  }

  TEST_CASE("condition (ii) violations are exact") {
    AlgebraPtr x = fixtures::xi_algebra(Field::rationals());
    Representation m = fixtures::hook_module(x).module;
    auto v = condition2_falsify(x, x->path("beta"), x->path("alpha"), m);
    REQUIRE(v);
    CHECK(v->verify());
    CHECK(v->pdim.to_string() == "Finite(1)");
    AlgebraPtr a = ex2();
    for (std::size_t n = 1; n <= 3; ++n)
      CHECK_FALSE(condition2_falsify(a, a->path("beta"), a->path("alpha"), fixtures::string_module(a, n).module));
    CHECK_THROWS_AS(condition2_falsify(a, a->path("beta"), a->path("alpha"), simple_module(a, 1)), Error);
  }

  TEST_CASE("zipper criterion") {
    AlgebraPtr a = ex2();
    CriterionReport good = criterion10_check(a, ZipperSpec{{0}, {a->path("beta")}, {a->path("alpha")}});
    CHECK(good.overall == OverallVerdict::NoApproximation);
    CriterionReport bad = criterion10_check(a, ZipperSpec{{0}, {a->path("alpha")}, {a->path("beta")}});
    CHECK(bad.status("(2)(i)") == ConditionStatus::Refuted);
    CHECK(bad.overall == OverallVerdict::Inconclusive);
  }

  TEST_CASE("seed certificates") {
    AlgebraPtr a = ex2();
    SeedReport s = remark11_seed(a, 0, {a->quiver().arrow_index("beta")});
    CHECK(s.summand_split);
    CHECK(s.arrow_pdims.at(0).is_infinite());
    try {
      remark11_seed(a, 0, {a->quiver().arrow_index("alpha")});
      FAIL("expected FinitePdimArrow");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::FinitePdimArrow);
    }
    AlgebraPtr n = fixtures::ex13_algebra(Field::rationals());
    CHECK_THROWS_AS(remark11_seed(n, 0, {0}), Error);
  }
}
