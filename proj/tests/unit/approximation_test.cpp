#include <doctest.h>

#include <quiverlab/approximation.hpp>
#include <quiverlab/fixtures.hpp>

using namespace quiverlab;

namespace {

AlgebraPtr ex2() { return fixtures::ex2_algebra(Field::rationals()); }

FiniteCategory strings(const AlgebraPtr& a, std::size_t from, std::size_t to) {
  FiniteCategory c;
  c.closure = kFinitePdim;
  for (std::size_t n = from; n <= to; ++n) {
    Representation m = fixtures::string_module(a, n).module;
    c.add("M" + std::to_string(n), m, pdim(m));
  }
  return c;
}

}  // namespace

TEST_SUITE("approximation") {
  TEST_CASE("canonical M1 -> S1 does not approximate {M2}") {
    AlgebraPtr a = ex2();
    auto hs = hom_space(fixtures::string_module(a, 1).module, simple_module(a, 0));
    REQUIRE(hs.size() == 1);
    ApproxCheck r = is_approximation(hs[0], strings(a, 2, 2));
    CHECK_FALSE(r.ok);
    REQUIRE(r.failure);
    CHECK_FALSE(factor_through(hs[0], r.failure->second).has_value());
  }

  TEST_CASE("greedy approximation of S1 by string modules") {
    AlgebraPtr a = ex2();
    FiniteCategory c = strings(a, 1, 4);
    ApproxCertificate cert = approximate(c, simple_module(a, 0));
    CHECK(cert.verify());
    CHECK(is_approximation(cert.map, c).ok);
    auto hs = hom_space(projective_module(a, 0), simple_module(a, 0));
    REQUIRE(hs.size() == 1);
    CHECK(is_right_minimal(hs[0]));
    CHECK_FALSE(is_approximation(hs[0], c).ok);
  }

  TEST_CASE("naive construction plus Fitting reduction matches the greedy scan") {
    AlgebraPtr a = ex2();
    Representation s1 = simple_module(a, 0);
    FamilyGenerator gen = [a](std::size_t n) {
      Representation m = fixtures::string_module(a, n).module;
      return FamilyMember{"M" + std::to_string(n), m, pdim(m)};
    };
    ScanResult scan = approximation_growth_scan(gen, s1, 5);
    REQUIRE(scan.rows.size() == 5);
    for (std::size_t n = 1; n <= 5; ++n) {
      ApproxCertificate naive = naive_approximation(strings(a, 1, n), s1);
      CHECK(naive.verify());
      ApproxCertificate oracle = right_minimize(naive);
      CHECK(oracle.verify());
      CHECK(is_right_minimal(oracle.map));
      CHECK(scan.rows[n - 1].source_dim == oracle.source().total_dim());
      CHECK(scan.rows[n - 1].minimized);
      CHECK(scan.rows[n - 1].witnesses_verified);
    }
    CHECK(scan_is_monotone(scan.rows));
    CHECK(scan_shows_growth(scan.rows, 3));
  }

  TEST_CASE("naive sources are not minimal when Hom has several maps") {
    AlgebraPtr a = ex2();
    ApproxCertificate naive = naive_approximation(strings(a, 2, 2), simple_module(a, 0));
    CHECK(naive.source().total_dim() == 8);
    CHECK_FALSE(is_right_minimal(naive.map));
    CHECK_FALSE(annihilating_endomorphisms(naive.map).empty());
  }

  TEST_CASE("family flags re-verify") {
    AlgebraPtr a = ex2();
    FiniteCategory c = strings(a, 1, 3);
    CHECK(c.verify_flags());
    c.add("S2", simple_module(a, 1), pdim(simple_module(a, 1)));
    CHECK_FALSE(c.verify_flags());
  }
}
