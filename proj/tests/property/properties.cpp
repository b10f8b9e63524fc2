#include <doctest.h>

#include <iostream>

#include <quiverlab/config.hpp>

#include "properties.hpp"

namespace {

constexpr std::size_t kCases = 200;

void check_suite(const qtest::SuiteResult& r) {
  INFO(r.name);
  CHECK(r.cases >= 1);
  for (const auto& f : r.failures) FAIL_CHECK(f);
  MESSAGE(r.name << ": " << r.cases << " cases, " << r.failures.size() << " failures");
}

std::uint64_t seed() {
  static const std::uint64_t s = [] {
    auto v = quiverlab::default_seed();
    std::cout << "property seed " << v << "\n";
    return v;
  }();
  return s;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("constructors keep representations valid") {
    auto r = qtest::constructors_valid(seed(), kCases);
    CHECK(r.cases >= kCases);
    check_suite(r);
  }
  TEST_CASE("Hom solver against brute force") {
    auto r = qtest::hom_vs_brute_force(seed() + 1, kCases);
    CHECK(r.cases >= kCases);
    check_suite(r);
  }
  TEST_CASE("syzygy dimension law") {
    auto r = qtest::syzygy_dimension_law(seed() + 2, kCases);
    CHECK(r.cases >= kCases);
    check_suite(r);
  }
  TEST_CASE("projective cover contract") {
    auto r = qtest::projective_cover_contract(seed() + 3, kCases);
    CHECK(r.cases >= kCases);
    check_suite(r);
  }
  TEST_CASE("right_minimize is idempotent and keeps the approximation") {
    auto r = qtest::minimize_idempotent(seed() + 4, kCases);
    CHECK(r.cases >= kCases);
    check_suite(r);
  }
  TEST_CASE("path_pdim agrees with syzygy iteration") {
    auto r = qtest::path_pdim_agreement();
    CHECK(r.cases == 6 + 11);
    check_suite(r);
  }
}
