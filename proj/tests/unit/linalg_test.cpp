#include <doctest.h>

#include <limits>

#include <quiverlab/error.hpp>
#include <quiverlab/linalg.hpp>

using namespace quiverlab;

TEST_SUITE("linalg") {
  TEST_CASE("rationals normalize and spill into GMP") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational::parse("-6/8").to_string() == "-3/4");
    const long big = std::numeric_limits<long>::max();
    Rational r = Rational(big) * Rational(big);
    CHECK(r.to_mpq() == mpq_class(mpz_class(big) * mpz_class(big)));
    CHECK(r / Rational(big) == Rational(big));
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  }

  TEST_CASE("prime field arithmetic") {
    Field f = Field::prime(7);
    Scalar a = f.from_integer(3);
    CHECK(a * a.inverse() == f.one());
    CHECK((a + f.from_integer(4)).is_zero());
    CHECK(f.from_rational(Rational(1, 2)) == f.from_integer(4));
    CHECK_THROWS(Field::prime(8));
  }

  TEST_CASE("echelon membership and coordinates") {
    Echelon e(3);
    CHECK(e.insert({1, 2, 0}));
    CHECK(e.insert({0, 1, 1}));
    CHECK_FALSE(e.insert({1, 3, 1}));
    CHECK(e.rank() == 2);
    CHECK(e.contains({2, 5, 1}));
    CHECK_FALSE(e.contains({0, 0, 1}));
    Vec c = e.coordinates({2, 5, 1});
    Vec back = zero_vec(3);
    for (std::size_t i = 0; i < c.size(); ++i) axpy(back, c[i], e.basis()[i]);
    CHECK(back == Vec{2, 5, 1});
  }

  TEST_CASE("nullspace, solve, inverse") {
    Matrix m = Matrix::from_rows(3, {{1, 2, 3}, {2, 4, 6}});
    CHECK(rank(m) == 1);
    auto ns = nullspace(m);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) CHECK(is_zero(m * v));
    CHECK(solve(m, {1, 2}).has_value());
    CHECK_FALSE(solve(m, {1, 1}).has_value());

    Matrix a = Matrix::from_rows(2, {{2, 1}, {1, 1}});
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(2));
    CHECK_FALSE(inverse(m).has_value());

    Matrix w = Matrix::from_rows(3, {{1, 0, 2}, {0, 1, 1}});
    auto r = right_inverse(w);
    REQUIRE(r);
    CHECK(w * *r == Matrix::identity(2));
  }

  TEST_CASE("intersection and sum of subspaces") {
    Echelon a = Echelon::span(3, {{1, 0, 0}, {0, 1, 0}});
    Echelon b = Echelon::span(3, {{0, 1, 0}, {0, 0, 1}});
    CHECK(intersect(a, b).rank() == 1);
    CHECK(sum(a, b).rank() == 3);
  }
}
