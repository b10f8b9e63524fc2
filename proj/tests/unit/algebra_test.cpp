#include <doctest.h>

#include <quiverlab/error.hpp>
#include <quiverlab/fixtures.hpp>
#include <quiverlab/io.hpp>

using namespace quiverlab;

TEST_SUITE("algebra") {
  TEST_CASE("two-arrow algebra basis") {
    AlgebraPtr a = fixtures::ex2_algebra(Field::rationals());
    CHECK(a->dim() == 6);
    CHECK(a->degree_sizes() == std::vector<std::size_t>{2, 3, 1});
    CHECK(a->loewy_length() == 3);
    CHECK(a->is_monomial());
    CHECK(a->basis_from(0).size() == 4);
    CHECK(a->basis_from(1).size() == 2);
  }

  TEST_CASE("p*q applies q first") {
    AlgebraPtr a = fixtures::ex2_algebra(Field::rationals());
    const Quiver& q = a->quiver();
    PathWord ga = q.parse_path("gamma*alpha");
    CHECK(ga.source == q.vertex_index("1"));
    CHECK(ga.target == q.vertex_index("1"));
    CHECK(q.path_string(ga) == "gamma*alpha");
    CHECK_FALSE(a->path(ga).is_zero());
    CHECK(a->path("alpha*gamma").is_zero());
    CHECK(a->multiply(a->path("gamma"), a->path("alpha")) == a->path(ga));
    try {
      q.compose(q.parse_path("alpha"), q.parse_path("beta"));
      FAIL("expected EndpointMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EndpointMismatch);
    }
    CHECK(q.path_string(q.parse_path("e[2]")) == "e[2]");
  }

  TEST_CASE("non-monomial relations reduce") {
    AlgebraPtr a = fixtures::ex13_algebra(Field::rationals());
    CHECK_FALSE(a->is_monomial());
    CHECK(a->path("gamma*alpha") == a->path("delta*beta"));
  }

  TEST_CASE("construction errors") {
    auto kind = [](const char* text) {
      try {
        parse_algebra(text);
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::Parse;  // unreachable in these cases
    };
    CHECK(kind("vertex 1\narrow a 1 1\nmaxlen 4\n") == ErrorKind::NonAdmissible);
    CHECK(kind("vertex 1 2\narrow a 1 2\narrow b 2 1\nrel b*a - a\n") == ErrorKind::InhomogeneousRelation);
    CHECK(kind("vertex 1 2\narrow a 1 2\nrel a*a\n") == ErrorKind::Parse);
    CHECK(kind("vertex 1\narrow a 1 3\n") == ErrorKind::Parse);
  }

  TEST_CASE("left ideals") {
    AlgebraPtr a = fixtures::ex2_algebra(Field::rationals());
    CHECK(left_ideal_dimension(*a, {a->path("beta")}).dimension == 1);
    CHECK(left_ideal_dimension(*a, {a->path("alpha")}).dimension == 2);
    CHECK(left_ideal_intersection(*a, {a->path("alpha")}, {a->path("beta")}).dimension == 0);
    auto ends = a->endpoints(a->path("gamma*alpha"));
    REQUIRE(ends);
    CHECK(ends->first == 0);
    CHECK(ends->second == 0);
  }
}
