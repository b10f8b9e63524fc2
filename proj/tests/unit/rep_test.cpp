#include <doctest.h>

#include <quiverlab/error.hpp>
#include <quiverlab/fixtures.hpp>

using namespace quiverlab;

namespace {

AlgebraPtr ex2() { return fixtures::ex2_algebra(Field::rationals()); }

}  // namespace

TEST_SUITE("rep") {
  TEST_CASE("projectives and simples") {
    AlgebraPtr a = ex2();
    CHECK(projective_module(a, 0).dims() == std::vector<std::size_t>{2, 2});
    CHECK(projective_module(a, 1).dims() == std::vector<std::size_t>{1, 1});
    CHECK(simple_module(a, 1).dims() == std::vector<std::size_t>{0, 1});
    CHECK(is_projective(projective_module(a, 0)));
    CHECK_FALSE(is_projective(simple_module(a, 0)));
  }

  TEST_CASE("validation rejects relation violations") {
    AlgebraPtr a = ex2();
    std::vector<Matrix> arrows(3, Matrix(1, 1));
    arrows[0](0, 0) = 1;  // alpha
    arrows[2](0, 0) = 1;  // gamma, so alpha*gamma acts as 1
    CHECK_THROWS_AS(Representation(a, {1, 1}, arrows), Error);
    arrows[2](0, 0) = 0;
    CHECK_NOTHROW(Representation(a, {1, 1}, arrows));
  }

  TEST_CASE("Hom dimensions") {
    AlgebraPtr a = ex2();
    Representation p1 = projective_module(a, 0);
    Representation s1 = simple_module(a, 0);
    CHECK(hom_dim(p1, s1) == 1);
    CHECK(hom_dim(s1, p1) == 1);  // socle of Λe_1 contains gamma*alpha
    CHECK(hom_dim(p1, p1) == 2);
    Representation m2 = fixtures::string_module(a, 2).module;
    CHECK(hom_dim(m2, s1) == 2);
  }

  TEST_CASE("kernel, image, quotient") {
    AlgebraPtr a = ex2();
    ProjectiveCover pc = projective_cover(fixtures::string_module(a, 2).module);
    Embedded k = kernel(pc.epi);
    ImageResult im = image(pc.epi);
    CHECK(k.module.total_dim() + im.module.total_dim() == pc.projective.total_dim());
    CHECK(compose(pc.epi, k.inclusion).is_zero());
    CHECK(compose(im.inclusion, im.corestriction) == pc.epi);
    Quotient q = quotient(pc.projective, k.sub);
    CHECK(q.module.dims() == pc.epi.target().dims());

    Representation p1 = projective_module(a, 0);
    Submodule bad = generated_submodule(p1, {});
    bad.parts[0].insert(p1.vertex_part(p1.embed(0, unit_vec(2, 0)), 0));
    CHECK_FALSE(is_submodule(p1, bad));
    CHECK_THROWS_AS(quotient(p1, bad), Error);
  }

  TEST_CASE("top, radical, socle") {
    AlgebraPtr a = ex2();
    Representation m3 = fixtures::string_module(a, 3).module;
    CHECK(top(m3) == std::vector<std::size_t>{3, 0});
    CHECK(radical(m3).module.dims() == std::vector<std::size_t>{0, 3});
    CHECK(socle(m3).module.dims() == std::vector<std::size_t>{0, 3});
    CHECK(composition_multiplicities(m3) == std::vector<std::size_t>{3, 3});
  }

  TEST_CASE("direct sums split") {
    AlgebraPtr a = ex2();
    DirectSum s = direct_sum(a, {simple_module(a, 0), projective_module(a, 1)});
    CHECK(s.module.dims() == std::vector<std::size_t>{2, 1});
    for (std::size_t i = 0; i < 2; ++i) CHECK(compose(s.projections[i], s.inclusions[i]).is_isomorphism());
    CHECK(compose(s.projections[0], s.inclusions[1]).is_zero());
  }

  TEST_CASE("presented modules") {
    AlgebraPtr a = ex2();
    PresentedModule pm = presented_module(a, {0}, {{a->path("alpha")}});
    CHECK(pm.module.dims() == std::vector<std::size_t>{1, 1});
    CHECK(pm.relations.total_dim() == 2);
    CHECK_THROWS_AS(presented_module(a, {0}, {{a->path("gamma")}}), Error);
  }
}
