#include "quiverlab/fixtures.hpp"

#include "quiverlab/error.hpp"

namespace quiverlab::fixtures {

namespace {

PathCombination monomial(const Quiver& q, std::string_view path) { return {{Scalar(1), q.parse_path(path)}}; }

std::vector<PathCombination> monomials(const Quiver& q, std::initializer_list<std::string_view> paths) {
  std::vector<PathCombination> out;
  for (auto p : paths) out.push_back(monomial(q, p));
  return out;
}

Quiver ex2_quiver(bool with_three) {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  if (with_three) q.add_vertex("3");
  q.add_arrow("alpha", 0, 1);
  q.add_arrow("beta", 0, 1);
  q.add_arrow("gamma", 1, 0);
  if (with_three) q.add_arrow("delta", 2, 0);
  return q;
}

std::size_t vertex(const Algebra& a, const std::string& name) { return a.quiver().vertex_index(name); }

}  // namespace

FreeElement free_element(const Algebra& a, const std::vector<std::size_t>& gens, const std::vector<Term>& terms) {
  FreeElement x(gens.size());
  for (const auto& t : terms) {
    if (t.gen >= gens.size()) throw Error(ErrorKind::MalformedRelator, "term names generator " + std::to_string(t.gen));
    x[t.gen] = a.add(x[t.gen], a.path(t.path), t.coeff);
  }
  return x;
}

PresentedModule present(const AlgebraPtr& alg, const std::vector<std::string>& gen_vertices,
                        const std::vector<std::vector<Term>>& relators) {
  std::vector<std::size_t> gens;
  for (const auto& v : gen_vertices) gens.push_back(vertex(*alg, v));
  std::vector<FreeElement> rels;
  for (const auto& r : relators) rels.push_back(free_element(*alg, gens, r));
  return presented_module(alg, gens, rels);
}

AlgebraPtr ex2_algebra(Field f) {
  Quiver q = ex2_quiver(false);
  auto rels = monomials(q, {"alpha*gamma", "beta*gamma", "gamma*beta"});
  return build_algebra(std::move(q), std::move(rels), 4, f);
}

AlgebraPtr delta_algebra(Field f) {
  Quiver q = ex2_quiver(true);
  auto rels = monomials(q, {"alpha*gamma", "beta*gamma", "gamma*beta", "beta*delta"});
  return build_algebra(std::move(q), std::move(rels), 4, f);
}

AlgebraPtr xi_algebra(Field f) {
  Quiver q = ex2_quiver(true);
  auto rels = monomials(q, {"alpha*gamma", "beta*gamma", "gamma*beta"});
  return build_algebra(std::move(q), std::move(rels), 5, f);
}

AlgebraPtr ex12_algebra(Field f) {
  Quiver q;
  for (auto v : {"1", "2", "3", "4"}) q.add_vertex(v);
  q.add_arrow("alpha", 0, 0);
  q.add_arrow("beta", 0, 1);
  q.add_arrow("gamma", 1, 2);
  q.add_arrow("delta", 2, 3);
  auto rels = monomials(q, {"alpha*alpha", "delta*gamma*beta"});
  return build_algebra(std::move(q), std::move(rels), 5, f);
}

AlgebraPtr ex13_algebra(Field f) {
  Quiver q;
  for (auto v : {"1", "2", "3", "4", "5", "6", "7", "8"}) q.add_vertex(v);
  q.add_arrow("alpha", 0, 1);
  q.add_arrow("beta", 0, 2);
  q.add_arrow("gamma", 1, 3);
  q.add_arrow("delta", 2, 3);
  q.add_arrow("epsilon", 3, 3);
  q.add_arrow("rho1", 4, 1);
  q.add_arrow("rho2", 4, 4);
  q.add_arrow("rho3", 6, 4);
  q.add_arrow("rho4", 6, 4);
  q.add_arrow("sigma1", 5, 2);
  q.add_arrow("sigma2", 5, 5);
  q.add_arrow("sigma3", 7, 5);
  q.add_arrow("sigma4", 7, 5);
  std::vector<PathCombination> rels{
      {{Scalar(1), q.parse_path("gamma*alpha")}, {Scalar(-1), q.parse_path("delta*beta")}}};
  for (auto& r : monomials(q, {"epsilon*gamma", "epsilon*delta", "epsilon*epsilon", "rho2*rho2", "rho1*rho2",
                               "sigma2*sigma2", "sigma1*sigma2", "rho1*rho4", "rho2*rho4", "sigma1*sigma4",
                               "sigma2*sigma4"}))
    rels.push_back(std::move(r));
  return build_algebra(std::move(q), std::move(rels), 5, f);
}

PresentedModule zipper_presentation(const AlgebraPtr& alg, std::size_t v, const AlgebraElement& p,
                                    const AlgebraElement& q, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "zipper needs n >= 1");
  const Algebra& a = *alg;
  auto src_ok = [&](const AlgebraElement& x) {
    auto ep = a.endpoints(x);
    return ep && ep->first == v;
  };
  if (!src_ok(p) || !src_ok(q))
    throw Error(ErrorKind::EndpointMismatch, "p and q must be nonzero and start at vertex " + a.quiver().vertex_name(v));
  std::vector<std::size_t> gens(n, v);
  std::vector<FreeElement> rels;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    FreeElement r(n);
    r[i] = p;
    r[i + 1] = a.scale(q, Scalar(-1));
    rels.push_back(std::move(r));
  }
  return presented_module(alg, std::move(gens), std::move(rels));
}

PresentedModule string_module(const AlgebraPtr& alg, std::size_t n) {
  std::vector<std::string> gens(n, "1");
  std::vector<std::vector<Term>> rels{{{Scalar(1), "alpha", 0}}};
  for (std::size_t i = 0; i + 1 < n; ++i) rels.push_back({{Scalar(1), "beta", i}, {Scalar(-1), "alpha", i + 1}});
  return present(alg, gens, rels);
}

PresentedModule hook_module(const AlgebraPtr& alg) { return e_module(alg, 2); }

PresentedModule e_module(const AlgebraPtr& alg, std::size_t n) {
  std::vector<std::string> gens{"1"};
  std::vector<std::vector<Term>> rels{{{Scalar(1), "alpha", 0}}};
  for (std::size_t i = 1; i < n; ++i) {
    gens.push_back("3");
    rels.push_back({{Scalar(1), i == 1 ? "beta" : "beta*delta", i - 1}, {Scalar(-1), "alpha*delta", i}});
  }
  return present(alg, gens, rels);
}

PresentedModule ex12_a1(const AlgebraPtr& alg) {
  return present(alg, {"1"}, {{{Scalar(1), "beta", 0}}, {{Scalar(1), "beta*alpha", 0}}});
}

namespace {

PresentedModule c_half(const AlgebraPtr& alg, std::size_t n, const char* keep, const char* kill, const char* r1,
                       const char* r2, const char* r3, const char* r4, const char* v2, const char* vrest) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "C_n needs n >= 1");
  std::vector<std::string> gens{"1"};
  std::vector<std::vector<Term>> rels{{{Scalar(1), kill, 0}}};
  if (n >= 2) {
    gens.push_back(v2);
    rels.push_back({{Scalar(1), keep, 0}, {Scalar(-1), r1, 1}});
  }
  for (std::size_t i = 2; i < n; ++i) {
    gens.push_back(vrest);
    rels.push_back({{Scalar(1), i == 2 ? r2 : r4, i - 1}, {Scalar(-1), r3, i}});
  }
  return present(alg, gens, rels);
}

}  // namespace

PresentedModule ex13_c_left(const AlgebraPtr& alg, std::size_t n) {
  return c_half(alg, n, "alpha", "beta", "rho1", "rho2", "rho3", "rho4", "5", "7");
}

PresentedModule ex13_c_right(const AlgebraPtr& alg, std::size_t n) {
  return c_half(alg, n, "beta", "alpha", "sigma1", "sigma2", "sigma3", "sigma4", "6", "8");
}

Representation ex13_c(const AlgebraPtr& alg, std::size_t n) {
  return direct_sum(alg, {ex13_c_left(alg, n).module, ex13_c_right(alg, n).module}).module;
}

}  // namespace quiverlab::fixtures
