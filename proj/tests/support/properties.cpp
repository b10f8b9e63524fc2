#include "properties.hpp"

#include <quiverlab/error.hpp>
#include <quiverlab/fixtures.hpp>
#include <quiverlab/monomial.hpp>

namespace qtest {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

std::string where(const Algebra& a, const Representation& m, std::size_t k) {
  return "case " + std::to_string(k) + " over " + std::to_string(a.quiver().vertex_count()) + " vertices, module " +
         describe(m);
}

ModuleMap random_map(const Representation& m, const Representation& n, std::mt19937_64& rng) {
  auto basis = hom_space(m, n);
  if (basis.empty()) return ModuleMap::zero(m, n);
  Vec c;
  for (std::size_t i = 0; i < basis.size(); ++i) c.push_back(m.algebra().field().random(rng));
  return combine(basis, c, m, n);
}

// Guards a check: an exception is a failure with the case attached.
template <class F>
void guarded(SuiteResult& r, const std::string& ctx, F&& f) {
  try {
    if (auto msg = f(); !msg.empty()) r.failures.push_back(ctx + ": " + msg);
  } catch (const std::exception& e) {
    r.failures.push_back(ctx + ": threw " + e.what());
  }
}

bool dims_at_most(const Representation& m, std::size_t cap) {
  for (auto d : m.dims())
    if (d > cap) return false;
  return true;
}

std::size_t block_entries(const Representation& m, const Representation& n) {
  std::size_t out = 0;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) out += m.dim(v) * n.dim(v);
  return out;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

AlgebraElement random_element(const Algebra& a, std::size_t vertex, std::mt19937_64& rng, bool radical_only) {
  Vec v = zero_vec(a.dim());
  for (std::size_t i : a.basis_from(vertex)) {
    if (radical_only && a.basis_path(i).is_trivial()) continue;
    if (rng() % 2) v[i] = a.field().random(rng);
  }
  return a.from_vec(v);
}

PresentedModule random_presented(const AlgebraPtr& alg, std::mt19937_64& rng, std::size_t max_gens,
                                 std::size_t max_rels) {
  const Algebra& a = *alg;
  std::size_t k = 1 + pick(rng, max_gens);
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(pick(rng, a.quiver().vertex_count()));
  std::size_t r = pick(rng, max_rels + 1);
  std::vector<FreeElement> rels;
  for (std::size_t j = 0; j < r; ++j) {
    FreeElement x;
    for (std::size_t g : gens) x.push_back(random_element(a, g, rng, true));
    rels.push_back(x);
  }
  return presented_module(alg, gens, rels);
}

std::vector<AlgebraPtr> suite_algebras(Field f) {
  return {fixtures::ex2_algebra(f), fixtures::delta_algebra(f), fixtures::xi_algebra(f), fixtures::ex12_algebra(f),
          fixtures::ex13_algebra(f)};
}

std::size_t brute_force_hom_count(const Representation& m, const Representation& n) {
  const std::uint32_t p = m.algebra().field().characteristic;
  if (p == 0) throw Error(ErrorKind::InvalidArgument, "brute force needs a finite field");
  std::size_t len = block_entries(m, n);
  std::vector<std::uint32_t> digits(len, 0);
  std::size_t count = 0;
  for (;;) {
    Vec v;
    for (auto d : digits) v.push_back(Scalar::residue(d, p));
    if (ModuleMap::unflatten(m, n, v).is_homomorphism()) ++count;
    std::size_t i = 0;
    while (i < len && ++digits[i] == p) digits[i++] = 0;
    if (i == len) break;
  }
  return count;
}

SuiteResult constructors_valid(std::uint64_t seed, std::size_t cases) {
  SuiteResult r{"representation validity after every constructor", 0, {}};
  std::mt19937_64 rng(seed);
  auto algs = suite_algebras(Field::rationals());
  for (std::size_t k = 0; k < cases; ++k) {
    AlgebraPtr alg = algs[k % algs.size()];
    PresentedModule pm = random_presented(alg, rng);
    const Representation& m = pm.module;
    Representation n = random_presented(alg, rng).module;
    ++r.cases;
    guarded(r, where(*alg, m, k), [&]() -> std::string {
      std::vector<std::pair<const char*, Representation>> built;
      built.emplace_back("presented", m);
      built.emplace_back("free", pm.free);
      built.emplace_back("syzygy", syzygy(m));
      built.emplace_back("cover", projective_cover(m).projective);
      built.emplace_back("radical", radical(m).module);
      built.emplace_back("socle", socle(m).module);
      ModuleMap f = random_map(m, n, rng);
      built.emplace_back("kernel", kernel(f).module);
      ImageResult im = image(f);
      built.emplace_back("image", im.module);
      built.emplace_back("cokernel", quotient(n, im.sub).module);
      built.emplace_back("sum", direct_sum(alg, {m, n}).module);
      for (const auto& [what, x] : built) {
        try {
          x.validate();
        } catch (const Error& e) {
          return std::string(what) + " invalid: " + e.what();
        }
      }
      if (!f.is_homomorphism() || !im.inclusion.is_injective() || !im.corestriction.is_surjective())
        return "image factorization broken";
      return "";
    });
  }
  return r;
}

SuiteResult hom_vs_brute_force(std::uint64_t seed, std::size_t cases) {
  SuiteResult r{"Hom solver vs brute-force intertwiners over F_2 and F_3", 0, {}};
  std::mt19937_64 rng(seed);
  auto f2 = suite_algebras(Field::prime(2));
  auto f3 = suite_algebras(Field::prime(3));
  for (std::size_t k = 0; r.cases < cases; ++k) {
    bool two = k % 2 == 0;
    const auto& algs = two ? f2 : f3;
    AlgebraPtr alg = algs[pick(rng, algs.size())];
    Representation m = random_presented(alg, rng, 2, 3).module;
    Representation n = random_presented(alg, rng, 2, 3).module;
    if (rng() % 4 == 0) n = simple_module(alg, pick(rng, alg->quiver().vertex_count()));
    if (!dims_at_most(m, 3) || !dims_at_most(n, 3) || block_entries(m, n) > (two ? 12u : 8u) ||
        block_entries(m, n) < 2)
      continue;
    ++r.cases;
    guarded(r, where(*alg, m, k) + " -> " + describe(n), [&]() -> std::string {
      auto basis = hom_space(m, n);
      for (const auto& f : basis)
        if (!f.is_homomorphism()) return "basis element is not a homomorphism";
      if (hom_space_direct(m, n).size() != basis.size()) return "direct solver disagrees";
      std::size_t p = alg->field().characteristic;
      std::size_t brute = brute_force_hom_count(m, n);
      if (brute != ipow(p, basis.size()))
        return "brute force counts " + std::to_string(brute) + ", solver dim " + std::to_string(basis.size());
      return "";
    });
  }
  return r;
}

SuiteResult syzygy_dimension_law(std::uint64_t seed, std::size_t cases) {
  SuiteResult r{"syzygy dimension law", 0, {}};
  std::mt19937_64 rng(seed);
  auto algs = suite_algebras(Field::rationals());
  for (std::size_t k = 0; k < cases; ++k) {
    AlgebraPtr alg = algs[k % algs.size()];
    Representation m = random_presented(alg, rng).module;
    ++r.cases;
    guarded(r, where(*alg, m, k), [&]() -> std::string {
      Representation cur = m;
      for (int step = 0; step < 2 && !cur.is_zero(); ++step) {
        Representation p = projective_cover(cur).projective;
        Representation om = syzygy(cur);
        for (std::size_t v = 0; v < cur.vertex_count(); ++v)
          if (p.dim(v) != cur.dim(v) + om.dim(v)) return "dim P != dim M + dim Omega at vertex " + std::to_string(v);
        if (syzygy_embedded(cur).module.dims() != om.dims()) return "embedded syzygy differs";
        cur = om;
      }
      return "";
    });
  }
  return r;
}

SuiteResult projective_cover_contract(std::uint64_t seed, std::size_t cases) {
  SuiteResult r{"projective cover contract", 0, {}};
  std::mt19937_64 rng(seed);
  auto algs = suite_algebras(Field::rationals());
  for (std::size_t k = 0; k < cases; ++k) {
    AlgebraPtr alg = algs[k % algs.size()];
    Representation m = random_presented(alg, rng).module;
    ++r.cases;
    guarded(r, where(*alg, m, k), [&]() -> std::string {
      ProjectiveCover pc = projective_cover(m);
      if (!pc.epi.is_homomorphism() || !pc.epi.is_surjective()) return "epi is not a surjective homomorphism";
      if (!is_projective(pc.projective)) return "cover is not projective";
      if (top(pc.projective) != top(m)) return "tops differ";
      std::size_t tops = 0;
      for (auto t : top(m)) tops += t;
      if (pc.top_vertices.size() != tops || pc.top_elements.size() != tops) return "wrong number of summands";
      Embedded ker = kernel(pc.epi);
      Embedded rad = radical(pc.projective);
      for (std::size_t v = 0; v < m.vertex_count(); ++v)
        for (const auto& row : ker.sub.parts[v].basis())
          if (!rad.sub.contains(pc.projective, pc.projective.embed(v, row))) return "kernel not in the radical";
      return "";
    });
  }
  return r;
}

SuiteResult minimize_idempotent(std::uint64_t seed, std::size_t cases) {
  SuiteResult r{"right_minimize idempotence and approximation preservation", 0, {}};
  std::mt19937_64 rng(seed);
  auto algs = suite_algebras(Field::rationals());
  for (std::size_t k = 0; k < cases; ++k) {
    AlgebraPtr alg = algs[k % algs.size()];
    FiniteCategory c;
    std::size_t members = 1 + pick(rng, 3);
    for (std::size_t i = 0; i < members; ++i) c.add("C" + std::to_string(i), random_presented(alg, rng, 2, 2).module);
    Representation x = rng() % 2 ? simple_module(alg, pick(rng, alg->quiver().vertex_count()))
                                 : random_presented(alg, rng, 2, 2).module;
    ++r.cases;
    guarded(r, where(*alg, x, k), [&]() -> std::string {
      MinimizeOptions mo{64, seed + k};
      ApproxCertificate greedy = approximate(c, x);
      if (!greedy.verify()) return "greedy certificate fails";
      ApproxCertificate m1 = right_minimize(greedy, mo);
      if (!m1.verify() || !is_approximation(m1.map, c).ok) return "minimized map lost the approximation property";
      if (!is_right_minimal(m1.map)) return "minimized map is not right minimal";
      if (m1.source().total_dim() > greedy.source().total_dim()) return "minimization grew the source";
      ApproxCertificate m2 = right_minimize(m1, mo);
      if (m2.source().dims() != m1.source().dims()) return "second pass changed the source";
      ApproxCertificate from_naive = right_minimize(naive_approximation(c, x), mo);
      if (from_naive.source().dims() != m1.source().dims()) return "naive and greedy minimal sources differ";
      if (is_isomorphic(from_naive.source(), m1.source(), IsoOptions{32, seed + k}).status != IsoStatus::Yes)
        return "naive and greedy minimal sources not isomorphic";
      return "";
    });
  }
  return r;
}

SuiteResult path_pdim_agreement() {
  SuiteResult r{"monomial path_pdim vs syzygy-iteration pdim", 0, {}};
  for (AlgebraPtr alg : {fixtures::ex2_algebra(Field::rationals()), fixtures::xi_algebra(Field::rationals())}) {
    PdimOptions generic;
    generic.use_monomial = false;
    generic.cutoff = 12;
    for (const auto& p : alg->basis()) {
      ++r.cases;
      guarded(r, "path " + alg->quiver().path_string(p), [&]() -> std::string {
        PdimVerdict exact = path_pdim(alg, p);
        Representation m = path_node_module(alg, p);
        PdimVerdict iter = pdim(m, generic);
        if (exact.kind != iter.kind || (exact.is_finite() && exact.value != iter.value))
          return "path_pdim " + exact.to_string() + ", iteration " + iter.to_string();
        if (!verify_pdim(m, exact)) return "exact certificate does not verify";
        return "";
      });
    }
  }
  return r;
}

std::vector<SuiteResult> all_suites(std::uint64_t seed, std::size_t cases) {
  return {constructors_valid(seed, cases),         hom_vs_brute_force(seed + 1, cases),
          syzygy_dimension_law(seed + 2, cases),   projective_cover_contract(seed + 3, cases),
          minimize_idempotent(seed + 4, cases),    path_pdim_agreement()};
}

}  // namespace qtest
