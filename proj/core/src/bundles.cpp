#include "quiverlab/bundles.hpp"

#include <chrono>
#include <sstream>

#include "quiverlab/criteria.hpp"
#include "quiverlab/error.hpp"
#include "quiverlab/fixtures.hpp"
#include "quiverlab/monomial.hpp"

namespace quiverlab {

const char* to_string(Origin o) {
  switch (o) {
    case Origin::Literature: return "literature";
    case Origin::Oracle: return "oracle";
    case Origin::Definition: return "definition";
  }
  return "?";
}

std::string short_pdim(const PdimVerdict& v) {
  switch (v.kind) {
    case PdimKind::Finite: return "Finite(" + std::to_string(v.value) + ")";
    case PdimKind::Infinite: return "Infinite";
    case PdimKind::Unknown: return "Unknown";
  }
  return "?";
}

std::vector<RowResult> FixtureBundle::run() const {
  std::vector<RowResult> out;
  for (const auto& row : table) {
    RowResult r{row.key, row.expected, "", row.origin, false, 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.actual = row.compute();
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = r.actual == r.expected;
    out.push_back(std::move(r));
  }
  return out;
}

const Representation& FixtureBundle::module(std::string_view name) const {
  for (const auto& [n, m] : modules)
    if (n == name) return m;
  throw Error(ErrorKind::InvalidArgument, "fixture " + id + " has no module " + std::string(name));
}

namespace {

template <class F>
std::string joined(std::size_t from, std::size_t to, F&& f) {
  std::string out;
  for (std::size_t n = from; n <= to; ++n) out += (n == from ? "" : ",") + f(n);
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string statuses(const CriterionReport& r, const std::vector<std::string>& conds) {
  std::string out = to_string(r.overall);
  for (const auto& c : conds) out += "; " + c + " " + to_string(r.status(c));
  return out;
}

FamilyGenerator member_gen(std::function<Representation(std::size_t)> make, std::string prefix) {
  return [make = std::move(make), prefix = std::move(prefix)](std::size_t n) {
    Representation m = make(n);
    return FamilyMember{prefix + std::to_string(n), m, pdim(m)};
  };
}

std::string scan_dims(const FamilyGenerator& gen, const Representation& x, std::size_t n, const ScanOptions& opts = {}) {
  ScanResult s = approximation_growth_scan(gen, x, n, opts);
  std::string out;
  for (const auto& r : s.rows) {
    if (!r.minimized || !r.witnesses_verified) return "unverified stage " + std::to_string(r.n);
    out += (out.empty() ? "" : ",") + std::to_string(r.source_dim);
  }
  return out;
}

std::string tower_u_dims(const PhantomTower& t) {
  if (!t.coherent()) return "incoherent";
  std::string out;
  for (const auto& u : t.u) {
    if (u.stable && !*u.stable) return "unstable U_" + std::to_string(u.stage);
    out += (out.empty() ? "" : ",") + std::to_string(u.dim);
  }
  return out;
}

std::size_t vtx(const Algebra& a, const char* name) { return a.quiver().vertex_index(name); }

FixtureBundle ex2(Field f) {
  FixtureBundle b{"ex2", "1 ⇉ 2 → 1 with αγ = βγ = γβ = 0", fixtures::ex2_algebra(f), {}, {}};
  AlgebraPtr L = b.algebra;
  const Algebra& a = *L;
  auto beta = a.path("beta");
  auto alpha = a.path("alpha");
  auto M = [L](std::size_t n) { return fixtures::string_module(L, n); };
  for (std::size_t n = 1; n <= 4; ++n) {
    b.modules.emplace_back("M" + std::to_string(n), M(n).module);
    b.modules.emplace_back("N" + std::to_string(n), build_Nn(L, beta, alpha, n).module);
  }
  Representation s1 = simple_module(L, 0);
  b.modules.emplace_back("S1", s1);
  b.modules.emplace_back("S2", simple_module(L, 1));

  auto& t = b.table;
  t.push_back({"dim Λ", "6", Origin::Literature, [L] { return std::to_string(L->dim()); }});
  t.push_back({"dim e1Λe1, e2Λe1, e1Λe2, e2Λe2", "2,2,1,1", Origin::Oracle, [L] {
                 auto c = [&](std::size_t s, std::size_t tg) { return std::to_string(L->basis_between(s, tg).size()); };
                 return c(0, 0) + "," + c(0, 1) + "," + c(1, 0) + "," + c(1, 1);
               }});
  t.push_back({"pdim S2", "Infinite", Origin::Literature, [L] { return short_pdim(pdim(simple_module(L, 1))); }});
  t.push_back({"pdim S1", "Infinite", Origin::Oracle, [L] { return short_pdim(pdim(simple_module(L, 0))); }});
  t.push_back({"pdim Λα", "Finite(0)", Origin::Literature,
               [L] { return short_pdim(path_pdim(L, L->quiver().parse_path("alpha"))); }});
  t.push_back({"dims N2 (p=β, q=α)", "(3,3)", Origin::Oracle,
               [L, beta, alpha] { return describe(build_Nn(L, beta, alpha, 2).module); }});
  t.push_back({"composition length M1..M4", "2,4,6,8", Origin::Literature,
               [M] { return joined(1, 4, [&](std::size_t n) { return std::to_string(M(n).module.total_dim()); }); }});
  t.push_back({"M_n ≅ N_n/Λα b1, n=1..4", "Yes,Yes,Yes,Yes", Origin::Literature, [L, M, beta, alpha] {
                 return joined(1, 4, [&](std::size_t n) {
                   PresentedModule nn = build_Nn(L, beta, alpha, n);
                   Vec g = nn.module.act(alpha, nn.generator(0));
                   Quotient q = quotient(nn.module, generated_submodule(nn.module, {g}));
                   return std::string(to_string(is_isomorphic(q.module, M(n).module).status));
                 });
               }});
  t.push_back({"pdim M1..M4", "Finite(1),Finite(1),Finite(1),Finite(1)", Origin::Oracle,
               [M] { return joined(1, 4, [&](std::size_t n) { return short_pdim(pdim(M(n).module)); }); }});
  t.push_back({"nn-verify p=β q=α n=3", "passed; pdim N3 Finite(1)", Origin::Oracle, [L, beta, alpha] {
                 NnReport r = verify_Nn_syzygy_split(L, beta, alpha, 3);
                 return std::string(r.passed() ? "passed" : "failed") + "; pdim N3 " + short_pdim(r.pdim_module);
               }});
  t.push_back({"minimal {M1..Mn}-approximation of S1, source dims n=1..5", "2,4,6,8,10", Origin::Oracle,
               [M, s1] { return scan_dims(member_gen([M](std::size_t n) { return M(n).module; }, "M"), s1, 5); }});
  t.push_back({"tower over (M_n): U-dims", "2,4,6,8", Origin::Oracle, [M, s1] {
                 return tower_u_dims(phantom_tower(s1, member_gen([M](std::size_t n) { return M(n).module; }, "M")));
               }});
  t.push_back({"criterion1 p=β q=α", "NoApproximation", Origin::Literature, [L] {
                 return std::string(to_string(
                     criterion1_check(L, L->quiver().parse_path("beta"), L->quiver().parse_path("alpha")).overall));
               }});
  t.push_back({"criterion10 m=1 p=β q=α", "NoApproximation", Origin::Oracle, [L, beta, alpha] {
                 return std::string(to_string(criterion10_check(L, ZipperSpec{{0}, {beta}, {alpha}}).overall));
               }});
  t.push_back({"remark11 seed at 1 with β", "certified", Origin::Oracle, [L] {
                 SeedReport s = remark11_seed(L, 0, {L->quiver().arrow_index("beta")});
                 return std::string(s.summand_split ? "certified" : "not split");
               }});
  t.push_back({"M2 subfactor of N3", "Yes", Origin::Oracle, [L, M, beta, alpha] {
                 return std::string(to_string(subfactor_check(M(2).module, build_Nn(L, beta, alpha, 3).module).status));
               }});
  return b;
}

FixtureBundle ex3(Field f) {
  FixtureBundle b{"ex3", "Δ: ex2 plus 3 → 1 (δ) with βδ = 0", fixtures::delta_algebra(f), {}, {}};
  AlgebraPtr D = b.algebra;
  Representation a1 = fixtures::hook_module(D).module;
  Representation s1 = simple_module(D, 0);
  b.modules.emplace_back("A1", a1);
  b.modules.emplace_back("S1", s1);
  auto M = [D](std::size_t n) { return fixtures::string_module(D, n).module; };
  for (std::size_t n = 1; n <= 4; ++n) b.modules.emplace_back("M" + std::to_string(n), M(n));

  auto& t = b.table;
  t.push_back({"dim Δ", "10", Origin::Oracle, [D] { return std::to_string(D->dim()); }});
  t.push_back({"dims A1", "(2,1,1)", Origin::Literature, [a1] { return describe(a1); }});
  t.push_back({"pdim A1", "Finite(1)", Origin::Oracle, [a1] { return short_pdim(pdim(a1)); }});
  t.push_back({"φ1: A1 → S1 approximates M1..M5 and is right minimal", "yes", Origin::Literature, [M, a1, s1] {
                 auto hs = hom_space(a1, s1);
                 if (hs.size() != 1) return std::string("Hom(A1,S1) has dim ") + std::to_string(hs.size());
                 FiniteCategory c;
                 c.closure = kFinitePdim;
                 for (std::size_t n = 1; n <= 5; ++n) c.add("M" + std::to_string(n), M(n), pdim(M(n)));
                 return yes_no(is_approximation(hs[0], c).ok && is_right_minimal(hs[0]));
               }});
  t.push_back({"Λe2 → S2 and Λe3 → S3 are right minimal", "yes", Origin::Literature, [D] {
                 bool ok = true;
                 for (std::size_t v : {vtx(*D, "2"), vtx(*D, "3")}) {
                   auto hs = hom_space(projective_module(D, v), simple_module(D, v));
                   ok = ok && hs.size() == 1 && is_right_minimal(hs[0]);
                 }
                 return yes_no(ok);
               }});
  t.push_back({"approximation scan of S1 with A1 ambient, n=1..6", "4,4,4,4,4,4", Origin::Oracle, [M, a1, s1] {
                 ScanOptions o;
                 o.ambient.push_back({"A1", a1, pdim(a1)});
                 return scan_dims(member_gen(M, "M"), s1, 6, o);
               }});
  t.push_back({"tower over (M_n) with A1 ambient: U-dims", "4,4,4,4", Origin::Oracle, [M, a1, s1] {
                 TowerOptions o;
                 o.ambient.push_back({"A1", a1, pdim(a1)});
                 return tower_u_dims(phantom_tower(s1, member_gen(M, "M"), o));
               }});
  t.push_back({"criterion1 p=β q=α, A1 supplied", "Inconclusive; (i) Certified; (iii) Certified; (ii) Refuted",
               Origin::Literature, [D, a1] {
                 Criterion1Options o;
                 o.counterexamples.push_back(a1);
                 auto r = criterion1_check(D, D->quiver().parse_path("beta"), D->quiver().parse_path("alpha"), o);
                 return statuses(r, {"(i)", "(iii)", "(ii)"});
               }});
  t.push_back({"S3 subfactor of M3", "No", Origin::Definition,
               [D, M] { return std::string(to_string(subfactor_check(simple_module(D, 2), M(3)).status)); }});
  return b;
}

FixtureBundle ex4(Field f) {
  FixtureBundle b{"ex4", "Ξ: Δ without βδ = 0", fixtures::xi_algebra(f), {}, {}};
  AlgebraPtr X = b.algebra;
  Representation m = fixtures::hook_module(X).module;
  b.modules.emplace_back("M", m);
  for (std::size_t n = 1; n <= 4; ++n)
    b.modules.emplace_back("E" + std::to_string(n), fixtures::e_module(X, n).module);
  auto beta = X->path("beta");
  auto alpha = X->path("alpha");

  auto& t = b.table;
  t.push_back({"dim Ξ", "11", Origin::Literature, [X] { return std::to_string(X->dim()); }});
  t.push_back({"dims M", "(2,2,1)", Origin::Literature, [m] { return describe(m); }});
  t.push_back({"pdim Ξ(β,α)", "Finite(0)", Origin::Literature,
               [X, beta, alpha] { return short_pdim(pdim(pair_module(X, beta, alpha).module)); }});
  t.push_back({"pdim M", "Finite(1)", Origin::Literature, [m] { return short_pdim(pdim(m)); }});
  t.push_back({"Ω1(M) ≅ Ξe2 ⊕ Ξe2", "Yes", Origin::Literature, [X, m] {
                 Representation p2 = projective_module(X, 1);
                 return std::string(to_string(is_isomorphic(syzygy(m), direct_sum(X, {p2, p2}).module).status));
               }});
  t.push_back({"condition (ii) falsified by M", "violation", Origin::Literature, [X, m, beta, alpha] {
                 auto v = condition2_falsify(X, beta, alpha, m);
                 return std::string(!v ? "none" : v->verify() ? "violation" : "unverified violation");
               }});
  t.push_back({"criterion1 p=β q=α, M supplied", "Inconclusive; (i) Certified; (ii) Refuted; (ii') Unverified",
               Origin::Literature, [X, m] {
                 Criterion1Options o;
                 o.counterexamples.push_back(m);
                 auto r = criterion1_check(X, X->quiver().parse_path("beta"), X->quiver().parse_path("alpha"), o);
                 return statuses(r, {"(i)", "(ii)", "(ii')"});
               }});
  t.push_back({"nn-verify p=β q=α n=1..4", "passed,passed,passed,passed", Origin::Oracle, [X, beta, alpha] {
                 return joined(1, 4, [&](std::size_t n) {
                   return std::string(verify_Nn_syzygy_split(X, beta, alpha, n).passed() ? "passed" : "failed");
                 });
               }});
  t.push_back({"dims E1..E4", "(1,1,0),(2,2,1),(3,3,2),(4,4,3)", Origin::Oracle, [X] {
                 return joined(1, 4, [&](std::size_t n) { return describe(fixtures::e_module(X, n).module); });
               }});
  t.push_back({"pdim E1..E4", "Finite(1),Finite(1),Finite(1),Finite(1)", Origin::Oracle, [X] {
                 return joined(1, 4, [&](std::size_t n) { return short_pdim(pdim(fixtures::e_module(X, n).module)); });
               }});
  return b;
}

// Finite-pdim modules of the form Λe_v/Λp, with the projectives and simples.
FiniteCategory ex12_family(const AlgebraPtr& L, const Representation& a1) {
  FiniteCategory c;
  c.name = "ex12 family";
  c.closure = kFinitePdim;
  const Algebra& a = *L;
  const Quiver& q = a.quiver();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Representation s = simple_module(L, v);
    if (PdimVerdict pv = pdim(s); pv.is_finite()) c.add("S" + q.vertex_name(v), s, pv);
    Representation p = projective_module(L, v);
    c.add("P" + q.vertex_name(v), p, PdimVerdict::finite(0));
  }
  for (const auto& path : a.basis()) {
    if (path.is_trivial() || path.length() < 2) continue;
    Representation pv = projective_module(L, path.source);
    Quotient qt = quotient(pv, generated_submodule(pv, {projective_vector(a, path.source, a.path(path))}));
    if (PdimVerdict v = pdim(qt.module); v.is_finite()) c.add("P" + q.vertex_name(path.source) + "/" + q.path_string(path), qt.module, v);
  }
  c.add("A1", a1, pdim(a1));
  return c;
}

FixtureBundle ex12(Field f) {
  FixtureBundle b{"ex12", "loop α at 1, then 1 → 2 → 3 → 4; α² = δγβ = 0", fixtures::ex12_algebra(f), {}, {}};
  AlgebraPtr L = b.algebra;
  Representation a1 = fixtures::ex12_a1(L).module;
  Representation s1 = simple_module(L, 0);
  b.modules.emplace_back("A1", a1);
  b.modules.emplace_back("S1", s1);

  auto& t = b.table;
  t.push_back({"dim Λ", "12", Origin::Oracle, [L] { return std::to_string(L->dim()); }});
  t.push_back({"pdim S1..S4", "Infinite,Finite(1),Finite(1),Finite(0)", Origin::Oracle,
               [L] { return joined(0, 3, [&](std::size_t v) { return short_pdim(pdim(simple_module(L, v))); }); }});
  t.push_back({"remark11 seed at 1 with α", "certified", Origin::Literature, [L] {
                 SeedReport s = remark11_seed(L, 0, {L->quiver().arrow_index("alpha")});
                 return std::string(s.summand_split ? "certified" : "not split");
               }});
  t.push_back({"dims A1", "(2,0,0,0)", Origin::Literature, [a1] { return describe(a1); }});
  t.push_back({"pdim A1", "Finite(2)", Origin::Oracle, [a1] { return short_pdim(pdim(a1)); }});
  t.push_back({"A1 → S1 is right minimal", "yes", Origin::Literature, [a1, s1] {
                 auto hs = hom_space(a1, s1);
                 return yes_no(hs.size() == 1 && is_right_minimal(hs[0]));
               }});
  t.push_back({"A1 → S1 approximates the fixture family", "yes", Origin::Literature, [L, a1, s1] {
                 auto hs = hom_space(a1, s1);
                 return yes_no(hs.size() == 1 && is_approximation(hs[0], ex12_family(L, a1)).ok);
               }});
  return b;
}

FixtureBundle ex13(Field f) {
  FixtureBundle b{"ex13", "non-monomial: γα = δβ at 1 → 4, ρ/σ wings at 5..8", fixtures::ex13_algebra(f), {}, {}};
  AlgebraPtr L = b.algebra;
  Representation s1 = simple_module(L, 0);
  b.modules.emplace_back("S1", s1);
  for (std::size_t n = 1; n <= 4; ++n) b.modules.emplace_back("C" + std::to_string(n), fixtures::ex13_c(L, n));

  auto& t = b.table;
  t.push_back({"monomial", "no", Origin::Literature, [L] { return yes_no(L->is_monomial()); }});
  t.push_back({"dim Λe1, Λe5, Λe7, Λe3, Λe4", "4,4,6,2,2", Origin::Literature, [L] {
                 std::string out;
                 for (const char* v : {"1", "5", "7", "3", "4"})
                   out += (out.empty() ? "" : ",") + std::to_string(L->basis_from(vtx(*L, v)).size());
                 return out;
               }});
  t.push_back({"pdim C1", "Finite(1)", Origin::Oracle, [L] { return short_pdim(pdim(fixtures::ex13_c(L, 1))); }});
  t.push_back({"dim C1..C4", "4,8,12,16", Origin::Oracle, [L] {
                 return joined(1, 4, [&](std::size_t n) { return std::to_string(fixtures::ex13_c(L, n).total_dim()); });
               }});
  t.push_back({"pdim C1..C4", "Finite(1),Finite(1),Finite(1),Finite(1)", Origin::Oracle, [L] {
                 return joined(1, 4, [&](std::size_t n) { return short_pdim(pdim(fixtures::ex13_c(L, n))); });
               }});
  t.push_back({"tower over (C_n): U-dims", "4,8,12,16", Origin::Oracle, [L, s1] {
                 return tower_u_dims(
                     phantom_tower(s1, member_gen([L](std::size_t n) { return fixtures::ex13_c(L, n); }, "C")));
               }});
  return b;
}

}  // namespace

std::vector<std::string> fixture_ids() { return {"ex2", "ex3", "ex4", "ex12", "ex13"}; }

FixtureBundle load_fixture(std::string_view id, Field field) {
  if (id == "ex2") return ex2(field);
  if (id == "ex3") return ex3(field);
  if (id == "ex4") return ex4(field);
  if (id == "ex12") return ex12(field);
  if (id == "ex13") return ex13(field);
  throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + std::string(id) + "' (have ex2, ex3, ex4, ex12, ex13)");
}

}  // namespace quiverlab
