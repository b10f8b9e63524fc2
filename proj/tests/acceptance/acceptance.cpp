// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <quiverlab/bundles.hpp>
#include <quiverlab/criteria.hpp>
#include <quiverlab/fixtures.hpp>
#include <quiverlab/monomial.hpp>

#include "properties.hpp"

using namespace quiverlab;

namespace {

struct Checks {
  std::vector<std::string> failed;
  std::size_t total = 0;

  void expect(bool ok, const std::string& what) {
    ++total;
    if (!ok) failed.push_back(what);
  }
};

Representation strings(const AlgebraPtr& a, std::size_t n) { return fixtures::string_module(a, n).module; }

FamilyGenerator string_gen(const AlgebraPtr& a) {
  return [a](std::size_t n) {
    Representation m = strings(a, n);
    return FamilyMember{"M" + std::to_string(n), m, pdim(m)};
  };
}

FiniteCategory string_family(const AlgebraPtr& a, std::size_t n) {
  FiniteCategory c;
  c.closure = kFinitePdim;
  for (std::size_t i = 1; i <= n; ++i) c.add("M" + std::to_string(i), strings(a, i), pdim(strings(a, i)));
  return c;
}

bool strictly_increasing(const std::vector<std::size_t>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) return false;
  return !v.empty();
}

// Rows of a fixture table whose key contains `needle` must all pass.
void fixture_rows(Checks& c, const std::string& id, const std::string& needle) {
  FixtureBundle b = load_fixture(id, Field::rationals());
  bool any = false;
  for (const auto& r : b.run()) {
    if (r.key.find(needle) == std::string::npos) continue;
    any = true;
    c.expect(r.passed, id + " row '" + r.key + "': " + r.actual + " (expected " + r.expected + ")");
  }
  c.expect(any, id + " has a row matching '" + needle + "'");
}

void criterion1(Checks& c) {
  AlgebraPtr a = fixtures::ex2_algebra(Field::rationals());
  const Quiver& q = a->quiver();
  c.expect(a->dim() == 6, "dim Λ = 6");
  c.expect(path_pdim(a, q.parse_path("alpha")).to_string() == "Finite(0)", "pdim Λα = Finite(0)");
  Representation s2 = simple_module(a, 1);
  PdimVerdict v = pdim(s2);
  c.expect(v.is_infinite(), "pdim S2 infinite");
  c.expect(v.cycle && v.cycle->chain.size() - 1 - v.cycle->cycle_start == 2, "syzygy cycle of period 2");
  c.expect(v.cycle && verify_cycle_witness(a, *v.cycle), "cycle witness re-verifies");
  c.expect(verify_pdim(s2, v), "pdim certificate re-verifies");
  CriterionReport r = criterion1_check(a, q.parse_path("beta"), q.parse_path("alpha"));
  c.expect(r.overall == OverallVerdict::NoApproximation, "criterion1(β, α) = NoApproximation");
  for (const char* cond : {"intersection", "(i)", "(ii)", "(iii)"})
    c.expect(r.status(cond) == ConditionStatus::Certified, std::string("condition ") + cond + " Certified");
  c.expect(r.replay(), "criterion report replays");
}

void criterion2(Checks& c) {
  AlgebraPtr a = fixtures::ex2_algebra(Field::rationals());
  Representation s1 = simple_module(a, 0);
  ScanResult scan = approximation_growth_scan(string_gen(a), s1, 5);
  for (std::size_t n = 1; n <= 5; ++n) {
    ApproxCertificate oracle = right_minimize(naive_approximation(string_family(a, n), s1));
    std::size_t got = scan.rows.at(n - 1).source_dim;
    c.expect(oracle.verify() && is_right_minimal(oracle.map), "oracle n=" + std::to_string(n) + " minimal");
    c.expect(oracle.source().total_dim() == 2 * n, "oracle dim 2n at n=" + std::to_string(n));
    c.expect(got == 2 * n, "scan dim " + std::to_string(got) + " = 2n at n=" + std::to_string(n));
    c.expect(scan.rows[n - 1].minimized && scan.rows[n - 1].witnesses_verified, "scan stage verified");
  }
  PhantomTower t = phantom_tower(s1, string_gen(a));
  TowerReport r = tower_report(t);
  c.expect(t.coherent(), "tower coherent");
  c.expect(r.u_dims.size() >= 4 && strictly_increasing(r.u_dims), "U-dims strictly increase over 4 stages");
  for (const auto& u : t.u) c.expect(!u.stable || *u.stable, "U_" + std::to_string(u.stage) + " stable");
}

void criterion3(Checks& c) {
  AlgebraPtr d = fixtures::delta_algebra(Field::rationals());
  Representation a1 = fixtures::hook_module(d).module;
  Representation s1 = simple_module(d, 0);
  c.expect(a1.total_dim() == 4, "dim A1 = 4");
  Representation two = direct_sum(d, {projective_module(d, 1), projective_module(d, 1)}).module;
  IsoVerdict iso = is_isomorphic(syzygy(a1), two);
  c.expect(iso.status == IsoStatus::Yes && iso.witness && iso.witness->is_isomorphism(), "Ω1(A1) ≅ Δe2 ⊕ Δe2");
  c.expect(pdim(a1).to_string() == "Finite(1)", "pdim A1 = Finite(1)");
  auto phi = hom_space(a1, s1);
  c.expect(phi.size() == 1 && is_approximation(phi[0], string_family(d, 5)).ok, "φ1 approximates M1..M5");
  ScanOptions o;
  o.ambient.push_back({"A1", a1, pdim(a1)});
  ScanResult scan = approximation_growth_scan(string_gen(d), s1, 6, o);
  bool bounded = true;
  for (const auto& row : scan.rows) bounded = bounded && row.source_dim <= 4 && row.witnesses_verified;
  c.expect(bounded, "growth scan bounded by 4");
  c.expect(scan.rows.size() >= 2 && scan.rows.back().source_dim == scan.rows[scan.rows.size() - 2].source_dim,
           "growth scan stabilizes");
  Criterion1Options co;
  co.counterexamples.push_back(a1);
  CriterionReport r = criterion1_check(d, d->quiver().parse_path("beta"), d->quiver().parse_path("alpha"), co);
  c.expect(r.overall == OverallVerdict::Inconclusive, "criterion1(β, α) Inconclusive");
  const ConditionEntry* e = r.find("(ii)");
  c.expect(e && e->status == ConditionStatus::Refuted && e->violation && e->violation->verify(),
           "(ii) Refuted by A1 with a verified violation");
  c.expect(r.status("(i)") == ConditionStatus::Certified && r.status("(iii)") == ConditionStatus::Certified,
           "(i) and (iii) still Certified");
}

void criterion4(Checks& c) {
  AlgebraPtr x = fixtures::xi_algebra(Field::rationals());
  PresentedModule pm = fixtures::hook_module(x);
  const Representation& m = pm.module;
  c.expect(m.total_dim() == 5, "dim M = 5");
  Representation two = direct_sum(x, {projective_module(x, 1), projective_module(x, 1)}).module;
  c.expect(is_isomorphic(syzygy(m), two).status == IsoStatus::Yes, "Ω1(M) ≅ Ξe2 ⊕ Ξe2");
  c.expect(pdim(m).to_string() == "Finite(1)", "pdim M = Finite(1)");
  auto v = condition2_falsify(x, x->path("beta"), x->path("alpha"), m);
  c.expect(v && v->verify(), "condition2_falsify finds a verified violation");
  if (v) {
    // β x_1 = α δ x_3 with x the first generator.
    Vec x1 = pm.generator(0);
    Vec rhs = m.act(x->path("alpha*delta"), pm.generator(1));
    c.expect(m.act(x->path("beta"), x1) == rhs && !is_zero(rhs), "β x1 = αδ x3 ≠ 0 in M");
  }
  c.expect(pdim(pair_module(x, x->path("beta"), x->path("alpha")).module).to_string() == "Finite(0)",
           "pdim Ξ(β, α) = Finite(0)");
  for (std::size_t n = 1; n <= 4; ++n)
    c.expect(verify_Nn_syzygy_split(x, x->path("beta"), x->path("alpha"), n).passed(),
             "nn-verify n=" + std::to_string(n));
}

void criterion5(Checks& c) {
  AlgebraPtr l = fixtures::ex12_algebra(Field::rationals());
  c.expect(pdim(simple_module(l, 0)).is_infinite(), "pdim S1 Infinite");
  for (std::size_t v = 1; v < 4; ++v)
    c.expect(pdim(simple_module(l, v)).is_finite(), "pdim S" + std::to_string(v + 1) + " finite");
  SeedReport s = remark11_seed(l, 0, {l->quiver().arrow_index("alpha")});
  c.expect(s.summand_split && s.arrow_pdims.at(0).is_infinite(), "remark11 seed at 1 with α certified");
  Representation a1 = fixtures::ex12_a1(l).module;
  auto hs = hom_space(a1, simple_module(l, 0));
  c.expect(hs.size() == 1 && is_right_minimal(hs[0]), "A1 → S1 right minimal");
  fixture_rows(c, "ex12", "approximates the fixture family");
}

void criterion6(Checks& c) {
  AlgebraPtr l = fixtures::ex13_algebra(Field::rationals());
  const Quiver& q = l->quiver();
  std::vector<std::pair<const char*, std::size_t>> proj{{"1", 4}, {"5", 4}, {"7", 6}, {"3", 2}, {"4", 2}};
  for (const auto& [v, d] : proj)
    c.expect(projective_module(l, q.vertex_index(v)).total_dim() == d,
             std::string("dim Λe") + v + " = " + std::to_string(d));
  c.expect(pdim(fixtures::ex13_c(l, 1)).to_string() == "Finite(1)", "pdim C1 = Finite(1)");
  for (std::size_t n = 1; n <= 4; ++n)
    c.expect(pdim(fixtures::ex13_c(l, n)).is_finite(), "pdim C" + std::to_string(n) + " finite");
  FamilyGenerator gen = [l](std::size_t n) {
    Representation m = fixtures::ex13_c(l, n);
    return FamilyMember{"C" + std::to_string(n), m, pdim(m)};
  };
  PhantomTower t = phantom_tower(simple_module(l, 0), gen);
  TowerReport r = tower_report(t);
  c.expect(t.coherent(), "tower coherent");
  c.expect(strictly_increasing(r.u_dims) && r.u_dims.size() >= 4, "tower U-dims strictly increase");
  std::vector<std::size_t> stage_dims;
  for (const auto& s : t.stages) stage_dims.push_back(s.approx.source().total_dim());
  bool growing = true;
  for (std::size_t i = 2; i < stage_dims.size(); i += 2) growing = growing && stage_dims[i] > stage_dims[i - 2];
  c.expect(growing, "odd stage dimensions strictly increase");
}

void criterion7(Checks& c, std::uint64_t seed) {
  for (const auto& s : qtest::all_suites(seed, 200)) {
    bool exhaustive = s.name.find("path_pdim") != std::string::npos;
    c.expect(exhaustive || s.cases >= 200, s.name + ": " + std::to_string(s.cases) + " cases");
    for (const auto& f : s.failures) c.expect(false, s.name + ": " + f);
    c.expect(true, s.name);
  }
}

}  // namespace

int main() {
  const std::uint64_t seed = default_seed();
  std::cout << "seed " << seed << "\n";
  std::vector<std::pair<std::string, std::function<void(Checks&)>>> criteria{
      {"ex2 fixture", criterion1},
      {"ex2 growth", criterion2},
      {"ex3 fixture", criterion3},
      {"ex4 fixture", criterion4},
      {"ex12 fixture", criterion5},
      {"ex13 fixture", criterion6},
      {"property suites", [seed](Checks& c) { criterion7(c, seed); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checks c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failed.push_back(std::string("threw: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = c.failed.empty();
    failures += !ok;
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (ok ? "PASS" : "FAIL") << " ("
              << c.total << " checks, " << secs << " s)\n";
    for (const auto& f : c.failed) std::cout << "    failed: " << f << "\n";
  }
  return failures == 0 ? 0 : 1;
}
