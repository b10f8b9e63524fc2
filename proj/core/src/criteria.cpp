#include "quiverlab/criteria.hpp"

#include "quiverlab/error.hpp"
#include "quiverlab/monomial.hpp"

namespace quiverlab {

const char* to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Certified: return "Certified";
    case ConditionStatus::Refuted: return "Refuted";
    case ConditionStatus::Unverified: return "Unverified";
  }
  return "?";
}

const char* to_string(OverallVerdict v) {
  return v == OverallVerdict::NoApproximation ? "NoApproximation" : "Inconclusive";
}

bool Violation::verify() const {
  if (!pdim.is_finite() || !verify_pdim(module, pdim)) return false;
  const Submodule& rad = radical(module).sub;
  if (is_zero(x) || rad.contains(module, x)) return false;
  Vec lhs = module.act(p, x);
  if (!q) return is_zero(lhs);
  if (!rad.contains(module, y)) return false;
  return lhs == module.act(*q, y);
}

const ConditionEntry* CriterionReport::find(std::string_view condition) const {
  for (const auto& e : entries)
    if (e.condition == condition) return &e;
  return nullptr;
}

ConditionStatus CriterionReport::status(std::string_view condition) const {
  const ConditionEntry* e = find(condition);
  return e ? e->status : ConditionStatus::Unverified;
}

bool CriterionReport::replay() const {
  for (const auto& e : entries) {
    if (e.module && e.pdim && !verify_pdim(*e.module, *e.pdim)) return false;
    if (e.violation && !e.violation->verify()) return false;
  }
  return true;
}

namespace {

AlgebraElement arrow_element(const Algebra& a, std::size_t arrow) {
  const Arrow& ar = a.quiver().arrow(arrow);
  return a.path(PathWord{{arrow}, ar.source, ar.target});
}

// J x = 0: no arrow survives after x.
bool radical_kills_left(const Algebra& a, const AlgebraElement& x) {
  for (std::size_t ar = 0; ar < a.quiver().arrow_count(); ++ar)
    if (!a.multiply(arrow_element(a, ar), x).is_zero()) return false;
  return true;
}

// x J = 0: nothing survives x applied after an arrow.
bool radical_kills_right(const Algebra& a, const AlgebraElement& x) {
  for (std::size_t ar = 0; ar < a.quiver().arrow_count(); ++ar)
    if (!a.multiply(x, arrow_element(a, ar)).is_zero()) return false;
  return true;
}

ConditionEntry pdim_entry(std::string name, Representation m, PdimVerdict v, bool want_finite, const std::string& what) {
  ConditionEntry e;
  e.condition = std::move(name);
  bool ok = want_finite ? v.is_finite() : v.is_infinite();
  bool opposite = want_finite ? v.is_infinite() : v.is_finite();
  e.status = ok ? ConditionStatus::Certified : opposite ? ConditionStatus::Refuted : ConditionStatus::Unverified;
  e.evidence = "pdim " + what + " = " + v.to_string();
  e.module = std::move(m);
  e.pdim = std::move(v);
  return e;
}

// Λe_v / Λx with the class of e_v, which x kills.
Violation annihilated_top(const AlgebraPtr& alg, std::size_t v, const AlgebraElement& x, const PdimOptions& opts) {
  Representation pv = projective_module(alg, v);
  Submodule s = generated_submodule(pv, {projective_vector(*alg, v, x)});
  Quotient qt = quotient(pv, s);
  Vec top = qt.projection.apply(projective_vector(*alg, v, alg->idempotent(v)));
  return Violation{qt.module, pdim(qt.module, opts), x, top, std::nullopt, {}};
}

// Λp with p a path splitting off Je_v and pdim Λp = ∞: no top element of
// type e_v in a module of finite pdim is killed by p. On failure of the pdim
// part, Λe_v/Λp is returned as a counterexample.
struct TopRoute {
  ConditionStatus status = ConditionStatus::Unverified;
  std::string evidence;
  std::optional<Representation> module;
  std::optional<PdimVerdict> pdim;
  std::optional<Violation> violation;
};

TopRoute top_route(const AlgebraPtr& alg, std::size_t v, const AlgebraElement& p, const PdimOptions& opts) {
  const Algebra& a = *alg;
  TopRoute r;
  if (!a.is_monomial()) {
    r.evidence = "algebra is not monomial";
    return r;
  }
  if (p.terms.size() != 1 || !(p.terms.begin()->second == Scalar(1))) {
    r.evidence = "element is not a single path";
    return r;
  }
  const PathWord& path = a.basis_path(p.terms.begin()->first);
  if (path.source != v || path.is_trivial()) {
    r.evidence = "path does not leave the vertex";
    return r;
  }
  const std::string name = a.quiver().path_string(path);
  if (!summand_of_radical(alg, path, v)) {
    r.evidence = "Λ" + name + " does not split off Je_" + a.quiver().vertex_name(v);
    return r;
  }
  PdimVerdict pv = path_pdim(alg, path);
  r.module = path_node_module(alg, path);
  r.pdim = pv;
  if (pv.is_infinite()) {
    r.status = ConditionStatus::Certified;
    r.evidence = "Λ" + name + " splits off Je_" + a.quiver().vertex_name(v) + " and pdim Λ" + name + " = " + pv.to_string();
  } else {
    r.status = ConditionStatus::Refuted;
    r.evidence = "pdim Λ" + name + " = " + pv.to_string() + "; Λe_" + a.quiver().vertex_name(v) + "/Λ" + name +
                 " has a top element killed by " + name;
    r.violation = annihilated_top(alg, v, p, opts);
  }
  return r;
}

ConditionEntry entry_from(std::string name, const TopRoute& t) {
  ConditionEntry e;
  e.condition = std::move(name);
  e.status = t.status;
  e.evidence = t.evidence;
  e.module = t.module;
  e.pdim = t.pdim;
  e.violation = t.violation;
  return e;
}

}  // namespace

std::optional<Violation> condition2_falsify(const AlgebraPtr& alg, const AlgebraElement& p, const AlgebraElement& q,
                                            const Representation& c, std::optional<PdimVerdict> verdict,
                                            const PdimOptions& opts) {
  if (c.algebra_ptr() != alg) throw Error(ErrorKind::AlgebraMismatch, "module over a different algebra");
  const Algebra& a = *alg;
  auto ep = a.endpoints(p);
  auto eq = a.endpoints(q);
  if (!ep || !eq || *ep != *eq)
    throw Error(ErrorKind::EndpointMismatch, "p and q must be nonzero with common endpoints");
  PdimVerdict v = verdict ? *verdict : pdim(c, opts);
  if (!v.is_finite()) throw Error(ErrorKind::InvalidArgument, "module is not known to have finite projective dimension");

  const auto [s, t] = *ep;
  const std::size_t d = c.dim(s);
  if (d == 0) return std::nullopt;
  Embedded rad = radical(c);
  const Echelon& r = rad.sub.parts[s];
  const std::size_t k = r.rank();
  Matrix fp = c.element_matrix(p, t, s);
  Matrix fq = c.element_matrix(q, t, s);
  Matrix rb = Matrix::from_columns(d, r.basis());
  Matrix fqr = fq * rb;
  // [Fp | -Fq R] (x; c) = 0
  Matrix sys(c.dim(t), d + k);
  for (std::size_t i = 0; i < c.dim(t); ++i) {
    for (std::size_t j = 0; j < d; ++j) sys(i, j) = fp(i, j);
    for (std::size_t j = 0; j < k; ++j) sys(i, d + j) = -fqr(i, j);
  }
  for (const auto& sol : nullspace(sys)) {
    Vec x(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(d));
    if (r.contains(x)) continue;
    Vec coeff(sol.begin() + static_cast<std::ptrdiff_t>(d), sol.end());
    Vec y = k ? rb * coeff : zero_vec(d);
    return Violation{c, v, p, c.embed(s, x), q, c.embed(s, y)};
  }
  return std::nullopt;
}

CriterionReport criterion1_check(const AlgebraPtr& alg, const PathWord& p, const PathWord& q,
                                 const Criterion1Options& opts) {
  const Algebra& a = *alg;
  const Quiver& qv = a.quiver();
  CriterionReport r;
  r.criterion = "criterion1";
  if (p.source != q.source || p.target != q.target) {
    r.precondition_failure = "p and q must be paths with common endpoints";
    return r;
  }
  if (p.is_trivial() || q.is_trivial()) {
    r.precondition_failure = "p and q must have positive length";
    return r;
  }
  AlgebraElement pe = a.path(p);
  AlgebraElement qe = a.path(q);
  if (pe.is_zero() || qe.is_zero()) {
    r.precondition_failure = "p and q must not lie in the ideal";
    return r;
  }
  const std::size_t v1 = p.source;
  const std::size_t v2 = p.target;
  const std::string pn = qv.path_string(p);
  const std::string qn = qv.path_string(q);

  LeftIdeal meet = left_ideal_intersection(a, {pe}, {qe});
  {
    ConditionEntry e;
    e.condition = "intersection";
    e.status = meet.dimension == 0 ? ConditionStatus::Certified : ConditionStatus::Refuted;
    e.evidence = "dim Λ" + pn + " ∩ Λ" + qn + " = " + std::to_string(meet.dimension);
    r.entries.push_back(std::move(e));
  }

  Embedded pair = pair_module(alg, pe, qe);
  r.entries.push_back(pdim_entry("(i)", pair.module, pdim(pair.module, opts.pdim), true,
                                 "Λ(" + pn + "," + qn + ")"));

  // The recognizable package: p an arrow, q ≠ p, Jp = 0, qJ = 0, pdim Λq < ∞, pdim S_2 = ∞.
  std::vector<std::string> missing;
  if (p.length() != 1) missing.push_back("p is not an arrow");
  if (p == q) missing.push_back("q equals p");
  if (!radical_kills_left(a, pe)) missing.push_back("Jp ≠ 0");
  if (!radical_kills_right(a, qe)) missing.push_back("qJ ≠ 0");
  Representation lq = cyclic_module(alg, v1, qe).module;
  ConditionEntry eq = pdim_entry("package pdim Λq", lq, pdim(lq, opts.pdim), true, "Λ" + qn);
  Representation s2 = simple_module(alg, v2);
  ConditionEntry es = pdim_entry("package pdim S", s2, pdim(s2, opts.pdim), false, "S_" + qv.vertex_name(v2));
  {
    ConditionEntry e;
    e.condition = "package";
    if (eq.status != ConditionStatus::Certified) missing.push_back("pdim Λq not certified finite");
    if (es.status != ConditionStatus::Certified) missing.push_back("pdim S not certified infinite");
    e.status = missing.empty() ? ConditionStatus::Certified : ConditionStatus::Unverified;
    if (missing.empty()) {
      e.evidence = pn + " is an arrow, J" + pn + " = 0, " + qn + "J = 0, " + eq.evidence + ", " + es.evidence;
    } else {
      e.evidence = "does not apply:";
      for (const auto& m : missing) e.evidence += " " + m + ";";
      e.evidence.pop_back();
    }
    r.entries.push_back(std::move(e));
  }
  r.entries.push_back(std::move(eq));
  r.entries.push_back(std::move(es));
  const bool package = r.status("package") == ConditionStatus::Certified;

  TopRoute top = top_route(alg, v1, pe, opts.pdim);
  r.entries.push_back(entry_from("(iii)", top));

  {
    ConditionEntry e;
    e.condition = "(ii)";
    if (package) {
      e.status = ConditionStatus::Certified;
      e.evidence = "implied by the package";
    } else if (top.violation) {
      e.status = ConditionStatus::Refuted;
      e.evidence = "a top element killed by " + pn + " meets f_q(0)";
      Violation v = *top.violation;
      v.q = qe;
      v.y = zero_vec(v.module.total_dim());
      e.violation = std::move(v);
    } else {
      e.evidence = "no certificate for arbitrary modules of finite projective dimension";
      for (std::size_t i = 0; i < opts.counterexamples.size(); ++i) {
        std::optional<Violation> v;
        try {
          v = condition2_falsify(alg, pe, qe, opts.counterexamples[i], std::nullopt, opts.pdim);
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::InvalidArgument) throw;
        }
        if (v) {
          e.status = ConditionStatus::Refuted;
          e.evidence = "supplied module " + std::to_string(i + 1) + " has a top x with " + pn + "x ∈ " + qn + "J";
          e.violation = std::move(v);
          break;
        }
      }
    }
    r.entries.push_back(std::move(e));
  }
  {
    ConditionEntry e;
    e.condition = "(ii')";
    if (top.violation) {
      e.status = ConditionStatus::Refuted;
      e.evidence = "ker f_p meets the top: " + top.evidence;
      e.violation = top.violation;
    } else {
      e.evidence = "ker f_p ⊆ ker f_q over all modules of finite projective dimension is not mechanized";
    }
    r.entries.push_back(std::move(e));
  }

  auto cert = [&](std::string_view c) { return r.status(c) == ConditionStatus::Certified; };
  if (cert("intersection") && cert("(i)") && (cert("(ii)") || cert("(ii')")))
    r.overall = OverallVerdict::NoApproximation;
  return r;
}

CriterionReport criterion10_check(const AlgebraPtr& alg, const ZipperSpec& spec, const Criterion10Options& opts) {
  const Algebra& a = *alg;
  CriterionReport r;
  r.criterion = "criterion10";
  if (auto err = spec.alignment_error(a)) {
    r.precondition_failure = *err;
    return r;
  }
  const std::size_t m = spec.m();

  // (1): the zipper modules M_n. The sum of relators is direct once each
  // Λp_{r(i)} ∩ Λq_{r(i+1)} = 0, so M_n has finite pdim for all n as soon as
  // every pair module does; nonvanishing of the chain is decided at n = 2.
  {
    ConditionEntry e;
    e.condition = "(1)";
    std::string fail;
    PdimVerdict worst = PdimVerdict::finite(0);
    for (std::size_t i = 0; i < m && fail.empty(); ++i) {
      const auto& p = spec.p[i];
      const auto& q = spec.q[(i + 1) % m];
      if (left_ideal_intersection(a, {p}, {q}).dimension != 0) {
        fail = "Λp_" + std::to_string(i + 1) + " ∩ Λq_" + std::to_string((i + 1) % m + 1) + " ≠ 0";
        break;
      }
      Representation pv = projective_module(alg, spec.vertices[i]);
      Representation qv = projective_module(alg, spec.vertices[(i + 1) % m]);
      DirectSum s = direct_sum(alg, {pv, qv});
      Vec g = s.inclusions[0].apply(projective_vector(a, spec.vertices[i], p));
      axpy(g, Scalar(-1), s.inclusions[1].apply(projective_vector(a, spec.vertices[(i + 1) % m], q)));
      Representation pair = subrepresentation(s.module, generated_submodule(s.module, {g})).module;
      PdimVerdict v = pdim(pair, opts.pdim);
      if (!v.is_finite()) fail = "pdim of pair module " + std::to_string(i + 1) + " = " + v.to_string();
      else if (v.value > worst.value) worst = v;
    }
    const std::size_t n_max = std::max<std::size_t>(opts.n_max, 2);
    for (std::size_t n = 1; n <= n_max && fail.empty(); ++n) {
      PresentedModule mn = build_zipper(alg, spec, n);
      if (top(mn.module) != [&] {
            std::vector<std::size_t> t(a.quiver().vertex_count(), 0);
            for (auto g : mn.generators) ++t[g];
            return t;
          }()) {
        fail = "top elements of M_" + std::to_string(n) + " are dependent modulo JM";
        break;
      }
      for (std::size_t i = 0; i + 1 < m * n; ++i) {
        Vec lhs = mn.module.act(spec.p[i % m], mn.generator(i));
        Vec rhs = mn.module.act(spec.q[(i + 1) % m], mn.generator(i + 1));
        if (is_zero(lhs) || lhs != rhs) {
          fail = "chain breaks in M_" + std::to_string(n) + " at i = " + std::to_string(i + 1);
          break;
        }
      }
      if (!fail.empty()) break;
      PdimVerdict v = pdim(mn.module, opts.pdim);
      if (!v.is_finite()) {
        fail = "pdim M_" + std::to_string(n) + " = " + v.to_string();
        break;
      }
      e.module = mn.module;
      e.pdim = v;
    }
    if (fail.empty()) {
      e.status = ConditionStatus::Certified;
      e.evidence = "relator sum direct with pair modules of pdim ≤ " + std::to_string(worst.value) +
                   "; chains, tops and pdims checked for n ≤ " + std::to_string(n_max);
    } else {
      e.evidence = fail;
    }
    r.entries.push_back(std::move(e));
  }

  std::vector<TopRoute> routes;
  for (std::size_t i = 0; i < m; ++i) routes.push_back(top_route(alg, spec.vertices[i], spec.p[i], opts.pdim));
  r.entries.push_back(entry_from("(2)(i)", routes[0]));

  {
    ConditionEntry e;
    e.condition = "(2)(ii)";
    std::string fail;
    std::string how;
    for (std::size_t k = 0; k < m && fail.empty(); ++k) {
      const std::string idx = std::to_string(k + 1);
      const std::string vn = a.quiver().vertex_name(spec.vertices[k]);
      if (!radical_kills_right(a, spec.q[k])) {
        fail = "q_" + idx + "J ≠ 0 and vertex " + vn + " is not a source";
      } else if (routes[k].status != ConditionStatus::Certified) {
        fail = "top elements of type e_" + vn + " not shown to survive p_" + idx + ": " + routes[k].evidence;
      } else {
        how += (how.empty() ? "" : "; ") +
               std::string(a.quiver().is_source(spec.vertices[k]) ? "vertex " + vn + " is a source"
                                                                  : "q_" + idx + "J = 0") +
               ", " + routes[k].evidence;
      }
    }
    if (fail.empty()) {
      e.status = ConditionStatus::Certified;
      e.evidence = "q z ≠ 0 forces a top element: " + how;
    } else {
      e.evidence = fail;
    }
    r.entries.push_back(std::move(e));
  }

  bool all = true;
  for (const auto& e : r.entries) all = all && e.status == ConditionStatus::Certified;
  if (all) r.overall = OverallVerdict::NoApproximation;
  return r;
}

SeedReport remark11_seed(const AlgebraPtr& alg, std::size_t vertex, const std::vector<std::size_t>& arrows) {
  const Algebra& a = *alg;
  const Quiver& qv = a.quiver();
  if (!a.is_monomial()) throw Error(ErrorKind::NotMonomial, "seed needs a monomial algebra");
  if (arrows.empty()) throw Error(ErrorKind::InvalidArgument, "no arrows given");
  SeedReport r;
  r.vertex = vertex;
  r.arrows = arrows;
  r.summand_split = true;
  std::vector<std::string> finite;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const Arrow& ar = qv.arrow(arrows[i]);
    if (ar.source != vertex)
      throw Error(ErrorKind::EndpointMismatch, "arrow " + ar.name + " does not start at vertex " + qv.vertex_name(vertex));
    for (std::size_t j = 0; j < i; ++j)
      if (qv.arrow(arrows[j]).target == ar.target)
        throw Error(ErrorKind::InvalidArgument, "arrows " + qv.arrow(arrows[j]).name + " and " + ar.name +
                                                    " end at the same vertex");
    PathWord w{{arrows[i]}, ar.source, ar.target};
    PdimVerdict v = path_pdim(alg, w);
    if (!v.is_infinite()) finite.push_back(ar.name);
    r.summand_split = r.summand_split && summand_of_radical(alg, w, vertex);
    r.arrow_pdims.push_back(std::move(v));
    r.subgraph.push_back(qv.vertex_name(vertex) + " -" + ar.name + "-> " + qv.vertex_name(ar.target));
  }
  if (!finite.empty()) {
    std::string list;
    for (const auto& f : finite) list += (list.empty() ? "" : ", ") + f;
    throw Error(ErrorKind::FinitePdimArrow, "arrows of finite projective dimension: " + list);
  }
  r.simple_pdim = path_pdim(alg, PathWord::trivial(vertex));
  return r;
}

}  // namespace quiverlab
