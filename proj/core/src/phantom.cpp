#include "quiverlab/phantom.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "quiverlab/error.hpp"

namespace quiverlab {

namespace {

bool in_radical(const Algebra& a, const AlgebraElement& x) {
  for (const auto& [i, s] : x.terms)
    if (a.basis_path(i).is_trivial()) return false;
  return true;
}

std::size_t common_source(const Algebra& a, const AlgebraElement& p, const AlgebraElement& q) {
  auto ep = a.endpoints(p);
  auto eq = a.endpoints(q);
  if (!ep || !eq || ep->first != eq->first)
    throw Error(ErrorKind::EndpointMismatch, "p and q must be nonzero and share their source vertex");
  if (!in_radical(a, p) || !in_radical(a, q))
    throw Error(ErrorKind::EndpointMismatch, "p and q must lie in the radical");
  return ep->first;
}

}  // namespace

std::optional<std::string> ZipperSpec::alignment_error(const Algebra& a) const {
  const std::size_t m = vertices.size();
  if (m == 0) return "no vertices";
  if (p.size() != m || q.size() != m) return "need exactly one p_i and one q_i per vertex";
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (vertices[i] == vertices[j]) return "vertices must be pairwise distinct";
  std::vector<std::size_t> pt(m), qt(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::string idx = std::to_string(i + 1);
    for (auto [x, name, tgt] : {std::tuple{&p[i], "p_", &pt[i]}, std::tuple{&q[i], "q_", &qt[i]}}) {
      auto ep = a.endpoints(*x);
      if (!ep) return std::string(name) + idx + " is zero or not homogeneous";
      if (ep->first != vertices[i])
        return std::string(name) + idx + " does not start at " + a.quiver().vertex_name(vertices[i]);
      if (!in_radical(a, *x)) return std::string(name) + idx + " is not in the radical";
      *tgt = ep->second;
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    if (pt[i] != qt[(i + 1) % m])
      return "p_" + std::to_string(i + 1) + " and q_" + std::to_string((i + 1) % m + 1) + " end at different vertices";
  return std::nullopt;
}

PresentedModule build_zipper(const AlgebraPtr& alg, const ZipperSpec& spec, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "zipper needs n >= 1");
  if (auto err = spec.alignment_error(*alg)) throw Error(ErrorKind::EndpointMismatch, *err);
  const std::size_t m = spec.m();
  const std::size_t len = m * n;
  std::vector<std::size_t> gens(len);
  for (std::size_t i = 0; i < len; ++i) gens[i] = spec.vertices[i % m];
  std::vector<FreeElement> rels;
  for (std::size_t i = 0; i + 1 < len; ++i) {
    FreeElement r(len);
    r[i] = spec.p[i % m];
    r[i + 1] = alg->scale(spec.q[(i + 1) % m], Scalar(-1));
    rels.push_back(std::move(r));
  }
  return presented_module(alg, std::move(gens), std::move(rels));
}

PresentedModule build_Nn(const AlgebraPtr& alg, const AlgebraElement& p, const AlgebraElement& q, std::size_t n) {
  std::size_t v = common_source(*alg, p, q);
  return build_zipper(alg, ZipperSpec{{v}, {p}, {q}}, n);
}

Embedded pair_module(const AlgebraPtr& alg, const AlgebraElement& p, const AlgebraElement& q) {
  std::size_t v = common_source(*alg, p, q);
  Representation pv = projective_module(alg, v);
  DirectSum s = direct_sum(alg, {pv, pv});
  Vec g = s.inclusions[0].apply(projective_vector(*alg, v, p));
  axpy(g, Scalar(1), s.inclusions[1].apply(projective_vector(*alg, v, q)));
  return subrepresentation(s.module, generated_submodule(s.module, {g}));
}

NnReport verify_Nn_syzygy_split(const AlgebraPtr& alg, const AlgebraElement& p, const AlgebraElement& q,
                                std::size_t n, const PdimOptions& opts) {
  NnReport r;
  r.n = n;
  const Algebra& a = *alg;
  std::size_t v = common_source(a, p, q);
  r.intersection_zero = left_ideal_intersection(a, {p}, {q}).dimension == 0;

  PresentedModule nn = build_Nn(alg, p, q, n);
  Embedded pair = pair_module(alg, p, q);
  r.module_dim = nn.module.total_dim();

  Submodule total = zero_submodule(nn.free);
  std::size_t summed = 0;
  r.summands_isomorphic = true;
  for (const auto& rel : nn.relators) {
    Submodule c = generated_submodule(nn.free, {free_vector(a, nn.generators, rel)});
    summed += c.total_dim();
    total = submodule_sum(total, c);
    Representation ci = subrepresentation(nn.free, c).module;
    if (is_isomorphic(ci, pair.module, opts.iso).status != IsoStatus::Yes) r.summands_isomorphic = false;
  }
  r.kernel_is_direct = summed == total.total_dim() && total.total_dim() == nn.relations.total_dim();

  r.pdim_pair = pdim(pair.module, opts);
  r.pdim_module = pdim(nn.module, opts);
  r.pdim_consistent = !r.pdim_pair.is_finite() || r.pdim_module.is_finite();

  std::size_t pe = a.basis_from(v).size();
  r.dimension_law = r.module_dim + (n - 1) * pair.module.total_dim() == n * pe;
  return r;
}

const char* to_string(RankSearch m) { return m == RankSearch::Exhaustive ? "exhaustive" : "randomized"; }

// ------------------------------------------------------------------ tower

bool PhantomTower::coherent() const {
  for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
    const auto& g = stages[i].to_next;
    if (!g) return false;
    if (!g->is_homomorphism()) return false;
    if (!(compose(stages[i + 1].approx.map, *g) == stages[i].approx.map)) return false;
  }
  return true;
}

namespace {

struct RankChoice {
  ModuleMap map;
  RankSearch mode;
  std::size_t parameters;
};

// Minimizes rank over g0 + span(v).
RankChoice minimize_rank(const ModuleMap& g0, const std::vector<ModuleMap>& v, const TowerOptions& opts) {
  const Representation& s = g0.source();
  const Representation& t = g0.target();
  RankChoice best{g0, RankSearch::Exhaustive, v.size()};
  std::size_t best_rank = g0.rank();
  if (v.size() <= opts.exhaustive_limit) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << v.size()) && best_rank > 0; ++mask) {
      ModuleMap g = g0;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (mask >> j & 1) g = g + v[j];
      std::size_t r = g.rank();
      if (r < best_rank) {
        best_rank = r;
        best.map = std::move(g);
      }
    }
    return best;
  }
  best.mode = RankSearch::Randomized;
  const Field& field = s.algebra().field();
  std::mt19937_64 rng(opts.seed);
  Vec coeff(v.size(), field.zero());
  ModuleMap cur = g0;
  std::size_t cur_rank = best_rank;
  for (std::size_t round = 0; round < opts.descent_rounds && best_rank > 0; ++round) {
    Vec trial = coeff;
    trial[rng() % v.size()] = field.random(rng);
    ModuleMap g = g0 + combine(v, trial, s, t);
    std::size_t r = g.rank();
    if (r <= cur_rank) {
      coeff = std::move(trial);
      cur = g;
      cur_rank = r;
      if (r < best_rank) {
        best_rank = r;
        best.map = std::move(g);
      }
    }
  }
  return best;
}

std::vector<ModuleMap> kernel_directions(const ModuleMap& f, const Representation& src) {
  auto hs = hom_space(src, f.source());
  if (hs.empty()) return {};
  std::vector<Vec> cols;
  for (const auto& h : hs) cols.push_back(compose(f, h).flatten());
  std::size_t len = ModuleMap::zero(src, f.target()).flatten().size();
  if (len == 0) return hs;
  std::vector<ModuleMap> out;
  for (const auto& c : nullspace(Matrix::from_columns(len, cols))) out.push_back(combine(hs, c, src, f.source()));
  return out;
}

}  // namespace

PhantomTower phantom_tower(const Representation& x, const FamilyGenerator& d, const TowerOptions& opts) {
  PhantomTower t;
  t.target = x;
  MinimizeOptions mo;
  mo.seed = opts.seed;
  auto stage_pdim = [&](const Representation& m) -> std::optional<PdimVerdict> {
    if (!opts.verify_pdims) return std::nullopt;
    return pdim(m);
  };

  for (std::size_t n = 1; n <= opts.budget; ++n) {
    FamilyMember dn = d(n);
    t.family_labels.push_back(dn.label);
    FiniteCategory c;
    c.closure = kFinitePdim;
    c.add(dn.label, dn.module, dn.pdim);
    for (const auto& m : opts.ambient) c.add(m.label, m.module, m.pdim);
    std::vector<ModuleMap> seeds;
    if (!t.stages.empty()) {
      const auto& prev = t.stages.back();
      c.add("A_" + std::to_string(prev.index), prev.approx.source(), prev.pdim);
      seeds.push_back(prev.approx.map);
    }
    ApproxCertificate odd = right_minimize(approximate(c, x, seeds), mo);
    if (odd.source().total_dim() > opts.max_stage_dim) {
      t.budget_exhausted = true;
      t.stop_reason = "stage A_" + std::to_string(2 * n - 1) + " exceeds the dimension cap";
      break;
    }
    if (!t.stages.empty()) {
      auto g = factor_through(odd.map, t.stages.back().approx.map);
      if (!g) throw std::logic_error("previous stage does not factor through the next one");
      t.stages.back().to_next = std::move(*g);
    }
    t.stages.push_back({2 * n - 1, odd, std::nullopt, stage_pdim(odd.source())});

    FiniteCategory c2;
    c2.closure = kFinitePdim;
    c2.add("A_" + std::to_string(2 * n - 1), odd.source(), t.stages.back().pdim);
    ApproxCertificate even = right_minimize(approximate(c2, x, {odd.map}), mo);
    auto g0 = factor_through(even.map, odd.map);
    if (!g0) throw std::logic_error("odd stage does not factor through its approximation");
    RankChoice choice = minimize_rank(*g0, kernel_directions(even.map, odd.source()), opts);
    ImageResult im = image(choice.map);
    t.stages.back().to_next = choice.map;
    t.stages.push_back({2 * n, even, std::nullopt, stage_pdim(even.source())});
    t.u.push_back({2 * n, im.module.total_dim(), Embedded{im.module, im.inclusion, im.sub}, choice.mode,
                   choice.parameters, std::nullopt});
  }

  // U_{2n} must survive into every later stage.
  for (auto& u : t.u) {
    std::size_t pos = u.stage - 1;
    if (pos + 1 >= t.stages.size()) continue;
    ModuleMap g = u.module.inclusion;
    for (std::size_t i = pos; i + 1 < t.stages.size(); ++i) g = compose(*t.stages[i].to_next, g);
    u.stable = g.is_injective();
  }
  return t;
}

TowerReport tower_report(const PhantomTower& t, std::size_t k) {
  TowerReport r;
  for (const auto& s : t.stages) r.stage_dims.push_back(s.approx.source().total_dim());
  for (const auto& u : t.u) r.u_dims.push_back(u.dim);
  r.coherent = t.coherent();
  r.stable = true;
  for (const auto& u : t.u)
    if (u.stable && !*u.stable) r.stable = false;
  k = std::max<std::size_t>(k, 2);
  if (r.u_dims.size() >= k) {
    r.growth = true;
    for (std::size_t i = r.u_dims.size() - k + 1; i < r.u_dims.size(); ++i)
      if (r.u_dims[i] <= r.u_dims[i - 1]) r.growth = false;
  }
  if (r.growth) {
    r.verdict = "growth evidence";
  } else if (!r.u_dims.empty()) {
    std::size_t last = r.u_dims.back();
    bool flat = r.u_dims.size() >= 2 && r.u_dims[r.u_dims.size() - 2] == last;
    r.verdict = flat ? "stabilized at dimension " + std::to_string(last) : "no growth evidence";
  } else {
    r.verdict = "no stages";
  }
  return r;
}

std::string tower_dot(const PhantomTower& t) {
  std::ostringstream os;
  os << "digraph tower {\n  rankdir=LR;\n";
  for (const auto& s : t.stages)
    os << "  A" << s.index << " [label=\"A_" << s.index << "\\ndim " << s.approx.source().total_dim() << "\"];\n";
  os << "  X [label=\"X\\ndim " << t.target.total_dim() << "\", shape=box];\n";
  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    const auto& s = t.stages[i];
    os << "  A" << s.index << " -> X [style=dashed, label=\"f_" << s.index << "\"];\n";
    if (s.to_next && i + 1 < t.stages.size())
      os << "  A" << s.index << " -> A" << t.stages[i + 1].index << " [label=\"g rank " << s.to_next->rank()
         << "\"];\n";
  }
  for (const auto& u : t.u)
    os << "  U" << u.stage << " [label=\"U_" << u.stage << "\\ndim " << u.dim << "\", shape=ellipse];\n  U"
       << u.stage << " -> A" << u.stage << " [arrowhead=inv];\n";
  os << "}\n";
  return os.str();
}

// -------------------------------------------------------------- subfactor

const char* to_string(SubfactorStatus s) {
  switch (s) {
    case SubfactorStatus::Yes: return "Yes";
    case SubfactorStatus::No: return "No";
    case SubfactorStatus::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

std::optional<SubfactorVerdict> try_tuple(const Representation& b, const Representation& a, const std::vector<Vec>& u) {
  const CoverData& cd = b.cover_data();
  ModuleMap psi = cover_map(b, a, u);
  for (std::size_t t = 0; t < a.vertex_count(); ++t) {
    if (cd.projective.dim(t) == 0) continue;
    if (a.dim(t) == 0) {
      if (cd.kernel.parts[t].rank() != cd.projective.dim(t)) return std::nullopt;
      continue;
    }
    for (const auto& x : nullspace(psi.block(t)))
      if (!cd.kernel.parts[t].contains(x)) return std::nullopt;
  }
  ImageResult im = image(psi);
  std::vector<Matrix> blocks;
  for (std::size_t t = 0; t < a.vertex_count(); ++t) {
    auto r = right_inverse(im.corestriction.block(t));
    if (!r) return std::nullopt;
    blocks.push_back(cd.epi[t] * *r);
  }
  ModuleMap s(im.module, b, std::move(blocks));
  if (!s.is_homomorphism() || !s.is_surjective()) return std::nullopt;
  return SubfactorVerdict{SubfactorStatus::Yes, Embedded{im.module, im.inclusion, im.sub}, s,
                          "quotient of a submodule generated by " + std::to_string(u.size()) + " elements"};
}

}  // namespace

SubfactorVerdict subfactor_check(const Representation& b, const Representation& a, const SubfactorOptions& opts) {
  if (!b.same_algebra(a)) throw Error(ErrorKind::AlgebraMismatch, "modules over different algebras");
  for (std::size_t v = 0; v < b.vertex_count(); ++v)
    if (b.dim(v) > a.dim(v))
      return {SubfactorStatus::No, {}, {},
              "multiplicity of S_" + b.algebra().quiver().vertex_name(v) + " in B exceeds that in A"};
  if (b.is_zero()) {
    Embedded z = subrepresentation(a, zero_submodule(a));
    return {SubfactorStatus::Yes, z, ModuleMap::zero(z.module, b), "B is zero"};
  }
  const CoverData& cd = b.cover_data();
  const std::size_t t = cd.top_vertices.size();
  if (t > opts.max_generators)
    return {SubfactorStatus::Unknown, {}, {}, "B needs more generators than the search allows"};

  // Candidates at each top vertex: basis vectors, then sums of two.
  std::vector<std::vector<Vec>> cand(t);
  for (std::size_t k = 0; k < t; ++k) {
    std::size_t v = cd.top_vertices[k];
    std::size_t d = a.dim(v);
    for (std::size_t i = 0; i < d; ++i) cand[k].push_back(a.embed(v, unit_vec(d, i)));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        Vec x = unit_vec(d, i);
        x[j] = Scalar(1);
        cand[k].push_back(a.embed(v, x));
      }
  }
  std::size_t tried = 0;
  std::vector<std::size_t> idx(t, 0);
  for (;;) {
    if (tried++ >= opts.max_tuples) break;
    std::vector<Vec> u;
    for (std::size_t k = 0; k < t; ++k) u.push_back(cand[k][idx[k]]);
    if (auto r = try_tuple(b, a, u)) return *r;
    std::size_t k = 0;
    while (k < t && ++idx[k] == cand[k].size()) idx[k++] = 0;
    if (k == t) break;
  }
  std::mt19937_64 rng(opts.seed);
  const Field& field = a.algebra().field();
  for (std::size_t trial = 0; trial < opts.random_trials; ++trial) {
    std::vector<Vec> u;
    for (std::size_t k = 0; k < t; ++k) {
      std::size_t v = cd.top_vertices[k];
      Vec x(a.dim(v));
      for (auto& s : x) s = field.random(rng);
      u.push_back(a.embed(v, x));
    }
    if (auto r = try_tuple(b, a, u)) return *r;
  }
  return {SubfactorStatus::Unknown, {}, {}, "no witness found within the search bounds"};
}

}  // namespace quiverlab
