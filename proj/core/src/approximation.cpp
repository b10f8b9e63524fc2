#include "quiverlab/approximation.hpp"

#include <random>
#include <stdexcept>

#include "quiverlab/error.hpp"

namespace quiverlab {

void FiniteCategory::add(std::string label, Representation m, std::optional<PdimVerdict> v) {
  if (!members.empty() && !members.front().same_algebra(m))
    throw Error(ErrorKind::AlgebraMismatch, "family members over different algebras");
  labels.push_back(std::move(label));
  members.push_back(std::move(m));
  pdims.push_back(std::move(v));
}

bool FiniteCategory::verify_flags() const {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!pdims[i]) {
      if (closure == kFinitePdim) return false;
      continue;
    }
    if (closure == kFinitePdim && !pdims[i]->is_finite()) return false;
    if (!verify_pdim(members[i], *pdims[i])) return false;
  }
  return true;
}

bool ApproxCertificate::verify() const {
  if (map.target() != target || !map.is_homomorphism()) return false;
  std::vector<std::size_t> seen(family.size(), 0);
  for (const auto& w : witnesses) {
    if (w.member >= family.size()) return false;
    if (!(w.h.source() == family.members[w.member]) || !(w.h.target() == source())) return false;
    if (!w.h.is_homomorphism() || !(compose(map, w.h) == w.g)) return false;
    ++seen[w.member];
  }
  // The witnessed g must span Hom(C_i, X) for every member.
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (seen[i] != hom_dim(family.members[i], target)) return false;
    std::vector<Vec> gs;
    for (const auto& w : witnesses)
      if (w.member == i) gs.push_back(w.g.flatten());
    if (!gs.empty() && rank(Matrix::from_columns(gs.front().size(), gs)) != gs.size()) return false;
  }
  if (right_minimal && !is_right_minimal(map)) return false;
  return true;
}

std::optional<ModuleMap> factor_through(const ModuleMap& f, const ModuleMap& g) {
  const Representation& a = f.source();
  const Representation& c = g.source();
  auto hs = hom_space(c, a);
  Vec rhs = g.flatten();
  if (hs.empty()) {
    if (g.is_zero()) return ModuleMap::zero(c, a);
    return std::nullopt;
  }
  std::vector<Vec> cols;
  for (const auto& h : hs) cols.push_back(compose(f, h).flatten());
  auto sol = solve(Matrix::from_columns(rhs.size(), cols), rhs);
  if (!sol) return std::nullopt;
  return combine(hs, *sol, c, a);
}

ApproxCheck is_approximation(const ModuleMap& f, const FiniteCategory& c) {
  ApproxCheck out;
  out.ok = true;
  const Representation& x = f.target();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Representation& ci = c.members[i];
    auto gs = hom_space(ci, x);
    if (gs.empty()) continue;
    auto hs = hom_space(ci, f.source());
    std::vector<Vec> cols;
    for (const auto& h : hs) cols.push_back(compose(f, h).flatten());
    std::size_t len = gs.front().flatten().size();
    Matrix m = Matrix::from_columns(len, cols);
    for (const auto& g : gs) {
      std::optional<Vec> sol = hs.empty() ? std::nullopt : solve(m, g.flatten());
      if (!sol) {
        out.ok = false;
        if (!out.failure) out.failure = std::make_pair(i, g);
        continue;
      }
      out.witnesses.push_back({i, g, combine(hs, *sol, ci, f.source())});
    }
  }
  return out;
}

namespace {

ModuleMap zero_map_from_zero(const Representation& x) {
  Representation z = Representation::zero(x.algebra_ptr());
  return ModuleMap::zero(z, x);
}

// [maps_1 ... maps_k]: ⊕ sources -> X.
struct Assembled {
  DirectSum sum;
  ModuleMap map;
};

Assembled assemble(const Representation& x, const std::vector<ModuleMap>& maps) {
  if (maps.empty()) {
    ModuleMap z = zero_map_from_zero(x);
    return {direct_sum(x.algebra_ptr(), {}), z};
  }
  std::vector<Representation> srcs;
  for (const auto& m : maps) srcs.push_back(m.source());
  DirectSum s = direct_sum(x.algebra_ptr(), srcs);
  ModuleMap f = from_sum(s, maps, x);
  return {s, f};
}

}  // namespace

ApproxCertificate naive_approximation(const FiniteCategory& c, const Representation& x) {
  if (c.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty family");
  std::vector<ModuleMap> maps;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (auto& g : hom_space(c.members[i], x)) {
      maps.push_back(std::move(g));
      owner.push_back(i);
    }
  Assembled as = assemble(x, maps);
  ApproxCertificate cert{x, c, as.map, {}, false};
  for (std::size_t k = 0; k < maps.size(); ++k) cert.witnesses.push_back({owner[k], maps[k], as.sum.inclusions[k]});
  return cert;
}

ApproxCertificate approximate(const FiniteCategory& c, const Representation& x, const std::vector<ModuleMap>& seeds) {
  std::vector<ModuleMap> maps = seeds;
  Assembled as = assemble(x, maps);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (const auto& g : hom_space(c.members[i], x)) {
      if (factor_through(as.map, g)) continue;
      maps.push_back(g);
      as = assemble(x, maps);
    }
  }
  ApproxCheck chk = is_approximation(as.map, c);
  if (!chk.ok) throw std::logic_error("greedy approximation left a map unfactored");
  return ApproxCertificate{x, c, as.map, std::move(chk.witnesses), false};
}

// ------------------------------------------------------- right minimality

std::vector<ModuleMap> annihilating_endomorphisms(const ModuleMap& f) {
  const Representation& a = f.source();
  auto ends = hom_space(a, a);
  if (ends.empty()) return {};
  std::vector<Vec> cols;
  for (const auto& u : ends) cols.push_back(compose(f, u).flatten());
  std::size_t len = f.flatten().size();
  std::vector<ModuleMap> out;
  if (len == 0) return ends;
  for (const auto& c : nullspace(Matrix::from_columns(len, cols))) out.push_back(combine(ends, c, a, a));
  return out;
}

namespace {

Scalar trace(const ModuleMap& v) {
  Scalar t = v.source().algebra().field().zero();
  for (const auto& b : v.blocks())
    for (std::size_t i = 0; i < b.rows(); ++i) t += b(i, i);
  return t;
}

bool is_nilpotent(const ModuleMap& v) {
  for (const auto& b : v.blocks()) {
    if (b.empty()) continue;
    Matrix p = b;
    for (std::size_t k = 1; k < b.rows(); ++k) p = p * b;
    if (!p.is_zero()) return false;
  }
  return true;
}

// v ∘ v ∘ ... with exponent dims[x] on each block: the stable power.
ModuleMap stable_power(const ModuleMap& v) {
  std::vector<Matrix> blocks;
  for (const auto& b : v.blocks()) {
    Matrix p = b;
    for (std::size_t k = 1; k < b.rows(); ++k) p = p * b;
    blocks.push_back(std::move(p));
  }
  return ModuleMap(v.source(), v.target(), std::move(blocks));
}

// V^k = V^{k-1} V descends to a stable right ideal; V is nilpotent iff that is 0.
std::vector<ModuleMap> stable_product(const std::vector<ModuleMap>& v) {
  if (v.empty()) return {};
  std::size_t len = v.front().flatten().size();
  std::vector<ModuleMap> cur = v;
  while (!cur.empty()) {
    Echelon next(len);
    std::vector<ModuleMap> basis;
    for (const auto& x : cur)
      for (const auto& y : v) {
        ModuleMap p = compose(x, y);
        if (next.insert(p.flatten())) basis.push_back(std::move(p));
      }
    if (basis.size() == cur.size()) break;
    cur = std::move(basis);
  }
  return cur;
}

std::optional<ModuleMap> find_non_nilpotent(const std::vector<ModuleMap>& v, const MinimizeOptions& opts) {
  if (v.empty()) return std::nullopt;
  const Field& field = v.front().source().algebra().field();
  if (field.is_rational()) {
    // Traces vanish on a right ideal closed under powers only if it is nil.
    for (const auto& x : v)
      if (!trace(x).is_zero()) return x;
    return std::nullopt;
  }
  auto w = stable_product(v);
  if (w.empty()) return std::nullopt;
  for (const auto& x : w)
    if (!is_nilpotent(x)) return x;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      ModuleMap s = w[i] + w[j];
      if (!is_nilpotent(s)) return s;
    }
  std::mt19937_64 rng(opts.seed);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    Vec c(w.size());
    for (auto& s : c) s = field.random(rng);
    ModuleMap s = combine(w, c, w.front().source(), w.front().source());
    if (!is_nilpotent(s)) return s;
  }
  throw std::runtime_error("right ideal is not nilpotent but no non-nilpotent element was found");
}

// Projection A -> ker(w) along im(w), for an idempotent-like split A = ker ⊕ im.
ModuleMap fitting_projection(const ModuleMap& w, const Embedded& k) {
  const Representation& a = w.source();
  std::vector<Matrix> blocks;
  for (std::size_t x = 0; x < a.vertex_count(); ++x) {
    std::size_t d = a.dim(x);
    std::size_t kd = k.module.dim(x);
    if (kd == 0) {
      blocks.emplace_back(0, d);
      continue;
    }
    std::vector<Vec> cols = k.inclusion.block(x).columns();
    Echelon im = column_space(w.block(x));
    for (const auto& c : im.basis()) cols.push_back(c);
    auto inv = inverse(Matrix::from_columns(d, cols));
    if (!inv) throw std::logic_error("Fitting decomposition is not direct");
    Matrix p(kd, d);
    for (std::size_t r = 0; r < kd; ++r)
      for (std::size_t c = 0; c < d; ++c) p(r, c) = (*inv)(r, c);
    blocks.push_back(std::move(p));
  }
  return ModuleMap(a, k.module, std::move(blocks));
}

bool nil_ideal(const std::vector<ModuleMap>& v) {
  if (v.empty()) return true;
  if (v.front().source().algebra().field().is_rational()) {
    for (const auto& x : v)
      if (!trace(x).is_zero()) return false;
    return true;
  }
  return stable_product(v).empty();
}

}  // namespace

bool is_right_minimal(const ModuleMap& f) { return nil_ideal(annihilating_endomorphisms(f)); }

ApproxCertificate right_minimize(ApproxCertificate cert, const MinimizeOptions& opts) {
  for (;;) {
    auto v = annihilating_endomorphisms(cert.map);
    auto u = find_non_nilpotent(v, opts);
    if (!u) {
      cert.right_minimal = true;
      return cert;
    }
    ModuleMap w = stable_power(*u);
    Embedded k = kernel(w);
    ModuleMap pi = fitting_projection(w, k);
    cert.map = compose(cert.map, k.inclusion);
    for (auto& wit : cert.witnesses) wit.h = compose(pi, wit.h);
  }
}

// ------------------------------------------------------------ growth scan

ScanResult approximation_growth_scan(const FamilyGenerator& gen, const Representation& x, std::size_t n_max,
                                     const ScanOptions& opts) {
  ScanResult out;
  FiniteCategory fam;
  fam.closure = kFinitePdim;
  for (const auto& m : opts.ambient) fam.add(m.label, m.module, m.pdim);
  std::vector<ModuleMap> seeds;
  for (std::size_t n = 1; n <= n_max; ++n) {
    FamilyMember m = gen(n);
    fam.add(m.label, m.module, m.pdim);
    ApproxCertificate cert = right_minimize(approximate(fam, x, seeds), opts.minimize);
    out.rows.push_back({n, cert.source().total_dim(), cert.right_minimal, cert.verify()});
    seeds = {cert.map};
    out.last = std::move(cert);
  }
  return out;
}

bool scan_is_monotone(const std::vector<ScanRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].source_dim < rows[i - 1].source_dim) return false;
  return true;
}

bool scan_shows_growth(const std::vector<ScanRow>& rows, std::size_t k) {
  if (rows.size() < k + 1 || k == 0) return false;
  for (std::size_t i = rows.size() - k; i < rows.size(); ++i)
    if (rows[i].source_dim <= rows[i - 1].source_dim) return false;
  return true;
}

}  // namespace quiverlab
