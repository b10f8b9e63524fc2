#include "quiverlab/homology.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "quiverlab/error.hpp"
#include "quiverlab/monomial.hpp"

namespace quiverlab {

const char* to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::Yes: return "Yes";
    case IsoStatus::No: return "No";
    case IsoStatus::ProbablyNo: return "ProbablyNo";
  }
  return "?";
}

ModuleMap inverse_map(const ModuleMap& f) {
  std::vector<Matrix> blocks;
  for (const auto& b : f.blocks()) {
    if (b.rows() == 0 && b.cols() == 0) {
      blocks.emplace_back(0, 0);
      continue;
    }
    auto inv = inverse(b);
    if (!inv) throw Error(ErrorKind::InvalidArgument, "map is not invertible");
    blocks.push_back(std::move(*inv));
  }
  return ModuleMap(f.target(), f.source(), std::move(blocks));
}

namespace {

bool blocks_invertible(const ModuleMap& f) {
  for (const auto& b : f.blocks())
    if (!is_invertible(b)) return false;
  return true;
}

}  // namespace

IsoVerdict is_isomorphic(const Representation& m, const Representation& n, const IsoOptions& opts) {
  if (!m.same_algebra(n)) throw Error(ErrorKind::AlgebraMismatch, "modules over different algebras");
  if (m.dims() != n.dims()) return {IsoStatus::No, {}, "dimension vectors differ"};
  if (m.is_zero()) return {IsoStatus::Yes, ModuleMap::zero(m, n), "both zero"};
  if (top(m) != top(n)) return {IsoStatus::No, {}, "tops differ"};
  if (socle(m).module.dims() != socle(n).module.dims()) return {IsoStatus::No, {}, "socles differ"};
  auto mn = hom_space(m, n);
  std::size_t nn = hom_dim(n, n);
  if (mn.size() != nn) return {IsoStatus::No, {}, "dim Hom(M,N) != dim End(N)"};
  if (hom_dim(m, m) != nn) return {IsoStatus::No, {}, "dim End(M) != dim End(N)"};
  if (hom_dim(n, m) != nn) return {IsoStatus::No, {}, "dim Hom(N,M) != dim End(N)"};

  for (const auto& f : mn)
    if (blocks_invertible(f)) return {IsoStatus::Yes, f, "basis element is invertible"};
  std::mt19937_64 rng(opts.seed);
  const Field& field = m.algebra().field();
  for (std::size_t t = 0; t < opts.trials; ++t) {
    Vec c(mn.size());
    for (auto& x : c) x = field.random(rng);
    ModuleMap f = combine(mn, c, m, n);
    if (blocks_invertible(f)) return {IsoStatus::Yes, f, "random combination is invertible"};
  }
  return {IsoStatus::ProbablyNo, {}, "no invertible map found in " + std::to_string(opts.trials) + " trials"};
}

std::optional<SplitSummand> split_local_summand(const Representation& x, const Representation& n) {
  if (x.is_zero()) return std::nullopt;
  for (std::size_t v = 0; v < x.vertex_count(); ++v)
    if (x.dim(v) > n.dim(v)) return std::nullopt;
  auto to_n = hom_space(x, n);
  if (to_n.empty()) return std::nullopt;
  auto from_n = hom_space(n, x);
  for (const auto& s : to_n)
    for (const auto& r : from_n) {
      ModuleMap u = compose(r, s);
      if (!blocks_invertible(u)) continue;
      ModuleMap r1 = compose(inverse_map(u), r);
      return SplitSummand{s, r1};
    }
  return std::nullopt;
}

// ------------------------------------------------------------------- pdim

std::string PdimVerdict::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case PdimKind::Finite: os << "Finite(" << value << ")"; break;
    case PdimKind::Unknown: os << "Unknown(cutoff " << value << ")"; break;
    case PdimKind::Infinite:
      os << "Infinite";
      if (period) os << " (Omega^" << period->first << " ~ Omega^" << period->second << ")";
      if (cycle) os << " (syzygy cycle of length " << cycle->chain.size() - 1 - cycle->cycle_start << ")";
      break;
  }
  return os.str();
}

std::vector<Representation> syzygies(const Representation& m, std::size_t count) {
  std::vector<Representation> out{m};
  for (std::size_t k = 0; k < count && !out.back().is_zero(); ++k) out.push_back(syzygy(out.back()));
  return out;
}

namespace {

PdimVerdict generic_pdim(const Representation& m, const PdimOptions& opts, std::size_t steps) {
  std::vector<Representation> omega{m};
  for (std::size_t k = 0;; ++k) {
    const Representation& cur = omega.back();
    if (is_projective(cur)) return PdimVerdict::finite(k);
    if (opts.detect_periodicity && k > 0) {
      for (std::size_t j = 0; j < k; ++j) {
        if (omega[j].dims() != cur.dims()) continue;
        IsoVerdict iv = is_isomorphic(omega[j], cur, opts.iso);
        if (iv.status == IsoStatus::Yes) {
          PdimVerdict v{PdimKind::Infinite, j, {}, {}, std::make_pair(j, k), iv.witness};
          return v;
        }
      }
    }
    if (k >= steps) return PdimVerdict::unknown(steps);
    omega.push_back(syzygy(cur));
  }
}

PdimVerdict monomial_pdim(const Representation& m) {
  if (m.is_zero() || is_projective(m)) return PdimVerdict::finite(0);
  const AlgebraPtr& alg = m.algebra_ptr();
  Representation omega = syzygy(m);
  auto parts = decompose_into_path_modules(alg, omega);
  if (!parts) return PdimVerdict::unknown(0);
  std::size_t best = 0;
  for (const auto& p : *parts) {
    if (p.is_trivial()) continue;
    PdimVerdict v = path_pdim(alg, p);
    if (v.is_infinite()) {
      v.value = 1;
      v.summands = *parts;
      return v;
    }
    best = std::max(best, v.value);
  }
  PdimVerdict out = PdimVerdict::finite(best + 1);
  out.summands = *parts;
  return out;
}

}  // namespace

PdimVerdict pdim(const Representation& m, const PdimOptions& opts) {
  if (m.is_zero()) return PdimVerdict::finite(0);
  if (opts.use_monomial && m.algebra().is_monomial()) {
    PdimVerdict exact = monomial_pdim(m);
    if (exact.kind != PdimKind::Unknown) {
      if (opts.cross_check) {
        std::size_t steps = exact.is_finite() ? exact.value : opts.cutoff;
        PdimVerdict check = generic_pdim(m, opts, steps);
        bool agree = exact.is_finite() ? (check.is_finite() && check.value == exact.value) : !check.is_finite();
        if (!agree)
          throw std::logic_error("path-module verdict " + exact.to_string() + " contradicts syzygy iteration " +
                                 check.to_string());
      }
      return exact;
    }
  }
  return generic_pdim(m, opts, opts.cutoff);
}

bool verify_pdim(const Representation& m, const PdimVerdict& v, const IsoOptions& iso) {
  switch (v.kind) {
    case PdimKind::Unknown: return true;
    case PdimKind::Finite: {
      auto omega = syzygies(m, v.value);
      if (omega.size() <= v.value) return false;
      if (!is_projective(omega[v.value])) return false;
      return v.value == 0 || !is_projective(omega[v.value - 1]);
    }
    case PdimKind::Infinite: {
      if (v.period) {
        auto omega = syzygies(m, v.period->second);
        if (omega.size() <= v.period->second) return false;
        const auto& a = omega[v.period->first];
        const auto& b = omega[v.period->second];
        if (a.is_zero()) return false;
        if (v.period_iso && v.period_iso->source() == a && v.period_iso->target() == b)
          return v.period_iso->is_isomorphism();
        return is_isomorphic(a, b, iso).status == IsoStatus::Yes;
      }
      if (v.cycle) {
        const AlgebraPtr& alg = m.algebra_ptr();
        if (!verify_cycle_witness(alg, *v.cycle)) return false;
        auto omega = syzygies(m, v.value);
        if (omega.size() <= v.value) return false;
        // The chain must start at a summand of Ω^value (or be Ω^value itself).
        Representation first = path_node_module(alg, v.cycle->chain.front());
        return split_local_summand(first, omega[v.value]).has_value() ||
               is_isomorphic(first, omega[v.value], iso).status == IsoStatus::Yes;
      }
      return false;
    }
  }
  return false;
}

}  // namespace quiverlab
