#include "quiverlab/rep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "quiverlab/error.hpp"

namespace quiverlab {

struct Representation::Data {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  std::vector<Matrix> arrows;

  std::once_flag cover_once;
  std::unique_ptr<CoverData> cover;
};

namespace {

const std::vector<std::size_t>& empty_dims() {
  static const std::vector<std::size_t> e;
  return e;
}

void require_same_algebra(const Representation& a, const Representation& b) {
  if (!a.same_algebra(b)) throw Error(ErrorKind::AlgebraMismatch, "modules over different algebras");
}

Scalar in_field(const Scalar& s, const Field& f) {
  if (f.is_rational()) return s;
  return s.reduced(f.characteristic);
}

}  // namespace

// ---------------------------------------------------------- Representation

Representation::Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrows,
                               bool validate_now)
    : alg_(std::move(alg)), data_(std::make_shared<Data>()) {
  if (!alg_) throw Error(ErrorKind::InvalidArgument, "representation without an algebra");
  const Quiver& q = alg_->quiver();
  if (dims.size() != q.vertex_count())
    throw Error(ErrorKind::InvalidArgument, "dimension vector has " + std::to_string(dims.size()) +
                                                " entries, quiver has " + std::to_string(q.vertex_count()) +
                                                " vertices");
  if (arrows.size() != q.arrow_count())
    throw Error(ErrorKind::InvalidArgument, "expected one matrix per arrow");
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (arrows[a].rows() != dims[ar.target] || arrows[a].cols() != dims[ar.source]) {
      if (arrows[a].rows() * arrows[a].cols() == 0 && dims[ar.target] * dims[ar.source] == 0) {
        arrows[a] = Matrix(dims[ar.target], dims[ar.source]);
        continue;
      }
      throw Error(ErrorKind::InvalidArgument, "matrix of arrow '" + ar.name + "' has shape " +
                                                  std::to_string(arrows[a].rows()) + "x" +
                                                  std::to_string(arrows[a].cols()) + ", expected " +
                                                  std::to_string(dims[ar.target]) + "x" +
                                                  std::to_string(dims[ar.source]));
    }
    if (!alg_->field().is_rational())
      for (std::size_t r = 0; r < arrows[a].rows(); ++r)
        for (std::size_t c = 0; c < arrows[a].cols(); ++c) arrows[a](r, c) = in_field(arrows[a](r, c), alg_->field());
  }
  data_->offsets.resize(dims.size());
  for (std::size_t v = 0; v < dims.size(); ++v) {
    data_->offsets[v] = data_->total;
    data_->total += dims[v];
  }
  data_->dims = std::move(dims);
  data_->arrows = std::move(arrows);
  if (validate_now) validate();
}

Representation Representation::zero(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  std::vector<Matrix> arrows(q.arrow_count());
  return Representation(std::move(alg), std::vector<std::size_t>(q.vertex_count(), 0), std::move(arrows), false);
}

const std::vector<std::size_t>& Representation::dims() const noexcept {
  return data_ ? data_->dims : empty_dims();
}

std::size_t Representation::total_dim() const noexcept { return data_ ? data_->total : 0; }

std::size_t Representation::offset(std::size_t v) const { return data_->offsets.at(v); }

const Matrix& Representation::arrow(std::size_t a) const { return data_->arrows.at(a); }

const std::vector<Matrix>& Representation::arrows() const { return data_->arrows; }

Matrix Representation::path_matrix(const PathWord& p) const {
  Matrix m = Matrix::identity(dim(p.source));
  for (auto a : p.arrows) m = arrow(a) * m;
  return m;
}

Matrix Representation::element_matrix(const AlgebraElement& x, std::size_t target, std::size_t source) const {
  Matrix out(dim(target), dim(source));
  for (const auto& [i, c] : x.terms) {
    const PathWord& b = alg_->basis_path(i);
    if (b.source != source || b.target != target) continue;
    out += path_matrix(b).scaled(c);
  }
  return out;
}

Vec Representation::vertex_part(const Vec& m, std::size_t v) const {
  auto begin = m.begin() + static_cast<std::ptrdiff_t>(offset(v));
  return Vec(begin, begin + static_cast<std::ptrdiff_t>(dim(v)));
}

Vec Representation::embed(std::size_t v, const Vec& local) const {
  Vec out(total_dim());
  for (std::size_t i = 0; i < local.size(); ++i) out[offset(v) + i] = local[i];
  return out;
}

Vec Representation::act(const PathWord& p, const Vec& m) const {
  Vec local = vertex_part(m, p.source);
  for (auto a : p.arrows) local = arrow(a) * local;
  return embed(p.target, local);
}

Vec Representation::act(const AlgebraElement& x, const Vec& m) const {
  Vec out(total_dim());
  for (const auto& [i, c] : x.terms) axpy(out, c, act(alg_->basis_path(i), m));
  return out;
}

void Representation::validate() const {
  for (const auto& rel : alg_->relations()) {
    const PathWord& first = rel.front().second;
    Matrix sum(dim(first.target), dim(first.source));
    for (const auto& [c, p] : rel) sum += path_matrix(p).scaled(c);
    if (!sum.is_zero()) {
      std::string text;
      for (const auto& [c, p] : rel) {
        if (!text.empty()) text += " + ";
        text += c.to_string() + "*" + alg_->quiver().path_string(p);
      }
      throw Error(ErrorKind::InvalidArgument, "representation violates relation " + text);
    }
  }
}

bool operator==(const Representation& a, const Representation& b) {
  if (a.alg_ != b.alg_) return false;
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return a.total_dim() == 0 && b.total_dim() == 0 && a.dims() == b.dims();
  return a.data_->dims == b.data_->dims && a.data_->arrows == b.data_->arrows;
}

// --------------------------------------------------------------- ModuleMap

ModuleMap::ModuleMap(Representation source, Representation target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  require_same_algebra(source_, target_);
  if (blocks_.size() != source_.vertex_count())
    throw Error(ErrorKind::InvalidArgument, "expected one block per vertex");
  for (std::size_t v = 0; v < blocks_.size(); ++v)
    if (blocks_[v].rows() != target_.dim(v) || blocks_[v].cols() != source_.dim(v)) {
      if (blocks_[v].rows() * blocks_[v].cols() == 0 && target_.dim(v) * source_.dim(v) == 0) {
        blocks_[v] = Matrix(target_.dim(v), source_.dim(v));
        continue;
      }
      throw Error(ErrorKind::InvalidArgument, "block shape mismatch at vertex " +
                                                  source_.algebra().quiver().vertex_name(v));
    }
}

ModuleMap ModuleMap::zero(const Representation& source, const Representation& target) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < source.vertex_count(); ++v) blocks.emplace_back(target.dim(v), source.dim(v));
  return ModuleMap(source, target, std::move(blocks));
}

ModuleMap ModuleMap::identity(const Representation& m) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) blocks.push_back(Matrix::identity(m.dim(v)));
  return ModuleMap(m, m, std::move(blocks));
}

ModuleMap ModuleMap::unflatten(const Representation& source, const Representation& target, const Vec& v) {
  std::vector<Matrix> blocks;
  std::size_t k = 0;
  for (std::size_t x = 0; x < source.vertex_count(); ++x) {
    Matrix b(target.dim(x), source.dim(x));
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = v[k++];
    blocks.push_back(std::move(b));
  }
  return ModuleMap(source, target, std::move(blocks));
}

Vec ModuleMap::apply(const Vec& m) const {
  Vec out(target_.total_dim());
  for (std::size_t v = 0; v < blocks_.size(); ++v) {
    if (blocks_[v].empty()) continue;
    Vec part = blocks_[v] * source_.vertex_part(m, v);
    for (std::size_t i = 0; i < part.size(); ++i) out[target_.offset(v) + i] = part[i];
  }
  return out;
}

Vec ModuleMap::flatten() const {
  Vec out;
  for (const auto& b : blocks_)
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out.push_back(b(r, c));
  return out;
}

bool ModuleMap::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool ModuleMap::is_homomorphism() const {
  const Quiver& q = source_.algebra().quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (!(target_.arrow(a) * blocks_[ar.source] == blocks_[ar.target] * source_.arrow(a))) return false;
  }
  return true;
}

std::size_t ModuleMap::rank() const {
  std::size_t r = 0;
  for (const auto& b : blocks_) r += quiverlab::rank(b);
  return r;
}

bool ModuleMap::is_injective() const { return rank() == source_.total_dim(); }
bool ModuleMap::is_surjective() const { return rank() == target_.total_dim(); }
bool ModuleMap::is_isomorphism() const {
  return source_.dims() == target_.dims() && is_injective() && is_homomorphism();
}

ModuleMap ModuleMap::operator+(const ModuleMap& rhs) const {
  std::vector<Matrix> blocks = blocks_;
  for (std::size_t v = 0; v < blocks.size(); ++v) blocks[v] += rhs.blocks_[v];
  return ModuleMap(source_, target_, std::move(blocks));
}

ModuleMap ModuleMap::operator-(const ModuleMap& rhs) const {
  std::vector<Matrix> blocks = blocks_;
  for (std::size_t v = 0; v < blocks.size(); ++v) blocks[v] -= rhs.blocks_[v];
  return ModuleMap(source_, target_, std::move(blocks));
}

ModuleMap ModuleMap::scaled(const Scalar& s) const {
  std::vector<Matrix> blocks;
  for (const auto& b : blocks_) blocks.push_back(b.scaled(s));
  return ModuleMap(source_, target_, std::move(blocks));
}

bool operator==(const ModuleMap& a, const ModuleMap& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.blocks_ == b.blocks_;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (!(f.target().dims() == g.source().dims()))
    throw Error(ErrorKind::InvalidArgument, "composition of maps with mismatched modules");
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < f.blocks().size(); ++v) blocks.push_back(g.block(v) * f.block(v));
  return ModuleMap(f.source(), g.target(), std::move(blocks));
}

ModuleMap combine(const std::vector<ModuleMap>& maps, const Vec& coeffs, const Representation& source,
                  const Representation& target) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < source.vertex_count(); ++v) blocks.emplace_back(target.dim(v), source.dim(v));
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t v = 0; v < blocks.size(); ++v) blocks[v] += maps[i].block(v).scaled(coeffs[i]);
  }
  return ModuleMap(source, target, std::move(blocks));
}

// --------------------------------------------------------------- Submodule

std::size_t Submodule::total_dim() const {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rank();
  return n;
}

std::vector<std::size_t> Submodule::dims() const {
  std::vector<std::size_t> out;
  for (const auto& p : parts) out.push_back(p.rank());
  return out;
}

bool Submodule::contains(const Representation& m, const Vec& x) const {
  for (std::size_t v = 0; v < parts.size(); ++v)
    if (!parts[v].contains(m.vertex_part(x, v))) return false;
  return true;
}

Submodule zero_submodule(const Representation& m) {
  Submodule s;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) s.parts.emplace_back(m.dim(v));
  return s;
}

Submodule full_submodule(const Representation& m) {
  Submodule s = zero_submodule(m);
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    for (std::size_t i = 0; i < m.dim(v); ++i) s.parts[v].insert(unit_vec(m.dim(v), i));
  return s;
}

Submodule generated_submodule(const Representation& m, const std::vector<Vec>& gens) {
  Submodule s = zero_submodule(m);
  const Quiver& q = m.algebra().quiver();
  std::vector<std::pair<std::size_t, Vec>> work;
  for (const auto& g : gens)
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
      Vec part = m.vertex_part(g, v);
      if (!is_zero(part)) work.emplace_back(v, std::move(part));
    }
  while (!work.empty()) {
    auto [v, x] = std::move(work.back());
    work.pop_back();
    if (!s.parts[v].insert(x)) continue;
    for (auto a : q.arrows_from(v)) {
      Vec y = m.arrow(a) * x;
      if (!is_zero(y)) work.emplace_back(q.arrow(a).target, std::move(y));
    }
  }
  return s;
}

bool is_submodule(const Representation& m, const Submodule& s) {
  if (s.parts.size() != m.vertex_count()) return false;
  const Quiver& q = m.algebra().quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    for (const auto& u : s.parts[ar.source].basis())
      if (!s.parts[ar.target].contains(m.arrow(a) * u)) return false;
  }
  return true;
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  Submodule s;
  for (std::size_t v = 0; v < a.parts.size(); ++v) s.parts.push_back(sum(a.parts[v], b.parts[v]));
  return s;
}

Submodule submodule_intersection(const Submodule& a, const Submodule& b) {
  Submodule s;
  for (std::size_t v = 0; v < a.parts.size(); ++v) s.parts.push_back(intersect(a.parts[v], b.parts[v]));
  return s;
}

Embedded subrepresentation(const Representation& m, const Submodule& s) {
  const Quiver& q = m.algebra().quiver();
  std::vector<std::size_t> dims = s.dims();
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const auto& src = s.parts[ar.source];
    const auto& tgt = s.parts[ar.target];
    Matrix mat(tgt.rank(), src.rank());
    for (std::size_t j = 0; j < src.rank(); ++j) {
      Vec y = m.arrow(a) * src.basis()[j];
      if (!tgt.contains(y)) throw Error(ErrorKind::NotASubmodule, "subspace is not stable under arrow '" + ar.name + "'");
      Vec c = tgt.coordinates(y);
      for (std::size_t i = 0; i < c.size(); ++i) mat(i, j) = c[i];
    }
    arrows.push_back(std::move(mat));
  }
  Representation sub(m.algebra_ptr(), dims, std::move(arrows), false);
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    blocks.push_back(Matrix::from_columns(m.dim(v), s.parts[v].basis()));
  ModuleMap inc(sub, m, std::move(blocks));
  return Embedded{sub, inc, s};
}

Vec sub_coordinates(const Representation& m, const Submodule& s, const Vec& x) {
  Vec out;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    Vec c = s.parts[v].coordinates(m.vertex_part(x, v));
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Quotient quotient(const Representation& m, const Submodule& s) {
  if (!is_submodule(m, s)) throw Error(ErrorKind::NotASubmodule, "quotient by a subspace that is not a submodule");
  const Quiver& q = m.algebra().quiver();
  std::vector<std::vector<std::size_t>> free(m.vertex_count());
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    free[v] = s.parts[v].free_columns();
    dims.push_back(free[v].size());
  }
  auto project = [&](std::size_t v, const Vec& x) {
    Vec r = s.parts[v].reduce(x);
    Vec out(free[v].size());
    for (std::size_t i = 0; i < free[v].size(); ++i) out[i] = r[free[v][i]];
    return out;
  };
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix mat(dims[ar.target], dims[ar.source]);
    for (std::size_t j = 0; j < free[ar.source].size(); ++j) {
      Vec y = project(ar.target, m.arrow(a).column(free[ar.source][j]));
      for (std::size_t i = 0; i < y.size(); ++i) mat(i, j) = y[i];
    }
    arrows.push_back(std::move(mat));
  }
  Representation qm(m.algebra_ptr(), dims, std::move(arrows), false);
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    Matrix b(dims[v], m.dim(v));
    for (std::size_t j = 0; j < m.dim(v); ++j) {
      Vec y = project(v, unit_vec(m.dim(v), j));
      for (std::size_t i = 0; i < y.size(); ++i) b(i, j) = y[i];
    }
    blocks.push_back(std::move(b));
  }
  return Quotient{qm, ModuleMap(m, qm, std::move(blocks))};
}

Embedded kernel(const ModuleMap& f) {
  Submodule s;
  for (std::size_t v = 0; v < f.source().vertex_count(); ++v) {
    Echelon e(f.source().dim(v));
    if (f.target().dim(v) == 0) {
      for (std::size_t i = 0; i < f.source().dim(v); ++i) e.insert(unit_vec(f.source().dim(v), i));
    } else {
      for (auto& x : nullspace(f.block(v))) e.insert(std::move(x));
    }
    s.parts.push_back(std::move(e));
  }
  return subrepresentation(f.source(), s);
}

ImageResult image(const ModuleMap& f) {
  Submodule s;
  for (std::size_t v = 0; v < f.source().vertex_count(); ++v) {
    Echelon e(f.target().dim(v));
    for (std::size_t c = 0; c < f.block(v).cols(); ++c) e.insert(f.block(v).column(c));
    s.parts.push_back(std::move(e));
  }
  Embedded emb = subrepresentation(f.target(), s);
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < f.source().vertex_count(); ++v) {
    Matrix b(s.parts[v].rank(), f.source().dim(v));
    for (std::size_t j = 0; j < f.source().dim(v); ++j) {
      Vec c = s.parts[v].coordinates(f.block(v).column(j));
      for (std::size_t i = 0; i < c.size(); ++i) b(i, j) = c[i];
    }
    blocks.push_back(std::move(b));
  }
  ModuleMap co(f.source(), emb.module, std::move(blocks));
  return ImageResult{emb.module, emb.inclusion, co, s};
}

// ------------------------------------------------------------- projectives

std::size_t projective_coordinate(const Algebra& alg, std::size_t vertex, std::size_t basis_index) {
  const PathWord& b = alg.basis_path(basis_index);
  if (b.source != vertex)
    throw Error(ErrorKind::MalformedRelator, "path " + alg.quiver().path_string(b) + " does not start at vertex " +
                                                 alg.quiver().vertex_name(vertex));
  std::size_t offset = 0, local = 0;
  for (auto i : alg.basis_from(vertex)) {
    const PathWord& p = alg.basis_path(i);
    if (p.target < b.target) ++offset;
    if (p.target == b.target && i < basis_index) ++local;
  }
  return offset + local;
}

Vec projective_vector(const Algebra& alg, std::size_t vertex, const AlgebraElement& x) {
  Vec out(alg.basis_from(vertex).size());
  for (const auto& [i, c] : x.terms) out[projective_coordinate(alg, vertex, i)] += c;
  return out;
}

Representation projective_module(const AlgebraPtr& alg, std::size_t vertex) {
  const Quiver& q = alg->quiver();
  if (vertex >= q.vertex_count()) throw Error(ErrorKind::UnknownVertex, "no vertex with index " + std::to_string(vertex));
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  std::map<std::size_t, std::size_t> local;  // basis index -> position at its target
  for (auto i : alg->basis_from(vertex)) local[i] = dims[alg->basis_path(i).target]++;
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix m(dims[ar.target], dims[ar.source]);
    for (auto i : alg->basis_from(vertex)) {
      if (alg->basis_path(i).target != ar.source) continue;
      for (const auto& [j, c] : alg->arrow_times(a, i)) m(local.at(j), local.at(i)) += c;
    }
    arrows.push_back(std::move(m));
  }
  return Representation(alg, std::move(dims), std::move(arrows), false);
}

Representation simple_module(const AlgebraPtr& alg, std::size_t vertex) {
  const Quiver& q = alg->quiver();
  if (vertex >= q.vertex_count()) throw Error(ErrorKind::UnknownVertex, "no vertex with index " + std::to_string(vertex));
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[vertex] = 1;
  std::vector<Matrix> arrows;
  for (const auto& ar : q.arrows()) arrows.emplace_back(dims[ar.target], dims[ar.source]);
  return Representation(alg, std::move(dims), std::move(arrows), false);
}

// ------------------------------------------------------------- direct sums

DirectSum direct_sum(const AlgebraPtr& alg, const std::vector<Representation>& summands) {
  const Quiver& q = alg->quiver();
  for (const auto& s : summands)
    if (s.algebra_ptr() != alg) throw Error(ErrorKind::AlgebraMismatch, "direct sum over different algebras");
  std::size_t nv = q.vertex_count();
  std::vector<std::size_t> dims(nv, 0);
  // start[k][v]: first local coordinate of summand k at vertex v
  std::vector<std::vector<std::size_t>> start(summands.size(), std::vector<std::size_t>(nv));
  for (std::size_t k = 0; k < summands.size(); ++k)
    for (std::size_t v = 0; v < nv; ++v) {
      start[k][v] = dims[v];
      dims[v] += summands[k].dim(v);
    }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix m(dims[ar.target], dims[ar.source]);
    for (std::size_t k = 0; k < summands.size(); ++k) {
      const Matrix& b = summands[k].arrow(a);
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (!b(r, c).is_zero()) m(start[k][ar.target] + r, start[k][ar.source] + c) = b(r, c);
    }
    arrows.push_back(std::move(m));
  }
  Representation sum(alg, dims, std::move(arrows), false);
  DirectSum out{sum, {}, {}};
  for (std::size_t k = 0; k < summands.size(); ++k) {
    std::vector<Matrix> inc, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix i(dims[v], summands[k].dim(v)), p(summands[k].dim(v), dims[v]);
      for (std::size_t j = 0; j < summands[k].dim(v); ++j) {
        i(start[k][v] + j, j) = Scalar(1);
        p(j, start[k][v] + j) = Scalar(1);
      }
      inc.push_back(std::move(i));
      proj.push_back(std::move(p));
    }
    out.inclusions.emplace_back(summands[k], sum, std::move(inc));
    out.projections.emplace_back(sum, summands[k], std::move(proj));
  }
  return out;
}

ModuleMap from_sum(const DirectSum& s, const std::vector<ModuleMap>& components, const Representation& target) {
  ModuleMap out = ModuleMap::zero(s.module, target);
  for (std::size_t k = 0; k < components.size(); ++k) out = out + compose(components[k], s.projections[k]);
  return out;
}

ModuleMap to_sum(const DirectSum& s, const std::vector<ModuleMap>& components, const Representation& source) {
  ModuleMap out = ModuleMap::zero(source, s.module);
  for (std::size_t k = 0; k < components.size(); ++k) out = out + compose(s.inclusions[k], components[k]);
  return out;
}

std::vector<std::size_t> composition_multiplicities(const Representation& m) { return m.dims(); }

// ------------------------------------------------------ presented modules

Vec free_vector(const Algebra& alg, const std::vector<std::size_t>& gens, const FreeElement& x) {
  if (x.size() != gens.size())
    throw Error(ErrorKind::MalformedRelator, "relator has " + std::to_string(x.size()) + " components, expected " +
                                                 std::to_string(gens.size()));
  std::size_t nv = alg.quiver().vertex_count();
  std::vector<std::size_t> dims(nv, 0);
  std::vector<std::vector<std::size_t>> start(gens.size(), std::vector<std::size_t>(nv));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (auto i : alg.basis_from(gens[k])) ++dims[alg.basis_path(i).target];
  std::vector<std::size_t> offsets(nv, 0), fill(nv, 0);
  for (std::size_t v = 1; v < nv; ++v) offsets[v] = offsets[v - 1] + dims[v - 1];
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t v = 0; v < nv; ++v) {
      start[k][v] = fill[v];
      fill[v] += alg.basis_between(gens[k], v).size();
    }
  Vec out(offsets.empty() ? 0 : offsets.back() + dims.back());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (const auto& [i, c] : x[k].terms) {
      const PathWord& b = alg.basis_path(i);
      if (b.source != gens[k])
        throw Error(ErrorKind::MalformedRelator,
                    "component " + std::to_string(k + 1) + " contains " + alg.quiver().path_string(b) +
                        ", which does not start at generator vertex " + alg.quiver().vertex_name(gens[k]));
      std::size_t local = 0;
      for (auto j : alg.basis_between(gens[k], b.target)) {
        if (j == i) break;
        ++local;
      }
      out[offsets[b.target] + start[k][b.target] + local] += c;
    }
  return out;
}

Vec PresentedModule::generator(std::size_t k) const {
  FreeElement e(generators.size());
  e[k] = module.algebra().idempotent(generators[k]);
  return projection.apply(free_vector(module.algebra(), generators, e));
}

PresentedModule presented_module(const AlgebraPtr& alg, std::vector<std::size_t> gens,
                                 std::vector<FreeElement> relators) {
  for (auto g : gens)
    if (g >= alg->quiver().vertex_count()) throw Error(ErrorKind::UnknownVertex, "generator at unknown vertex");
  std::vector<Representation> parts;
  for (auto g : gens) parts.push_back(projective_module(alg, g));
  DirectSum free = direct_sum(alg, parts);
  std::vector<Vec> rel_vecs;
  for (const auto& r : relators) rel_vecs.push_back(free_vector(*alg, gens, r));
  Submodule rel = generated_submodule(free.module, rel_vecs);
  Quotient qt = quotient(free.module, rel);
  return PresentedModule{std::move(gens), std::move(relators), free.module, qt.module, qt.projection, rel};
}

// ------------------------------------------------------------ radical, top

Embedded radical(const Representation& m) {
  Submodule s = zero_submodule(m);
  const Quiver& q = m.algebra().quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Matrix& mat = m.arrow(a);
    for (std::size_t c = 0; c < mat.cols(); ++c) s.parts[q.arrow(a).target].insert(mat.column(c));
  }
  return subrepresentation(m, s);
}

std::vector<std::size_t> top(const Representation& m) {
  Embedded r = radical(m);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) out.push_back(m.dim(v) - r.module.dim(v));
  return out;
}

Embedded socle(const Representation& m) {
  const Quiver& q = m.algebra().quiver();
  Submodule s;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    std::vector<Vec> rows;
    for (auto a : q.arrows_from(v))
      for (std::size_t r = 0; r < m.arrow(a).rows(); ++r) rows.push_back(m.arrow(a).row(r));
    Echelon e(m.dim(v));
    if (rows.empty()) {
      for (std::size_t i = 0; i < m.dim(v); ++i) e.insert(unit_vec(m.dim(v), i));
    } else {
      for (auto& x : nullspace(Matrix::from_rows(m.dim(v), rows))) e.insert(std::move(x));
    }
    s.parts.push_back(std::move(e));
  }
  return subrepresentation(m, s);
}

// ------------------------------------------------------- projective cover

namespace {

std::unique_ptr<CoverData> compute_cover(const Representation& m) {
  auto cd = std::make_unique<CoverData>();
  const AlgebraPtr& alg = m.algebra_ptr();
  const std::size_t nv = m.vertex_count();
  Embedded rad = radical(m);
  for (std::size_t v = 0; v < nv; ++v)
    for (auto f : rad.sub.parts[v].free_columns()) {
      cd->top_vertices.push_back(v);
      cd->top_elements.push_back(m.embed(v, unit_vec(m.dim(v), f)));
    }
  std::vector<Representation> parts;
  for (auto v : cd->top_vertices) parts.push_back(projective_module(alg, v));
  cd->projective = direct_sum(alg, parts).module;

  cd->labels.assign(nv, {});
  for (std::size_t k = 0; k < cd->top_vertices.size(); ++k)
    for (std::size_t t = 0; t < nv; ++t)
      for (auto i : alg->basis_between(cd->top_vertices[k], t)) cd->labels[t].emplace_back(k, i);

  for (std::size_t t = 0; t < nv; ++t) {
    Matrix block(m.dim(t), cd->projective.dim(t));
    for (std::size_t c = 0; c < cd->labels[t].size(); ++c) {
      auto [k, i] = cd->labels[t][c];
      Vec y = m.act(alg->basis_path(i), cd->top_elements[k]);
      Vec local = m.vertex_part(y, t);
      for (std::size_t r = 0; r < local.size(); ++r) block(r, c) = local[r];
    }
    Echelon ker(cd->projective.dim(t));
    if (m.dim(t) == 0) {
      for (std::size_t i = 0; i < cd->projective.dim(t); ++i) ker.insert(unit_vec(cd->projective.dim(t), i));
    } else {
      for (auto& x : nullspace(block)) ker.insert(std::move(x));
    }
    auto sec = right_inverse(block);
    if (!sec) throw Error(ErrorKind::InvalidArgument, "projective cover is not surjective");
    cd->epi.push_back(std::move(block));
    cd->kernel.parts.push_back(std::move(ker));
    cd->section.push_back(std::move(*sec));
  }
  return cd;
}

}  // namespace

const CoverData& Representation::cover_data() const {
  std::call_once(data_->cover_once, [this] { data_->cover = compute_cover(*this); });
  return *data_->cover;
}

ProjectiveCover projective_cover(const Representation& m) {
  const CoverData& cd = m.cover_data();
  return ProjectiveCover{cd.projective, ModuleMap(cd.projective, m, cd.epi), cd.top_vertices, cd.top_elements};
}

Embedded syzygy_embedded(const Representation& m) {
  const CoverData& cd = m.cover_data();
  return subrepresentation(cd.projective, cd.kernel);
}

Representation syzygy(const Representation& m) { return syzygy_embedded(m).module; }

ModuleMap cover_map(const Representation& m, const Representation& target, const std::vector<Vec>& images) {
  require_same_algebra(m, target);
  const CoverData& cd = m.cover_data();
  if (images.size() != cd.top_vertices.size())
    throw Error(ErrorKind::InvalidArgument, "one image per top element expected");
  const Algebra& a = m.algebra();
  std::vector<Matrix> blocks;
  for (std::size_t t = 0; t < m.vertex_count(); ++t) {
    Matrix b(target.dim(t), cd.projective.dim(t));
    for (std::size_t c = 0; c < cd.labels[t].size(); ++c) {
      auto [k, i] = cd.labels[t][c];
      Vec y = target.vertex_part(target.act(a.basis_path(i), images[k]), t);
      for (std::size_t r = 0; r < y.size(); ++r) b(r, c) = y[r];
    }
    blocks.push_back(std::move(b));
  }
  return ModuleMap(cd.projective, target, std::move(blocks));
}

bool is_projective(const Representation& m) { return m.cover_data().kernel.total_dim() == 0; }

// -------------------------------------------------------------- Hom spaces

std::vector<ModuleMap> hom_space_direct(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  const Quiver& q = m.algebra().quiver();
  const std::size_t nv = m.vertex_count();
  std::vector<std::size_t> off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = off[nv];
  if (unknowns == 0) return {};
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return off[v] + r * m.dim(v) + c; };

  std::vector<SparseVec> rows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const Matrix& na = n.arrow(a);
    const Matrix& ma = m.arrow(a);
    std::size_t s = ar.source, t = ar.target;
    // (N_a F_s - F_t M_a)[i][j] = 0
    for (std::size_t i = 0; i < n.dim(t); ++i)
      for (std::size_t j = 0; j < m.dim(s); ++j) {
        SparseVec row;
        for (std::size_t k = 0; k < n.dim(s); ++k)
          if (!na(i, k).is_zero()) row.emplace_back(var(s, k, j), na(i, k));
        for (std::size_t k = 0; k < m.dim(t); ++k)
          if (!ma(k, j).is_zero()) row.emplace_back(var(t, i, k), -ma(k, j));
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  std::vector<ModuleMap> out;
  for (const auto& sol : sparse_nullspace(std::move(rows), unknowns))
    out.push_back(ModuleMap::unflatten(m, n, to_dense(sol, unknowns)));
  return out;
}

std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  if (m.is_zero() || n.is_zero()) return {};
  const Algebra& alg = m.algebra();
  const CoverData& cd = m.cover_data();
  const std::size_t nv = m.vertex_count();
  const std::size_t ngen = cd.top_vertices.size();

  // Unknowns: the images x_k ∈ e_{v_k} N of the cover's generators.
  std::vector<std::size_t> xoff(ngen + 1, 0);
  for (std::size_t k = 0; k < ngen; ++k) xoff[k + 1] = xoff[k] + n.dim(cd.top_vertices[k]);
  const std::size_t unknowns = xoff[ngen];
  if (unknowns == 0) return {};

  std::map<std::size_t, Matrix> path_cache;
  auto path_of = [&](std::size_t i) -> const Matrix& {
    auto it = path_cache.find(i);
    if (it == path_cache.end()) it = path_cache.emplace(i, n.path_matrix(alg.basis_path(i))).first;
    return it->second;
  };

  // Φ(y) = Σ_c y_c N(b_c) x_{k_c} must vanish on the kernel of the cover.
  std::vector<SparseVec> rows;
  for (std::size_t t = 0; t < nv; ++t) {
    if (n.dim(t) == 0) continue;
    for (const auto& y : cd.kernel.parts[t].basis()) {
      std::vector<std::map<std::size_t, Scalar>> eq(n.dim(t));
      for (std::size_t c = 0; c < y.size(); ++c) {
        if (y[c].is_zero()) continue;
        auto [k, i] = cd.labels[t][c];
        const Matrix& nb = path_of(i);
        for (std::size_t r = 0; r < nb.rows(); ++r)
          for (std::size_t s = 0; s < nb.cols(); ++s)
            if (!nb(r, s).is_zero()) eq[r][xoff[k] + s] += y[c] * nb(r, s);
      }
      for (auto& e : eq) {
        SparseVec row;
        for (auto& [col, val] : e)
          if (!val.is_zero()) row.emplace_back(col, val);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }

  std::vector<ModuleMap> out;
  for (const auto& sol : sparse_nullspace(std::move(rows), unknowns)) {
    Vec x = to_dense(sol, unknowns);
    std::vector<Matrix> blocks;
    for (std::size_t t = 0; t < nv; ++t) {
      Matrix phi(n.dim(t), cd.projective.dim(t));
      for (std::size_t c = 0; c < cd.labels[t].size(); ++c) {
        auto [k, i] = cd.labels[t][c];
        const Matrix& nb = path_of(i);
        for (std::size_t r = 0; r < nb.rows(); ++r) {
          Scalar acc(0);
          for (std::size_t s = 0; s < nb.cols(); ++s)
            if (!nb(r, s).is_zero() && !x[xoff[k] + s].is_zero()) acc += nb(r, s) * x[xoff[k] + s];
          phi(r, c) = acc;
        }
      }
      blocks.push_back(phi * cd.section[t]);
    }
    out.emplace_back(m, n, std::move(blocks));
  }
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) { return hom_space(m, n).size(); }

std::string describe(const Representation& m) {
  std::ostringstream os;
  os << "(";
  for (std::size_t v = 0; v < m.vertex_count(); ++v) os << (v ? "," : "") << m.dim(v);
  os << ")";
  return os.str();
}

}  // namespace quiverlab
