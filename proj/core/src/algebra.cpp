#include "quiverlab/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "quiverlab/error.hpp"

namespace quiverlab {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Scalar into_field(const Scalar& c, const Field& f) {
  if (c.modulus() == 0) return f.from_rational(c.rational());
  if (f.characteristic != c.modulus())
    throw Error(ErrorKind::FieldMismatch, "coefficient from F " + std::to_string(c.modulus()) +
                                              " used over " + f.to_string());
  return c;
}

}  // namespace

// ------------------------------------------------------------------ Quiver

std::size_t Quiver::add_vertex(const std::string& name) {
  if (name.empty()) throw Error(ErrorKind::InvalidArgument, "empty vertex name");
  if (has_vertex(name)) throw Error(ErrorKind::InvalidArgument, "duplicate vertex '" + name + "'");
  vertices_.push_back(name);
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& name, std::size_t source, std::size_t target) {
  if (name.empty()) throw Error(ErrorKind::InvalidArgument, "empty arrow name");
  if (source >= vertices_.size() || target >= vertices_.size())
    throw Error(ErrorKind::UnknownVertex, "arrow '" + name + "' has an undeclared endpoint");
  for (const auto& a : arrows_)
    if (a.name == name) throw Error(ErrorKind::InvalidArgument, "duplicate arrow '" + name + "'");
  arrows_.push_back(Arrow{name, source, target});
  return arrows_.size() - 1;
}

bool Quiver::has_vertex(std::string_view name) const {
  return std::find(vertices_.begin(), vertices_.end(), name) != vertices_.end();
}

std::size_t Quiver::vertex_index(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::arrow_index(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  throw Error(ErrorKind::UnknownArrow, "unknown arrow '" + std::string(name) + "'");
}

std::vector<std::size_t> Quiver::arrows_from(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].source == v) out.push_back(i);
  return out;
}

std::vector<std::size_t> Quiver::arrows_into(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].target == v) out.push_back(i);
  return out;
}

bool Quiver::is_source(std::size_t v) const { return arrows_into(v).empty(); }

PathWord Quiver::parse_path(std::string_view text) const {
  std::vector<std::string> factors;
  std::string cur;
  for (char c : text) {
    if (c == '*') {
      factors.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  factors.push_back(trim(cur));

  // Reading order is the reverse of application order.
  std::optional<PathWord> result;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    const std::string& f = *it;
    if (f.empty()) throw Error(ErrorKind::UnknownArrow, "empty factor in path '" + std::string(text) + "'");
    PathWord step;
    if (f.size() > 3 && f.rfind("e[", 0) == 0 && f.back() == ']') {
      step = PathWord::trivial(vertex_index(f.substr(2, f.size() - 3)));
    } else {
      std::size_t a = arrow_index(f);
      step = PathWord{{a}, arrows_[a].source, arrows_[a].target};
    }
    result = result ? compose(step, *result) : step;
  }
  return *result;
}

std::string Quiver::path_string(const PathWord& p) const {
  if (p.is_trivial()) return "e[" + vertices_.at(p.source) + "]";
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += arrows_.at(*it).name;
  }
  return out;
}

PathWord Quiver::compose(const PathWord& p, const PathWord& q) const {
  if (q.target != p.source)
    throw Error(ErrorKind::EndpointMismatch,
                "cannot compose " + path_string(p) + " after " + path_string(q));
  PathWord r{q.arrows, q.source, p.target};
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  return r;
}

// ----------------------------------------------------------------- Algebra

std::vector<std::size_t> Algebra::basis_between(std::size_t source, std::size_t target) const {
  std::vector<std::size_t> out;
  for (auto i : from_.at(source))
    if (basis_[i].target == target) out.push_back(i);
  return out;
}

std::vector<std::size_t> Algebra::degree_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& p : basis_) {
    if (out.size() <= p.length()) out.resize(p.length() + 1, 0);
    ++out[p.length()];
  }
  return out;
}

std::optional<std::size_t> Algebra::basis_index(const PathWord& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vec Algebra::left_multiply(const PathWord& p, Vec x) const {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (basis_[i].target != p.source) x[i] = Scalar(0);
  for (auto a : p.arrows) {
    Vec y(dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& [j, c] : arrow_times_[a][i]) y[j] += x[i] * c;
    }
    x = std::move(y);
  }
  return x;
}

Vec Algebra::to_vec(const AlgebraElement& x) const { return to_dense(x.terms, dim()); }

AlgebraElement Algebra::from_vec(const Vec& v) const { return AlgebraElement{to_sparse(v)}; }

AlgebraElement Algebra::path(const PathWord& p) const {
  if (p.source >= quiver_.vertex_count() || p.target >= quiver_.vertex_count())
    throw Error(ErrorKind::UnknownVertex, "path endpoint out of range");
  for (auto a : p.arrows)
    if (a >= quiver_.arrow_count()) throw Error(ErrorKind::UnknownArrow, "arrow index out of range");
  return from_vec(left_multiply(p, unit_vec(dim(), trivial_[p.source])));
}

AlgebraElement Algebra::normal_form(const PathCombination& x) const {
  Vec acc(dim());
  for (const auto& [c, p] : x) axpy(acc, into_field(c, field_), to_vec(path(p)));
  return from_vec(acc);
}

AlgebraElement Algebra::idempotent(std::size_t vertex) const {
  return AlgebraElement{{{trivial_.at(vertex), field_.one()}}};
}

AlgebraElement Algebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  Vec yv = to_vec(y);
  Vec acc(dim());
  for (const auto& [i, c] : x.terms) axpy(acc, c, left_multiply(basis_[i], yv));
  return from_vec(acc);
}

AlgebraElement Algebra::add(const AlgebraElement& x, const AlgebraElement& y, const Scalar& c) const {
  Vec v = to_vec(x);
  axpy(v, c, to_vec(y));
  return from_vec(v);
}

AlgebraElement Algebra::scale(const AlgebraElement& x, const Scalar& c) const {
  if (c.is_zero()) return {};
  AlgebraElement out = x;
  for (auto& [i, s] : out.terms) s *= c;
  return out;
}

AlgebraElement Algebra::corner(const AlgebraElement& x, std::size_t target, std::size_t source) const {
  AlgebraElement out;
  for (const auto& t : x.terms)
    if (basis_[t.first].source == source && basis_[t.first].target == target) out.terms.push_back(t);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> Algebra::endpoints(const AlgebraElement& x) const {
  if (x.is_zero()) return std::nullopt;
  const PathWord& first = basis_[x.terms.front().first];
  for (const auto& [i, c] : x.terms)
    if (basis_[i].source != first.source || basis_[i].target != first.target) return std::nullopt;
  return std::make_pair(first.source, first.target);
}

std::string Algebra::to_string(const AlgebraElement& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [i, c] : x.terms) {
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (coeff != "1") out += coeff + "*";
    out += quiver_.path_string(basis_[i]);
  }
  return out;
}

Echelon Algebra::left_ideal(const std::vector<AlgebraElement>& gens) const {
  Echelon span(dim());
  std::vector<Vec> work;
  for (const auto& g : gens)
    for (std::size_t t = 0; t < quiver_.vertex_count(); ++t)
      work.push_back(left_multiply(PathWord::trivial(t), to_vec(g)));
  while (!work.empty()) {
    Vec v = std::move(work.back());
    work.pop_back();
    if (!span.insert(v)) continue;
    for (std::size_t a = 0; a < quiver_.arrow_count(); ++a) {
      PathWord step{{a}, quiver_.arrow(a).source, quiver_.arrow(a).target};
      Vec w = left_multiply(step, v);
      if (!is_zero(w)) work.push_back(std::move(w));
    }
  }
  return span;
}

// ------------------------------------------------------------ construction

namespace {

struct Degree {
  std::vector<PathWord> paths;
  std::map<std::vector<std::size_t>, std::size_t> index;
  Echelon ideal;
  std::vector<long> basis_of;  // path index -> global basis index, or -1
};

}  // namespace

AlgebraPtr build_algebra(Quiver quiver, std::vector<PathCombination> relations, std::size_t max_len,
                         Field field) {
  if (max_len == 0) throw Error(ErrorKind::InvalidArgument, "maxlen must be positive");
  std::shared_ptr<Algebra> alg(new Algebra());
  alg->field_ = field;
  alg->max_len_ = max_len;

  // Normalize relations: merge equal paths, drop zero terms, check homogeneity.
  std::vector<std::pair<std::size_t, PathCombination>> by_degree;
  for (auto& rel : relations) {
    std::map<PathWord, Scalar> merged;
    for (auto& [c, p] : rel) {
      for (auto a : p.arrows)
        if (a >= quiver.arrow_count()) throw Error(ErrorKind::UnknownArrow, "relation uses an unknown arrow");
      merged[p] += into_field(c, field);
    }
    PathCombination clean;
    for (auto& [p, c] : merged)
      if (!c.is_zero()) clean.emplace_back(c, p);
    if (clean.empty()) continue;
    const PathWord& first = clean.front().second;
    for (const auto& [c, p] : clean) {
      if (p.length() != first.length())
        throw Error(ErrorKind::InhomogeneousRelation,
                    "relation mixes paths of lengths " + std::to_string(first.length()) + " and " +
                        std::to_string(p.length()));
      if (p.source != first.source || p.target != first.target)
        throw Error(ErrorKind::EndpointMismatch, "relation terms " + quiver.path_string(first) + " and " +
                                                     quiver.path_string(p) + " have different endpoints");
    }
    if (first.length() < 2)
      throw Error(ErrorKind::NonAdmissible, "relation " + quiver.path_string(first) + " has length below 2");
    if (clean.size() > 1) alg->monomial_ = false;
    by_degree.emplace_back(first.length(), clean);
    alg->relations_.push_back(std::move(clean));
  }

  const std::size_t nv = quiver.vertex_count();
  const std::size_t na = quiver.arrow_count();
  alg->from_.assign(nv, {});
  alg->trivial_.assign(nv, 0);

  Degree prev;
  prev.ideal = Echelon(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    prev.paths.push_back(PathWord::trivial(v));
    prev.basis_of.push_back(static_cast<long>(v));
    alg->trivial_[v] = v;
    alg->basis_.push_back(PathWord::trivial(v));
  }

  // Products arrow * (basis element of degree d-1) in normal form.
  std::vector<std::vector<SparseVec>> products(na);
  std::size_t top_degree = 0;

  for (std::size_t d = 1; d <= max_len; ++d) {
    Degree cur;
    for (const auto& p : prev.paths)
      for (auto a : quiver.arrows_from(p.target)) {
        PathWord q{p.arrows, p.source, quiver.arrow(a).target};
        q.arrows.push_back(a);
        cur.index[q.arrows] = cur.paths.size();
        cur.paths.push_back(std::move(q));
      }
    const std::size_t n = cur.paths.size();
    cur.ideal = Echelon(n);

    for (const auto& [deg, rel] : by_degree) {
      if (deg != d) continue;
      Vec v(n);
      for (const auto& [c, p] : rel) v[cur.index.at(p.arrows)] += c;
      cur.ideal.insert(std::move(v));
    }
    // Degree-d slice of the two-sided ideal: R_d + J I_{d-1} + I_{d-1} J.
    for (const auto& row : prev.ideal.basis()) {
      for (std::size_t a = 0; a < na; ++a) {
        Vec left(n), right(n);
        bool any_left = false, any_right = false;
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (row[k].is_zero()) continue;
          const PathWord& w = prev.paths[k];
          if (quiver.arrow(a).source == w.target) {
            auto key = w.arrows;
            key.push_back(a);
            left[cur.index.at(key)] += row[k];
            any_left = true;
          }
          if (quiver.arrow(a).target == w.source) {
            std::vector<std::size_t> key{a};
            key.insert(key.end(), w.arrows.begin(), w.arrows.end());
            right[cur.index.at(key)] += row[k];
            any_right = true;
          }
        }
        if (any_left) cur.ideal.insert(std::move(left));
        if (any_right) cur.ideal.insert(std::move(right));
      }
    }

    cur.basis_of.assign(n, -1);
    for (auto c : cur.ideal.free_columns()) {
      cur.basis_of[c] = static_cast<long>(alg->basis_.size());
      alg->basis_.push_back(cur.paths[c]);
    }
    if (d == max_len && cur.ideal.rank() < n)
      throw Error(ErrorKind::NonAdmissible,
                  "path " + quiver.path_string(cur.paths[cur.ideal.free_columns().front()]) +
                      " of length maxlen = " + std::to_string(max_len) + " is not in the ideal");

    // Normal form of a degree-d path: itself if free, else minus the
    // free part of its pivot row.
    std::vector<std::size_t> pivot_row(n, SIZE_MAX);
    for (std::size_t r = 0; r < cur.ideal.rank(); ++r) pivot_row[cur.ideal.pivots()[r]] = r;
    auto nf = [&](std::size_t k) {
      SparseVec out;
      if (cur.basis_of[k] >= 0) {
        out.emplace_back(static_cast<std::size_t>(cur.basis_of[k]), field.one());
        return out;
      }
      const Vec& row = cur.ideal.basis()[pivot_row[k]];
      for (std::size_t c = 0; c < n; ++c)
        if (!row[c].is_zero() && cur.basis_of[c] >= 0)
          out.emplace_back(static_cast<std::size_t>(cur.basis_of[c]), -row[c]);
      std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      return out;
    };

    for (std::size_t k = 0; k < prev.paths.size(); ++k) {
      if (prev.basis_of[k] < 0) continue;
      std::size_t b = static_cast<std::size_t>(prev.basis_of[k]);
      for (auto a : quiver.arrows_from(prev.paths[k].target)) {
        auto key = prev.paths[k].arrows;
        key.push_back(a);
        if (products[a].size() <= b) products[a].resize(b + 1);
        products[a][b] = nf(cur.index.at(key));
      }
    }

    if (cur.ideal.rank() < n) top_degree = d;
    prev = std::move(cur);
    if (prev.ideal.rank() == prev.paths.size()) break;  // every longer path lies in I
  }

  alg->loewy_length_ = top_degree + 1;
  const std::size_t dim = alg->basis_.size();
  alg->arrow_times_.assign(na, std::vector<SparseVec>(dim));
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < products[a].size() && b < dim; ++b) alg->arrow_times_[a][b] = products[a][b];
  for (std::size_t i = 0; i < dim; ++i) {
    alg->index_[alg->basis_[i]] = i;
    alg->from_[alg->basis_[i].source].push_back(i);
  }
  alg->quiver_ = std::move(quiver);
  return alg;
}

LeftIdeal left_ideal_dimension(const Algebra& a, const std::vector<AlgebraElement>& gens) {
  Echelon e = a.left_ideal(gens);
  return LeftIdeal{e.rank(), std::move(e)};
}

LeftIdeal left_ideal_intersection(const Algebra& a, const std::vector<AlgebraElement>& x,
                                  const std::vector<AlgebraElement>& y) {
  Echelon e = intersect(a.left_ideal(x), a.left_ideal(y));
  return LeftIdeal{e.rank(), std::move(e)};
}

}  // namespace quiverlab
