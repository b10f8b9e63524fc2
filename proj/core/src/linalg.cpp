#include "quiverlab/linalg.hpp"

#include <algorithm>
#include <map>

#include "quiverlab/error.hpp"

namespace quiverlab {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
  Vec out(n);
  for (const auto& [i, s] : v) out[i] = s;
  return out;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

// ------------------------------------------------------------------ Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw Error(ErrorKind::InvalidArgument, "matrix product with mismatched shapes");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size())
    throw Error(ErrorKind::InvalidArgument, "matrix-vector product with mismatched shapes");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero() && !v[k].is_zero()) out[i] += a * v[k];
    }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::InvalidArgument, "matrix sum with mismatched shapes");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!rhs.data_[i].is_zero()) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::InvalidArgument, "matrix difference with mismatched shapes");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!rhs.data_[i].is_zero()) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.data_)
    if (!x.is_zero()) x *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ----------------------------------------------------------------- Echelon

Echelon Echelon::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  Echelon e(ambient);
  for (const auto& v : vectors) e.insert(v);
  return e;
}

Vec Echelon::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    if (!c.is_zero()) axpy(v, -c, rows_[i]);
  }
  return v;
}

bool Echelon::insert(Vec v) {
  if (v.size() != ambient_) throw Error(ErrorKind::InvalidArgument, "vector length differs from ambient dimension");
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  if (p == v.size()) return false;
  Scalar inv = v[p].inverse();
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  for (auto& row : rows_) {
    Scalar c = row[p];
    if (!c.is_zero()) axpy(row, -c, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool Echelon::contains(const Vec& v) const { return is_zero(reduce(v)); }

Vec Echelon::coordinates(const Vec& v) const {
  Vec out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = v[pivots_[i]];
  return out;
}

std::vector<std::size_t> Echelon::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

bool Echelon::contains_all(const Echelon& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const Vec& v) { return contains(v); });
}

Echelon intersect(const Echelon& a, const Echelon& b) {
  std::size_t n = a.ambient();
  Echelon out(n);
  if (a.rank() == 0 || b.rank() == 0) return out;
  std::vector<Vec> cols = a.basis();
  for (const auto& v : b.basis()) cols.push_back(v);
  for (const auto& x : nullspace(Matrix::from_columns(n, cols))) {
    Vec w(n);
    for (std::size_t i = 0; i < a.rank(); ++i) axpy(w, x[i], a.basis()[i]);
    out.insert(std::move(w));
  }
  return out;
}

Echelon sum(const Echelon& a, const Echelon& b) {
  Echelon out = a;
  for (const auto& v : b.basis()) out.insert(v);
  return out;
}

// ------------------------------------------------------- dense elimination

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix w = m;
  return rref(w).size();
}

std::vector<Vec> nullspace(const Matrix& m) {
  Matrix w = m;
  auto pivots = rref(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec x(m.cols());
    x[f] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -w(i, f);
    out.push_back(std::move(x));
  }
  return out;
}

Echelon column_space(const Matrix& m) {
  Echelon e(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) e.insert(m.column(c));
  return e;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::optional<Matrix> right_inverse(const Matrix& m) {
  Matrix r(m.cols(), m.rows());
  if (m.rows() == 0) return r;
  // Invert on a maximal set of independent columns.
  Echelon cols(m.rows());
  std::vector<std::size_t> chosen;
  std::vector<Vec> picked;
  for (std::size_t c = 0; c < m.cols() && cols.rank() < m.rows(); ++c) {
    Vec col = m.column(c);
    if (cols.insert(col)) {
      chosen.push_back(c);
      picked.push_back(std::move(col));
    }
  }
  if (chosen.size() < m.rows()) return std::nullopt;
  auto inv = inverse(Matrix::from_columns(m.rows(), picked));
  if (!inv) return std::nullopt;
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) r(chosen[i], j) = (*inv)(i, j);
  return r;
}

// ------------------------------------------------------ sparse elimination

std::vector<SparseVec> sparse_nullspace(std::vector<SparseVec> rows, std::size_t ncols) {
  // Semi-echelon form: each stored row starts at its pivot with entry 1, and
  // only holds columns to the right of it.
  std::map<std::size_t, SparseVec> pivot_rows;
  for (auto& input : rows) {
    std::map<std::size_t, Scalar> acc;
    for (auto& [c, s] : input)
      if (!s.is_zero()) acc[c] += s;
    while (!acc.empty()) {
      auto it = acc.begin();
      if (it->second.is_zero()) {
        acc.erase(it);
        continue;
      }
      auto pr = pivot_rows.find(it->first);
      if (pr == pivot_rows.end()) break;
      Scalar f = it->second;
      acc.erase(it);
      for (std::size_t k = 1; k < pr->second.size(); ++k) {
        const auto& [c, s] = pr->second[k];
        auto [slot, inserted] = acc.try_emplace(c, Scalar(0));
        slot->second -= f * s;
        if (slot->second.is_zero()) acc.erase(slot);
      }
    }
    if (acc.empty()) continue;
    Scalar inv = acc.begin()->second.inverse();
    SparseVec row;
    row.reserve(acc.size());
    for (auto& [c, s] : acc) row.emplace_back(c, s * inv);
    std::size_t p = row.front().first;
    pivot_rows.emplace(p, std::move(row));
  }

  std::vector<SparseVec> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (pivot_rows.count(f)) continue;
    // Back-substitute with x_f = 1 and every other free variable 0.
    std::map<std::size_t, Scalar> x;
    x.emplace(f, Scalar(1));
    for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
      if (it->first > f) continue;
      Scalar v(0);
      for (std::size_t k = 1; k < it->second.size(); ++k) {
        auto xi = x.find(it->second[k].first);
        if (xi != x.end()) v -= it->second[k].second * xi->second;
      }
      if (!v.is_zero()) x.emplace(it->first, v);
    }
    SparseVec sol(x.begin(), x.end());
    out.push_back(std::move(sol));
  }
  return out;
}

}  // namespace quiverlab
