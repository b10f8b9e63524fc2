#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "quiverlab/scalar.hpp"

namespace quiverlab {

using Vec = std::vector<Scalar>;

/// Sparse vector: strictly increasing indices, nonzero values.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a*x

/// Dense row-major matrix over exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  std::vector<Vec> columns() const;
  bool is_zero() const;
  Matrix transpose() const;

  Matrix operator*(const Matrix& rhs) const;
  Vec operator*(const Vec& v) const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix operator+(const Matrix& rhs) const { Matrix m = *this; return m += rhs; }
  Matrix operator-(const Matrix& rhs) const { Matrix m = *this; return m -= rhs; }
  Matrix scaled(const Scalar& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon basis of a subspace of K^n, maintained incrementally.
/// Rows are normalized (pivot entry 1) and every pivot column is zero in all
/// other rows, so the coordinates of a member vector are its pivot entries.
class Echelon {
 public:
  Echelon() = default;
  explicit Echelon(std::size_t ambient) : ambient_(ambient) {}
  static Echelon span(std::size_t ambient, const std::vector<Vec>& vectors);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Vec>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Adds v to the spanning set; returns true when the rank grew.
  bool insert(Vec v);
  /// Remainder of v modulo the subspace; zero exactly when v is a member.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Coefficients of a member vector with respect to basis().
  Vec coordinates(const Vec& v) const;
  std::vector<std::size_t> free_columns() const;
  bool contains_all(const Echelon& other) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

Echelon intersect(const Echelon& a, const Echelon& b);
Echelon sum(const Echelon& a, const Echelon& b);

std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);
Echelon column_space(const Matrix& m);
/// Some x with m x = b, if one exists.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
/// Some r with m r = 1, when m has full row rank.
std::optional<Matrix> right_inverse(const Matrix& m);

/// Basis of the solution space of a sparse homogeneous system.
std::vector<SparseVec> sparse_nullspace(std::vector<SparseVec> rows, std::size_t ncols);

}  // namespace quiverlab
