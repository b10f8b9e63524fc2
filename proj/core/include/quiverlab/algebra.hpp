#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quiverlab/linalg.hpp"
#include "quiverlab/scalar.hpp"

namespace quiverlab {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A path, stored in application order: arrows.front() acts first.
/// The empty word is the trivial path at `source` (== `target`).
struct PathWord {
  std::vector<std::size_t> arrows;
  std::size_t source = 0;
  std::size_t target = 0;

  static PathWord trivial(std::size_t vertex) { return PathWord{{}, vertex, vertex}; }
  bool is_trivial() const noexcept { return arrows.empty(); }
  std::size_t length() const noexcept { return arrows.size(); }

  friend bool operator==(const PathWord&, const PathWord&) = default;
  friend auto operator<=>(const PathWord&, const PathWord&) = default;
};

class Quiver {
 public:
  std::size_t add_vertex(const std::string& name);
  std::size_t add_arrow(const std::string& name, std::size_t source, std::size_t target);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  std::size_t vertex_index(std::string_view name) const;  // throws UnknownVertex
  std::size_t arrow_index(std::string_view name) const;   // throws UnknownArrow
  bool has_vertex(std::string_view name) const;

  std::vector<std::size_t> arrows_from(std::size_t v) const;
  std::vector<std::size_t> arrows_into(std::size_t v) const;
  /// No arrow ends at v.
  bool is_source(std::size_t v) const;

  /// `p*q` (q first, then p) as a path; `e[v]` is the trivial path at v.
  PathWord parse_path(std::string_view text) const;
  std::string path_string(const PathWord& p) const;
  /// p*q: apply q first. Throws EndpointMismatch when not composable.
  PathWord compose(const PathWord& p, const PathWord& q) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A formal linear combination of paths, before reduction.
using PathCombination = std::vector<std::pair<Scalar, PathWord>>;

/// Element of the algebra in normal form: coordinates over the residue basis.
struct AlgebraElement {
  SparseVec terms;

  bool is_zero() const noexcept { return terms.empty(); }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// Λ = KΓ/I for a length-homogeneous ideal I, realized by a basis of
/// residue paths and the action of each arrow on that basis.
class Algebra {
 public:
  std::size_t dim() const noexcept { return basis_.size(); }
  const Quiver& quiver() const noexcept { return quiver_; }
  const Field& field() const noexcept { return field_; }
  std::size_t max_len() const noexcept { return max_len_; }
  /// Least N with J^N = 0.
  std::size_t loewy_length() const noexcept { return loewy_length_; }
  bool is_monomial() const noexcept { return monomial_; }
  const std::vector<PathCombination>& relations() const noexcept { return relations_; }

  const PathWord& basis_path(std::size_t i) const { return basis_.at(i); }
  const std::vector<PathWord>& basis() const noexcept { return basis_; }
  std::size_t trivial_index(std::size_t vertex) const { return trivial_.at(vertex); }
  /// Basis indices of paths starting at `vertex`, i.e. a basis of Λe_vertex.
  const std::vector<std::size_t>& basis_from(std::size_t vertex) const { return from_.at(vertex); }
  std::vector<std::size_t> basis_between(std::size_t source, std::size_t target) const;
  std::vector<std::size_t> degree_sizes() const;
  /// Index of a path if it is itself a basis element.
  std::optional<std::size_t> basis_index(const PathWord& p) const;

  /// arrow * basis element, in normal form.
  const SparseVec& arrow_times(std::size_t arrow, std::size_t basis_index) const {
    return arrow_times_[arrow][basis_index];
  }

  AlgebraElement normal_form(const PathCombination& x) const;
  AlgebraElement path(const PathWord& p) const;
  AlgebraElement path(std::string_view text) const { return path(quiver_.parse_path(text)); }
  AlgebraElement idempotent(std::size_t vertex) const;
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y, const Scalar& c = Scalar(1)) const;
  AlgebraElement scale(const AlgebraElement& x, const Scalar& c) const;
  /// Applies the path p (as left multiplication) to a vector of basis coordinates.
  Vec left_multiply(const PathWord& p, Vec x) const;
  Vec to_vec(const AlgebraElement& x) const;
  AlgebraElement from_vec(const Vec& v) const;
  /// e_t x e_s; the element lies in that corner.
  AlgebraElement corner(const AlgebraElement& x, std::size_t target, std::size_t source) const;
  /// The unique (source, target) pair of a nonzero element, if homogeneous.
  std::optional<std::pair<std::size_t, std::size_t>> endpoints(const AlgebraElement& x) const;
  std::string to_string(const AlgebraElement& x) const;

  /// Left ideal Σ Λ g as a subspace of Λ (basis coordinates).
  Echelon left_ideal(const std::vector<AlgebraElement>& gens) const;

  friend std::shared_ptr<const Algebra> build_algebra(Quiver quiver, std::vector<PathCombination> relations,
                                                      std::size_t max_len, Field field);

 private:
  Algebra() = default;

  Quiver quiver_;
  Field field_;
  std::size_t max_len_ = 0;
  std::size_t loewy_length_ = 0;
  bool monomial_ = true;
  std::vector<PathCombination> relations_;

  std::vector<PathWord> basis_;
  std::map<PathWord, std::size_t> index_;
  std::vector<std::size_t> trivial_;
  std::vector<std::vector<std::size_t>> from_;
  std::vector<std::vector<SparseVec>> arrow_times_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Builds KΓ/I degree by degree. Throws InhomogeneousRelation,
/// EndpointMismatch, or NonAdmissible (if some path of length max_len
/// survives).
AlgebraPtr build_algebra(Quiver quiver, std::vector<PathCombination> relations, std::size_t max_len,
                         Field field = Field::rationals());

struct LeftIdeal {
  std::size_t dimension = 0;
  Echelon basis;
};

LeftIdeal left_ideal_dimension(const Algebra& a, const std::vector<AlgebraElement>& gens);
LeftIdeal left_ideal_intersection(const Algebra& a, const std::vector<AlgebraElement>& x,
                                  const std::vector<AlgebraElement>& y);

}  // namespace quiverlab
