#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "quiverlab/algebra.hpp"
#include "quiverlab/linalg.hpp"

namespace quiverlab {

struct CoverData;

/// A finite dimensional left module, given as a representation of the
/// quiver: one vector space per vertex, one matrix (target x source) per
/// arrow. Copies share their data.
///
/// Elements are addressed by global coordinates: the blocks of the vertices
/// in vertex order.
class Representation {
 public:
  Representation() = default;
  /// Validates shapes and every relation of the algebra unless told not to.
  Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> arrows,
                 bool validate = true);
  static Representation zero(AlgebraPtr alg);

  const AlgebraPtr& algebra_ptr() const noexcept { return alg_; }
  const Algebra& algebra() const { return *alg_; }
  std::size_t vertex_count() const noexcept { return dims().size(); }
  const std::vector<std::size_t>& dims() const noexcept;
  std::size_t dim(std::size_t v) const { return dims()[v]; }
  std::size_t total_dim() const noexcept;
  std::size_t offset(std::size_t v) const;
  bool is_zero() const noexcept { return total_dim() == 0; }

  const Matrix& arrow(std::size_t a) const;
  const std::vector<Matrix>& arrows() const;
  /// Matrix of a path (dims[target] x dims[source]).
  Matrix path_matrix(const PathWord& p) const;
  /// Matrix of x restricted to e_source M -> e_target M.
  Matrix element_matrix(const AlgebraElement& x, std::size_t target, std::size_t source) const;

  /// x * m for global coordinates m.
  Vec act(const AlgebraElement& x, const Vec& m) const;
  Vec act(const PathWord& p, const Vec& m) const;
  Vec vertex_part(const Vec& m, std::size_t v) const;
  Vec embed(std::size_t v, const Vec& local) const;

  /// Throws Error(InvalidArgument) naming the first violated relation.
  void validate() const;

  bool same_algebra(const Representation& other) const { return alg_ == other.alg_; }
  friend bool operator==(const Representation& a, const Representation& b);

  // Lazily computed projective presentation, shared by copies.
  const CoverData& cover_data() const;

 private:
  struct Data;
  AlgebraPtr alg_;
  std::shared_ptr<Data> data_;
};

/// A module homomorphism: one matrix per vertex.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(Representation source, Representation target, std::vector<Matrix> blocks);
  static ModuleMap zero(const Representation& source, const Representation& target);
  static ModuleMap identity(const Representation& m);
  /// Inverse of flatten(): blocks row-major, vertex by vertex.
  static ModuleMap unflatten(const Representation& source, const Representation& target, const Vec& v);

  const Representation& source() const noexcept { return source_; }
  const Representation& target() const noexcept { return target_; }
  const Matrix& block(std::size_t v) const { return blocks_.at(v); }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }

  Vec apply(const Vec& m) const;
  Vec flatten() const;
  bool is_zero() const;
  bool is_homomorphism() const;
  std::size_t rank() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;

  ModuleMap operator+(const ModuleMap& rhs) const;
  ModuleMap operator-(const ModuleMap& rhs) const;
  ModuleMap scaled(const Scalar& s) const;
  friend bool operator==(const ModuleMap& a, const ModuleMap& b);

 private:
  Representation source_;
  Representation target_;
  std::vector<Matrix> blocks_;
};

/// g ∘ f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
/// Σ c_i maps_i over a common source and target.
ModuleMap combine(const std::vector<ModuleMap>& maps, const Vec& coeffs, const Representation& source,
                  const Representation& target);

/// Vertex-graded subspace of a representation.
struct Submodule {
  std::vector<Echelon> parts;

  std::size_t total_dim() const;
  std::vector<std::size_t> dims() const;
  bool contains(const Representation& m, const Vec& x) const;
};

Submodule zero_submodule(const Representation& m);
Submodule full_submodule(const Representation& m);
/// Smallest submodule containing the given elements (global coordinates).
Submodule generated_submodule(const Representation& m, const std::vector<Vec>& gens);
bool is_submodule(const Representation& m, const Submodule& s);
Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersection(const Submodule& a, const Submodule& b);

struct Embedded {
  Representation module;
  ModuleMap inclusion;
  Submodule sub;
};

struct Quotient {
  Representation module;
  ModuleMap projection;
};

struct ImageResult {
  Representation module;
  ModuleMap inclusion;
  ModuleMap corestriction;
  Submodule sub;
};

/// The submodule as a representation in its own right (basis: the echelon rows).
Embedded subrepresentation(const Representation& m, const Submodule& s);
/// Coordinates of an element of s in the basis used by subrepresentation().
Vec sub_coordinates(const Representation& m, const Submodule& s, const Vec& x);
/// Throws NotASubmodule if s is not arrow-stable.
Quotient quotient(const Representation& m, const Submodule& s);
Embedded kernel(const ModuleMap& f);
ImageResult image(const ModuleMap& f);

Representation projective_module(const AlgebraPtr& alg, std::size_t vertex);
/// Global coordinate, inside Λe_vertex, of the basis path with the given index.
std::size_t projective_coordinate(const Algebra& alg, std::size_t vertex, std::size_t basis_index);
/// The element x ∈ Λe_vertex in the coordinates of projective_module().
Vec projective_vector(const Algebra& alg, std::size_t vertex, const AlgebraElement& x);
Representation simple_module(const AlgebraPtr& alg, std::size_t vertex);

struct DirectSum {
  Representation module;
  std::vector<ModuleMap> inclusions;
  std::vector<ModuleMap> projections;
};

DirectSum direct_sum(const AlgebraPtr& alg, const std::vector<Representation>& summands);
/// [g_1 ... g_k]: ⊕ X_i -> Y.
ModuleMap from_sum(const DirectSum& s, const std::vector<ModuleMap>& components, const Representation& target);
/// (g_1, ..., g_k)^T: Y -> ⊕ X_i.
ModuleMap to_sum(const DirectSum& s, const std::vector<ModuleMap>& components, const Representation& source);
std::vector<std::size_t> composition_multiplicities(const Representation& m);

/// An element of ⊕_k Λe_{v_k}: component k must lie in Λe_{v_k}.
using FreeElement = std::vector<AlgebraElement>;

struct PresentedModule {
  std::vector<std::size_t> generators;
  std::vector<FreeElement> relators;
  Representation free;
  Representation module;
  ModuleMap projection;
  Submodule relations;

  /// Image of the k-th generator b_k in the module.
  Vec generator(std::size_t k) const;
};

/// Global coordinates of a free element in ⊕ Λe_{v_k}; throws MalformedRelator
/// when a component has the wrong source vertex.
Vec free_vector(const Algebra& alg, const std::vector<std::size_t>& gens, const FreeElement& x);
PresentedModule presented_module(const AlgebraPtr& alg, std::vector<std::size_t> gens,
                                 std::vector<FreeElement> relators);

/// Basis of Hom(M, N).
std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n);
/// Same space, by solving the intertwining equations directly.
std::vector<ModuleMap> hom_space_direct(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

/// JM.
Embedded radical(const Representation& m);
/// dim e_i(M/JM) for every vertex.
std::vector<std::size_t> top(const Representation& m);
Embedded socle(const Representation& m);

struct ProjectiveCover {
  Representation projective;
  ModuleMap epi;
  std::vector<std::size_t> top_vertices;  // one projective summand per top element
  std::vector<Vec> top_elements;          // images of the summands' generators
};

ProjectiveCover projective_cover(const Representation& m);
Embedded syzygy_embedded(const Representation& m);
Representation syzygy(const Representation& m);
/// The map from the projective cover of m to `target` sending the k-th
/// summand's generator to images[k] (which should lie at its top vertex).
ModuleMap cover_map(const Representation& m, const Representation& target, const std::vector<Vec>& images);
bool is_projective(const Representation& m);

/// Data attached to every representation on first use. It must not refer
/// back to the representation itself, so the epi is kept as bare blocks.
struct CoverData {
  Representation projective;
  std::vector<Matrix> epi;
  std::vector<std::size_t> top_vertices;
  std::vector<Vec> top_elements;
  Submodule kernel;             // of the epi, inside the projective
  std::vector<Matrix> section;  // per vertex, a right inverse of the epi block
  // For each vertex, the (summand, basis path) behind each local coordinate.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> labels;
};

std::string describe(const Representation& m);

}  // namespace quiverlab
