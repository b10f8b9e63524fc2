#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quiverlab/approximation.hpp"

namespace quiverlab {

/// N_n = (⊕_{i=1}^n Λb_i) / Σ Λ(p b_i - q b_{i+1}) with every b_i of type
/// e_{s(p)}. Throws EndpointMismatch unless p and q are nonzero elements of
/// J with a common source vertex.
PresentedModule build_Nn(const AlgebraPtr& alg, const AlgebraElement& p, const AlgebraElement& q, std::size_t n);

/// Λ(p, q) ⊆ Λe ⊕ Λe, the cyclic module generated by (p, q).
Embedded pair_module(const AlgebraPtr& alg, const AlgebraElement& p, const AlgebraElement& q);

struct NnReport {
  std::size_t n = 0;
  bool intersection_zero = false;   // Λp ∩ Λq = 0
  bool kernel_is_direct = false;    // ker π = ⊕ Λ(p b_i - q b_{i+1})
  bool summands_isomorphic = false; // each summand ≅ Λ(p, q)
  PdimVerdict pdim_pair;
  PdimVerdict pdim_module;
  bool pdim_consistent = false;     // pdim Λ(p,q) finite ⇒ pdim N_n finite
  bool dimension_law = false;       // dim N_n = n dim Λe - (n-1) dim Λ(p,q)
  std::size_t module_dim = 0;

  bool passed() const {
    return intersection_zero && kernel_is_direct && summands_isomorphic && pdim_consistent && dimension_law;
  }
};

/// Failed checks are reported, never thrown.
NnReport verify_Nn_syzygy_split(const AlgebraPtr& alg, const AlgebraElement& p, const AlgebraElement& q,
                                std::size_t n, const PdimOptions& opts = {});

/// Vertices e_1..e_m and elements p_i = p_i e_i, q_i = q_i e_i of J.
struct ZipperSpec {
  std::vector<std::size_t> vertices;
  std::vector<AlgebraElement> p;
  std::vector<AlgebraElement> q;

  std::size_t m() const noexcept { return vertices.size(); }
  /// The first violated alignment condition, if any. Besides the idempotent
  /// conditions, p_{r(i)} and q_{r(i+1)} must end at a common vertex.
  std::optional<std::string> alignment_error(const Algebra& a) const;
};

/// Generators x_1..x_{mn} of types e_{r(i)} modulo p_{r(i)} x_i - q_{r(i+1)} x_{i+1}.
/// Throws EndpointMismatch when the zipper is not aligned.
PresentedModule build_zipper(const AlgebraPtr& alg, const ZipperSpec& spec, std::size_t n);

enum class RankSearch { Exhaustive, Randomized };
const char* to_string(RankSearch m);

struct TowerStage {
  std::size_t index = 0;  // n of A_n
  ApproxCertificate approx;
  /// g_{n,n+1}: A_n -> A_{n+1} with f_n = f_{n+1} g; set once the next stage exists.
  std::optional<ModuleMap> to_next;
  std::optional<PdimVerdict> pdim;
};

struct UTracker {
  std::size_t stage = 0;        // 2n
  std::size_t dim = 0;          // dim U_{2n}
  Embedded module;              // U_{2n} ⊆ A_{2n}
  RankSearch mode = RankSearch::Exhaustive;
  std::size_t parameters = 0;   // dimension of the affine space searched
  /// U_{2n} maps isomorphically into the last stage built.
  std::optional<bool> stable;
};

struct PhantomTower {
  Representation target;
  std::vector<std::string> family_labels;  // D_1, D_2, ... as used
  std::vector<TowerStage> stages;          // A_1, A_2, ...
  std::vector<UTracker> u;
  bool budget_exhausted = false;
  std::string stop_reason;

  /// f_n = f_{n+1} ∘ g_{n,n+1} for every recorded link.
  bool coherent() const;
};

struct TowerOptions {
  std::size_t budget = 4;           // number of (odd, even) stage pairs
  std::size_t exhaustive_limit = 12;  // parameters searched over the {0,1} box
  std::size_t descent_rounds = 200;
  std::size_t max_stage_dim = 400;  // larger stages stop the tower
  std::vector<FamilyMember> ambient;  // members added to every odd stage
  bool verify_pdims = true;
  std::uint64_t seed = default_seed();
};

PhantomTower phantom_tower(const Representation& x, const FamilyGenerator& d, const TowerOptions& opts = {});

struct TowerReport {
  std::vector<std::size_t> stage_dims;
  std::vector<std::size_t> u_dims;
  bool coherent = false;
  bool stable = false;
  bool growth = false;  // U-dims strictly increase over the last k records
  std::string verdict;
};

TowerReport tower_report(const PhantomTower& t, std::size_t k = 3);
/// Stage diagram in Graphviz dot.
std::string tower_dot(const PhantomTower& t);

enum class SubfactorStatus { Yes, No, Unknown };
const char* to_string(SubfactorStatus s);

struct SubfactorVerdict {
  SubfactorStatus status = SubfactorStatus::Unknown;
  std::optional<Embedded> sub;           // U ⊆ A
  std::optional<ModuleMap> surjection;   // U -> B
  std::string reason;
};

struct SubfactorOptions {
  std::size_t max_generators = 3;
  std::size_t max_tuples = 20000;
  std::size_t random_trials = 200;
  std::uint64_t seed = default_seed();
};

/// Whether B is a quotient of a submodule of A. Searches submodules generated
/// by as many elements as B has top elements.
SubfactorVerdict subfactor_check(const Representation& b, const Representation& a, const SubfactorOptions& opts = {});

}  // namespace quiverlab
