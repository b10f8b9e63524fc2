#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quiverlab/homology.hpp"

namespace quiverlab {

/// A finite list of modules standing in for a subcategory. `closure` records
/// what the list is meant to lie in (e.g. "finite projective dimension");
/// attached pdim verdicts can be re-checked.
struct FiniteCategory {
  std::string name;
  std::string closure;
  std::vector<std::string> labels;
  std::vector<Representation> members;
  std::vector<std::optional<PdimVerdict>> pdims;

  std::size_t size() const noexcept { return members.size(); }
  void add(std::string label, Representation m, std::optional<PdimVerdict> v = std::nullopt);
  /// Every attached verdict re-verifies and, if closure is finite pdim, is Finite.
  bool verify_flags() const;
};

inline constexpr const char* kFinitePdim = "finite projective dimension";

/// For the basis map g: C_member -> X, a map h: C_member -> A with f ∘ h = g.
struct FactorWitness {
  std::size_t member = 0;
  ModuleMap g;
  ModuleMap h;
};

struct ApproxCertificate {
  Representation target;
  FiniteCategory family;
  ModuleMap map;  // A -> X
  std::vector<FactorWitness> witnesses;
  bool right_minimal = false;

  const Representation& source() const { return map.source(); }
  /// Recomputes every composition (and minimality, when flagged).
  bool verify() const;
};

/// Some h with f ∘ h = g, if g factors through f.
std::optional<ModuleMap> factor_through(const ModuleMap& f, const ModuleMap& g);

struct ApproxCheck {
  bool ok = false;
  std::vector<FactorWitness> witnesses;
  /// First basis map that does not factor.
  std::optional<std::pair<std::size_t, ModuleMap>> failure;
};

ApproxCheck is_approximation(const ModuleMap& f, const FiniteCategory& c);

/// A = ⊕ C_i^{dim Hom(C_i, X)}, f assembled from Hom bases.
ApproxCertificate naive_approximation(const FiniteCategory& c, const Representation& x);
/// Starts from the direct sum of the seed maps and adds one copy of C_i for
/// each basis map C_i -> X that does not factor yet.
ApproxCertificate approximate(const FiniteCategory& c, const Representation& x,
                              const std::vector<ModuleMap>& seeds = {});

/// Basis of {v ∈ End(A) : f ∘ v = 0}, a right ideal of End(A).
std::vector<ModuleMap> annihilating_endomorphisms(const ModuleMap& f);
/// f is right minimal iff the ideal above is nilpotent.
bool is_right_minimal(const ModuleMap& f);

struct MinimizeOptions {
  std::size_t trials = 64;
  std::uint64_t seed = default_seed();
};

/// Fitting reduction: repeatedly passes to ker(v^m) for a non-nilpotent v with
/// f v = 0, transporting f and the witnesses, until right minimality is certified.
ApproxCertificate right_minimize(ApproxCertificate cert, const MinimizeOptions& opts = {});

struct FamilyMember {
  std::string label;
  Representation module;
  std::optional<PdimVerdict> pdim;
};
using FamilyGenerator = std::function<FamilyMember(std::size_t)>;

struct ScanRow {
  std::size_t n = 0;
  std::size_t source_dim = 0;
  bool minimized = false;
  bool witnesses_verified = false;
};

struct ScanOptions {
  /// Modules the ambient family always contains (not counted in n).
  std::vector<FamilyMember> ambient;
  MinimizeOptions minimize;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  ApproxCertificate last;  // minimal certificate of the final stage
};

/// For n = 1..n_max, the right-minimized {F_1..F_n}-approximation of X, each
/// stage seeded with the previous one.
ScanResult approximation_growth_scan(const FamilyGenerator& gen, const Representation& x, std::size_t n_max, const ScanOptions& opts = {});
bool scan_is_monotone(const std::vector<ScanRow>& rows);
/// Dimensions strictly increase over the last k stages.
bool scan_shows_growth(const std::vector<ScanRow>& rows, std::size_t k);

}  // namespace quiverlab
