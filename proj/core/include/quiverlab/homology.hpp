#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quiverlab/config.hpp"
#include "quiverlab/rep.hpp"

namespace quiverlab {

enum class IsoStatus { Yes, No, ProbablyNo };

struct IsoVerdict {
  IsoStatus status = IsoStatus::ProbablyNo;
  std::optional<ModuleMap> witness;  // set exactly when status == Yes
  std::string reason;
};

struct IsoOptions {
  std::size_t trials = 32;
  std::uint64_t seed = default_seed();
};

/// Yes comes with a verified invertible homomorphism; No rests on an
/// isomorphism invariant (dimension vectors, top, socle, Hom dimensions).
IsoVerdict is_isomorphic(const Representation& m, const Representation& n, const IsoOptions& opts = {});
const char* to_string(IsoStatus s);

/// A split inclusion X -> N: r ∘ s = id_X.
struct SplitSummand {
  ModuleMap section;     // X -> N
  ModuleMap retraction;  // N -> X
};

/// Decides whether X is a direct summand of N, assuming End(X) is local
/// (e.g. X cyclic with simple top). Deterministic: in a local ring a sum of
/// non-units is a non-unit, so a basis product must already be invertible.
std::optional<SplitSummand> split_local_summand(const Representation& x, const Representation& n);

/// Inverse of an isomorphism (blockwise).
ModuleMap inverse_map(const ModuleMap& f);

/// Chain p_0 -> p_1 -> ... in the syzygy graph of path modules; the nodes
/// from `cycle_start` on form a cycle (the last node repeats chain[cycle_start]).
/// A trivial path e_i stands for the simple S_i.
struct SyzygyCycleWitness {
  std::vector<PathWord> chain;
  std::size_t cycle_start = 0;
};

enum class PdimKind { Finite, Infinite, Unknown };

struct PdimVerdict {
  PdimKind kind = PdimKind::Unknown;
  /// Finite: the projective dimension. Unknown: the cutoff used.
  /// Infinite: the syzygy index the certificate applies to.
  std::size_t value = 0;

  std::optional<SyzygyCycleWitness> cycle;
  /// Ω^value ≅ ⊕ Λp over these paths (a trivial path e_i means Λe_i); the
  /// certificate's cycle starts at one of them.
  std::vector<PathWord> summands;
  std::optional<std::pair<std::size_t, std::size_t>> period;  // Ω^j ≅ Ω^k
  std::optional<ModuleMap> period_iso;

  static PdimVerdict finite(std::size_t d) { return PdimVerdict{PdimKind::Finite, d, {}, {}, {}, {}}; }
  static PdimVerdict unknown(std::size_t cutoff) { return PdimVerdict{PdimKind::Unknown, cutoff, {}, {}, {}, {}}; }
  bool is_finite() const noexcept { return kind == PdimKind::Finite; }
  bool is_infinite() const noexcept { return kind == PdimKind::Infinite; }
  std::string to_string() const;
};

struct PdimOptions {
  std::size_t cutoff = 10;
  bool detect_periodicity = true;
  /// On monomial algebras, decide exactly through path modules.
  bool use_monomial = true;
  /// Cross-check the monomial verdict against plain syzygy iteration.
  bool cross_check = true;
  IsoOptions iso;
};

/// Ω^0 = M, Ω^1, ..., up to Ω^count (stops early once a syzygy is zero).
std::vector<Representation> syzygies(const Representation& m, std::size_t count);

PdimVerdict pdim(const Representation& m, const PdimOptions& opts = {});
/// Re-checks the claims a verdict makes about m.
bool verify_pdim(const Representation& m, const PdimVerdict& v, const IsoOptions& iso = {});

}  // namespace quiverlab
