#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverlab/phantom.hpp"

namespace quiverlab {

enum class ConditionStatus { Certified, Refuted, Unverified };
const char* to_string(ConditionStatus s);

/// A module of finite projective dimension with a top element x of type e
/// and an element y ∈ JC such that p x = q y (q absent: p x = 0).
struct Violation {
  Representation module;
  PdimVerdict pdim;
  AlgebraElement p;
  Vec x;
  std::optional<AlgebraElement> q;
  Vec y;

  bool verify() const;
};

struct ConditionEntry {
  std::string condition;
  ConditionStatus status = ConditionStatus::Unverified;
  std::string evidence;
  /// Module the pdim verdict is about.
  std::optional<Representation> module;
  std::optional<PdimVerdict> pdim;
  std::optional<Violation> violation;
};

enum class OverallVerdict { NoApproximation, Inconclusive };
const char* to_string(OverallVerdict v);

struct CriterionReport {
  std::string criterion;
  std::vector<ConditionEntry> entries;
  std::optional<std::string> precondition_failure;
  OverallVerdict overall = OverallVerdict::Inconclusive;

  const ConditionEntry* find(std::string_view condition) const;
  ConditionStatus status(std::string_view condition) const;
  /// Re-verifies every pdim verdict and violation carried by the entries.
  bool replay() const;
};

struct Criterion1Options {
  PdimOptions pdim;
  /// Modules tried against condition (ii).
  std::vector<Representation> counterexamples;
};

/// Condition names: "intersection", "(i)", "package", "(ii)", "(iii)", "(ii')".
/// NoApproximation needs intersection, (i), and (ii) or (ii') Certified.
CriterionReport criterion1_check(const AlgebraPtr& alg, const PathWord& p, const PathWord& q,
                                 const Criterion1Options& opts = {});

/// A top x ∈ e_1C and y ∈ e_1JC with p x = q y, or nothing. Exact and
/// complete for the given module. Throws InvalidArgument unless pdim C is
/// finite (computed when not supplied).
std::optional<Violation> condition2_falsify(const AlgebraPtr& alg, const AlgebraElement& p, const AlgebraElement& q,
                                            const Representation& c, std::optional<PdimVerdict> pdim = std::nullopt,
                                            const PdimOptions& opts = {});

struct Criterion10Options {
  std::size_t n_max = 4;
  PdimOptions pdim;
};

/// Condition names: "(1)", "(2)(i)", "(2)(ii)".
CriterionReport criterion10_check(const AlgebraPtr& alg, const ZipperSpec& spec, const Criterion10Options& opts = {});

struct SeedReport {
  std::size_t vertex = 0;
  std::vector<std::size_t> arrows;
  std::vector<PdimVerdict> arrow_pdims;  // each Infinite
  bool summand_split = false;            // ⊕ Λα_j is a direct summand of Je_vertex
  PdimVerdict simple_pdim;
  /// Edges "v -arrow-> w" of the forced subgraph.
  std::vector<std::string> subgraph;
};

/// Every C of finite projective dimension with a top element c of type
/// e_vertex has α_j c ≠ 0 for all j. Throws NotMonomial, EndpointMismatch,
/// InvalidArgument (repeated targets), or FinitePdimArrow.
SeedReport remark11_seed(const AlgebraPtr& alg, std::size_t vertex, const std::vector<std::size_t>& arrows);

}  // namespace quiverlab
