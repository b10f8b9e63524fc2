#pragma once

#include <optional>
#include <vector>

#include "quiverlab/homology.hpp"

namespace quiverlab {

/// Λx as a submodule of Λe_vertex, for x ∈ Λe_vertex.
Embedded cyclic_module(const AlgebraPtr& alg, std::size_t vertex, const AlgebraElement& x);

/// The module a node of the syzygy graph stands for: Λp for a nontrivial
/// path, S_i for the trivial path e_i.
Representation path_node_module(const AlgebraPtr& alg, const PathWord& p);

/// Paths q with Ω^1(Λp) ≅ ⊕ Λq (for trivial p: Ω^1(S_i) = Je_i, the arrows out of i).
/// Throws NotMonomial or PathInIdeal.
std::vector<PathWord> path_ideal_syzygy(const AlgebraPtr& alg, const PathWord& p);

/// Exact projective dimension of Λp (of S_i for trivial p); never Unknown.
PdimVerdict path_pdim(const AlgebraPtr& alg, const PathWord& p);

/// Whether Λp is a direct summand of Je_vertex.
bool summand_of_radical(const AlgebraPtr& alg, const PathWord& p, std::size_t vertex);

/// Writes m as ⊕ Λp_i (trivial path: the projective Λe_i) when possible,
/// by splitting off one local summand at a time.
std::optional<std::vector<PathWord>> decompose_into_path_modules(const AlgebraPtr& alg, const Representation& m);

/// Re-verifies every edge of a cycle witness by linear algebra.
bool verify_cycle_witness(const AlgebraPtr& alg, const SyzygyCycleWitness& w);

}  // namespace quiverlab
