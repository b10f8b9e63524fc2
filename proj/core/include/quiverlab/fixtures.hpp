#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quiverlab/config.hpp"
#include "quiverlab/rep.hpp"

namespace quiverlab::fixtures {

/// One term c * path * b_gen of a relator in a free module ⊕ Λb_k.
struct Term {
  Scalar coeff;
  std::string path;  // "e[v]" for the generator itself
  std::size_t gen;
};

FreeElement free_element(const Algebra& a, const std::vector<std::size_t>& gens, const std::vector<Term>& terms);
PresentedModule present(const AlgebraPtr& alg, const std::vector<std::string>& gen_vertices,
                        const std::vector<std::vector<Term>>& relators);

/// 1 ⇉ 2 (alpha, beta), 2 -> 1 (gamma); I = <alpha*gamma, beta*gamma, gamma*beta>.
AlgebraPtr ex2_algebra(Field f = default_field());
/// Adds 3 -> 1 (delta) and beta*delta to the relations above.
AlgebraPtr delta_algebra(Field f = default_field());
/// Same quiver as delta_algebra without beta*delta.
AlgebraPtr xi_algebra(Field f = default_field());
/// Loop alpha at 1, then 1 -> 2 -> 3 -> 4 (beta, gamma, delta); I = <alpha^2, delta*gamma*beta>.
AlgebraPtr ex12_algebra(Field f = default_field());
/// Eight vertices; one commutativity relation gamma*alpha - delta*beta plus monomial ones.
AlgebraPtr ex13_algebra(Field f = default_field());

/// N_n = (⊕ Λb_i) / Σ Λ(p b_i - q b_{i+1}), all b_i of type `vertex`.
PresentedModule zipper_presentation(const AlgebraPtr& alg, std::size_t vertex, const AlgebraElement& p,
                                    const AlgebraElement& q, std::size_t n);
/// The string M_n (tops x_1..x_n at vertex 1, alpha x_1 = 0, beta x_i = alpha x_{i+1}).
/// Works over every algebra above that contains arrows alpha, beta: 1 -> 2.
PresentedModule string_module(const AlgebraPtr& alg, std::size_t n);
/// (Λe_1 ⊕ Λe_3) / (Λ alpha b_1 + Λ(beta b_1 - alpha*delta b_3)) over delta_algebra or xi_algebra.
PresentedModule hook_module(const AlgebraPtr& alg);
/// E_n over xi_algebra: one top at 1, n-1 tops at 3 chained by beta*delta b_i = alpha*delta b_{i+1}.
PresentedModule e_module(const AlgebraPtr& alg, std::size_t n);
/// Λe_1 / (Λbeta + Λbeta*alpha) over ex12_algebra.
PresentedModule ex12_a1(const AlgebraPtr& alg);
/// Left and right halves of C_n over ex13_algebra, and their sum.
PresentedModule ex13_c_left(const AlgebraPtr& alg, std::size_t n);
PresentedModule ex13_c_right(const AlgebraPtr& alg, std::size_t n);
Representation ex13_c(const AlgebraPtr& alg, std::size_t n);

}  // namespace quiverlab::fixtures
