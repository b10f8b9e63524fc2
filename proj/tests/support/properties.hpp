#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <quiverlab/approximation.hpp>

namespace qtest {

using namespace quiverlab;

/// A presented module with 1..max_gens generators at random vertices and up
/// to max_rels random relators.
PresentedModule random_presented(const AlgebraPtr& alg, std::mt19937_64& rng, std::size_t max_gens = 3,
                                 std::size_t max_rels = 3);
AlgebraElement random_element(const Algebra& a, std::size_t vertex, std::mt19937_64& rng, bool radical_only);

/// Fixture algebras the random suites draw from.
std::vector<AlgebraPtr> suite_algebras(Field f);

/// Number of homomorphisms M -> N, by enumerating every block tuple over F_p.
std::size_t brute_force_hom_count(const Representation& m, const Representation& n);

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

SuiteResult constructors_valid(std::uint64_t seed, std::size_t cases);
SuiteResult hom_vs_brute_force(std::uint64_t seed, std::size_t cases);
SuiteResult syzygy_dimension_law(std::uint64_t seed, std::size_t cases);
SuiteResult projective_cover_contract(std::uint64_t seed, std::size_t cases);
SuiteResult minimize_idempotent(std::uint64_t seed, std::size_t cases);
/// Every residue path of the two-arrow algebra and of Ξ.
SuiteResult path_pdim_agreement();

std::vector<SuiteResult> all_suites(std::uint64_t seed, std::size_t cases);

}  // namespace qtest
