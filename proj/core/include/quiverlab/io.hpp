#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverlab/algebra.hpp"
#include "quiverlab/rep.hpp"

namespace quiverlab {

/// Algebra files, one directive per line, `#` starts a comment:
///
///     field Q                  # or: field F 101
///     vertex 1 2
///     arrow alpha 1 2
///     rel alpha*gamma - 2*beta*gamma
///     maxlen 4
///
/// Without a field line the default field applies; without maxlen, 10.
AlgebraPtr parse_algebra(std::string_view text);
AlgebraPtr load_algebra(const std::filesystem::path& file);
std::string serialize_algebra(const Algebra& a);

/// `2*alpha*beta - 1/2*e[1]`; coefficients are reduced into `field`.
PathCombination parse_combination(const Quiver& q, std::string_view text, const Field& field);
/// parse_combination followed by normal form.
AlgebraElement parse_element(const Algebra& a, std::string_view text);
std::string format_element(const Algebra& a, const AlgebraElement& x);

struct ModuleEntry {
  std::string name;
  Representation module;
  std::optional<PresentedModule> presented;
};

/// Module files hold stanzas. A presented stanza:
///
///     module N2
///     presented
///     gen b1 1
///     gen b2 1
///     rel beta*b1 - alpha*b2
///
/// An explicit stanza lists dimensions in vertex order and each arrow's
/// matrix row-major (omitted arrows are zero):
///
///     module S1
///     explicit
///     dims 1 0
std::vector<ModuleEntry> parse_modules(const AlgebraPtr& alg, std::string_view text);
std::vector<ModuleEntry> load_modules(const AlgebraPtr& alg, const std::filesystem::path& file);
/// The stanza with this name; throws InvalidArgument listing the names present.
ModuleEntry find_module(const std::vector<ModuleEntry>& entries, std::string_view name);

std::string serialize_explicit(const std::string& name, const Representation& m);
/// Generators are written b1, b2, ...
std::string serialize_presented(const std::string& name, const PresentedModule& p);

std::string read_file(const std::filesystem::path& file);

}  // namespace quiverlab
