#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <quiverlab/approximation.hpp>
#include <quiverlab/bundles.hpp>
#include <quiverlab/io.hpp>
#include <quiverlab/phantom.hpp>

namespace qcli {

using namespace quiverlab;

struct ContextOptions {
  std::string algebra_file;
  std::string fixture;
  std::string modules_file;
  std::optional<std::uint64_t> seed;
};

/// The algebra a command works over and every module it can name.
class Context {
 public:
  explicit Context(const ContextOptions& opts);

  const AlgebraPtr& algebra() const { return alg_; }
  std::uint64_t seed() const { return seed_; }
  const std::optional<FixtureBundle>& fixture() const { return fixture_; }

  /// Module file stanzas first, then fixture modules, then S<vertex> and
  /// P<vertex>.
  Representation module(const std::string& name) const;
  std::vector<std::string> module_names() const;
  FiniteCategory family(const std::vector<std::string>& names, bool with_pdims) const;
  FamilyMember member(const std::string& name) const;

  AlgebraElement element(const std::string& text) const;
  PathWord path(const std::string& text) const;
  std::size_t vertex(const std::string& name) const;

  /// "nn:p=EXPR,q=EXPR" builds N_n; "prefix:M" takes the modules M1, M2, ...
  FamilyGenerator generator(const std::string& spec) const;

 private:
  AlgebraPtr alg_;
  std::optional<FixtureBundle> fixture_;
  std::vector<ModuleEntry> file_modules_;
  std::uint64_t seed_;
};

/// Lines `p VERTEX EXPR`, `q VERTEX EXPR` (one pair per vertex, in order)
/// and optionally `n_max N`.
struct ZipperFile {
  ZipperSpec spec;
  std::size_t n_max = 4;
};
ZipperFile parse_zipper_file(const Context& ctx, const std::string& text);

/// "N" or "A..B".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);
std::vector<std::string> split_list(const std::string& text, char sep = ',');

}  // namespace qcli
