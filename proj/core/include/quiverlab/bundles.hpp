#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quiverlab/config.hpp"
#include "quiverlab/homology.hpp"

namespace quiverlab {

/// Where an expected value comes from: read off the worked example, computed
/// by an independent oracle, or immediate from the definitions.
enum class Origin { Literature, Oracle, Definition };
const char* to_string(Origin o);

struct ExpectedRow {
  std::string key;
  std::string expected;
  Origin origin = Origin::Oracle;
  std::function<std::string()> compute;
};

struct RowResult {
  std::string key;
  std::string expected;
  std::string actual;
  Origin origin = Origin::Oracle;
  bool passed = false;
  double seconds = 0;
};

struct FixtureBundle {
  std::string id;
  std::string title;
  AlgebraPtr algebra;
  std::vector<std::pair<std::string, Representation>> modules;
  std::vector<ExpectedRow> table;

  /// Recomputes every row; an exception becomes a failed row.
  std::vector<RowResult> run() const;
  const Representation& module(std::string_view name) const;
};

std::vector<std::string> fixture_ids();
/// Throws InvalidArgument for an unknown id.
FixtureBundle load_fixture(std::string_view id, Field field = default_field());

/// Finite(d), Infinite or Unknown.
std::string short_pdim(const PdimVerdict& v);

}  // namespace quiverlab
