#pragma once

#include <cstdint>

#include "quiverlab/scalar.hpp"

namespace quiverlab {

/// Seed for every randomized search. QUIVERLAB_SEED overrides the built-in default.
std::uint64_t default_seed();

/// Field used when an input file does not name one. QUIVERLAB_FIELD accepts
/// "Q" or a prime ("101" or "F 101").
Field default_field();

}  // namespace quiverlab
