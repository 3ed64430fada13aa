#pragma once

#include <array>
#include <optional>
#include <string>

#include "scd/grid_fn.hpp"

namespace scd {

enum class ScDirection { FromBelow, FromAbove, Both, Either, None };

std::string to_string(ScDirection d);

/// Result of a single-crossing test. On failure, `witness` is a chain
/// theta_l < theta_m < theta_h whose sign pattern is non-monotone; for the
/// strict test the failure may instead be a comparable pair of zeros.
struct ScVerdict {
  bool holds = false;
  ScDirection direction = ScDirection::None;
  std::optional<std::array<int, 3>> witness;
  std::optional<std::array<int, 2>> zero_pair;
  Numeric numeric;
};

/// sign(f) monotone over comparable pairs, in the requested direction(s).
ScVerdict is_single_crossing(const GridFn& f, ScDirection dir = ScDirection::Either);

/// Single crossing with no two comparable zeros.
ScVerdict is_strictly_single_crossing(const GridFn& f);

/// Lexicographically first chain triple with a non-monotone sign pattern;
/// empty iff f is single crossing.
std::optional<std::array<int, 3>> find_sc_violation(const GridFn& f);

bool sc_from_below(const GridFn& f);
bool sc_from_above(const GridFn& f);
bool strictly_sc_from_below(const GridFn& f);
bool strictly_sc_from_above(const GridFn& f);

/// Monotone over comparable pairs (increasing or decreasing in value).
bool is_monotone(const GridFn& f);
bool is_increasing(const GridFn& f);

}  // namespace scd
