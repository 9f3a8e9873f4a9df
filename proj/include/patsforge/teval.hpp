#pragma once

#include "patsforge/core.hpp"

namespace patsforge {

// Canonical palette of the evaluation tile set; codes are stable and shared
// by the renderer's glyph legend.
namespace color {
constexpr ColorId cyan = 0;
constexpr ColorId ce = 1;
constexpr ColorId white = 2;
constexpr ColorId black = 3;
constexpr ColorId dgnl_white = 4;
constexpr ColorId dgnl_black = 5;
constexpr ColorId init = 6;
constexpr ColorId sat = 7;
constexpr ColorId yellow = 8;
constexpr ColorId red = 9;
constexpr ColorId blue = 10;
}  // namespace color

/// Display names for the 11 evaluation-set colors, indexed by code.
const std::vector<std::string>& teval_color_names();

/// The 21-type evaluation tile set, stable ordering. Signals: cyan passes
/// F/T horizontally and vertically, CE folds clause signals f -> s on a T,
/// white/black carry membership, DGNL tiles reflect-and-lowercase, Init
/// re-raises f/t to F/T and Sat validates a clause.
TileSet t_eval();

/// Index of the named tile inside t_eval(), or -1.
int teval_index(const std::string& name);

}  // namespace patsforge
