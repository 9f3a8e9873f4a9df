#pragma once

#include "patsforge/core.hpp"

namespace patsforge {

/// Renames glues to first-occurrence indices (g0, g1, ...) under a fixed
/// total order of tiles chosen by signature refinement; equal inputs give
/// equal outputs and the result is a fixpoint of the operation.
TileSet canonicalize(const TileSet& ts);

/// True iff b can be obtained from a by reordering tiles and applying a
/// glue bijection. Colors must match exactly.
bool isomorphic(const TileSet& a, const TileSet& b);

}  // namespace patsforge
