#pragma once

#include "patsforge/core.hpp"

#include <optional>

namespace patsforge {

/// Cell partition of a pattern: class_of[cell] in 0..classes-1, row-major
/// from the south row. Classes must respect colors.
struct CellPartition {
    int width = 0, height = 0;
    std::vector<int> class_of;
    int classes = 0;
};

struct SolverWitness {
    TileSet tiles;
    LSeed seed;
    int size = 0;
};

/// Derives the most general glue assignment for the partition (one glue per
/// unified edge class) and accepts iff the tile set is directed and
/// re-simulates to exactly the input pattern.
std::optional<SolverWitness> partition_feasible(const Pattern& p, const CellPartition& part);

struct SolveOptions {
    int budget = 64;               // largest class count worth returning
    long node_limit = 10000000;    // branch-and-bound nodes before giving up
};

/// Exact minimum tile set search over cell partitions. Cells are branched in
/// anti-diagonal order; color conflicts and directedness conflicts prune
/// incrementally. Throws "search space exceeded" at the node limit.
std::optional<SolverWitness> min_tileset(const Pattern& p, const SolveOptions& opt = {});

/// Exhaustive oracle over all color-respecting partitions, w*h <= 12.
std::optional<int> brute_force_min(const Pattern& p, int max_classes);

}  // namespace patsforge
