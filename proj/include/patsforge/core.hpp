#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace patsforge {

/// Side label of a tile. Glues are interned tokens: equality of ids is
/// equality of symbols, and the one-letter glue names (c, F, t, s, ...)
/// round-trip through files unchanged.
class Glue {
public:
    Glue() : id_(0) {}  // the empty glue ""
    explicit Glue(const std::string& symbol);

    uint32_t id() const { return id_; }
    const std::string& symbol() const;

    bool operator==(const Glue& o) const { return id_ == o.id_; }
    bool operator!=(const Glue& o) const { return id_ != o.id_; }
    bool operator<(const Glue& o) const { return id_ < o.id_; }

private:
    uint32_t id_;
};

using ColorId = int;

struct TileType {
    Glue north, west, south, east;
    ColorId color = 0;
    std::string name;  // optional label, not part of identity

    bool same_record(const TileType& o) const {
        return north == o.north && west == o.west && south == o.south &&
               east == o.east && color == o.color;
    }
};

struct TileSet {
    std::vector<TileType> types;

    size_t size() const { return types.size(); }
    const TileType& operator[](size_t i) const { return types[i]; }
};

/// L-shape seed: north labels along the x-axis, east labels along the y-axis.
struct LSeed {
    int width = 0, height = 0;
    std::vector<Glue> x_north;  // positions (1..w, 0)
    std::vector<Glue> y_east;   // positions (0, 1..h)
};

/// Tiled w x h rectangle. (1,1) is the south-west cell, y grows northward.
/// Cells hold indices into the governing tile set, which the assembly carries.
struct Assembly {
    TileSet tiles;
    int width = 0, height = 0;
    std::vector<int> cells;  // row-major from the south row

    int at(int x, int y) const { return cells[(size_t)(y - 1) * width + (x - 1)]; }
    const TileType& tile_at(int x, int y) const { return tiles.types[at(x, y)]; }
};

struct Pattern {
    int width = 0, height = 0;
    std::vector<ColorId> colors;  // row-major from the south row

    ColorId at(int x, int y) const { return colors[(size_t)(y - 1) * width + (x - 1)]; }
    ColorId& at(int x, int y) { return colors[(size_t)(y - 1) * width + (x - 1)]; }
    bool operator==(const Pattern& o) const {
        return width == o.width && height == o.height && colors == o.colors;
    }
};

struct Completed {
    Assembly assembly;
};
struct Stuck {
    int x = 0, y = 0;
    Glue west, south;
};
struct Ambiguous {
    int x = 0, y = 0;
    std::vector<int> candidates;
};

/// Simulation result. Stuck/Ambiguous report the first failing position in
/// anti-diagonal sweep order (x+y ascending, then x ascending).
using SimOutcome = std::variant<Completed, Stuck, Ambiguous>;

bool is_directed(const TileSet& ts);

/// All type indices t with t.west = west and t.south = south, in set order.
std::vector<int> attachable(const TileSet& ts, Glue west, Glue south);

/// Deterministic tiling of the w x h rectangle delimited by the seed.
/// A tile attaches where its west and south labels match both neighbours;
/// for a directed set the outcome is independent of fill order.
SimOutcome simulate(const TileSet& ts, const LSeed& seed);

Pattern pattern_of(const Assembly& a);
Pattern pattern_of(const Assembly& a, const TileSet& ts);

/// Top-row north glues left to right.
std::vector<Glue> north_exposure(const Assembly& a);
/// Rightmost-column east glues bottom to top.
std::vector<Glue> east_exposure(const Assembly& a);

std::map<ColorId, int> color_census(const TileSet& ts);

/// Exact set of color codes used by the pattern.
std::vector<ColorId> pattern_colors(const Pattern& p);

}  // namespace patsforge
