#include "patsforge/core.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

namespace patsforge {

namespace {

struct InternPool {
    std::mutex mu;
    std::vector<std::string> symbols{""};
    std::unordered_map<std::string, uint32_t> index{{"", 0}};

    uint32_t intern(const std::string& s) {
        std::lock_guard<std::mutex> lock(mu);
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        uint32_t id = (uint32_t)symbols.size();
        symbols.push_back(s);
        index.emplace(s, id);
        return id;
    }
    const std::string& symbol(uint32_t id) {
        std::lock_guard<std::mutex> lock(mu);
        return symbols[id];
    }
};

InternPool& pool() {
    static InternPool p;
    return p;
}

}  // namespace

Glue::Glue(const std::string& symbol) : id_(pool().intern(symbol)) {}

const std::string& Glue::symbol() const { return pool().symbol(id_); }

bool is_directed(const TileSet& ts) {
    for (size_t i = 0; i < ts.types.size(); ++i)
        for (size_t j = i + 1; j < ts.types.size(); ++j)
            if (ts.types[i].west == ts.types[j].west &&
                ts.types[i].south == ts.types[j].south)
                return false;
    return true;
}

std::vector<int> attachable(const TileSet& ts, Glue west, Glue south) {
    std::vector<int> out;
    for (size_t i = 0; i < ts.types.size(); ++i)
        if (ts.types[i].west == west && ts.types[i].south == south)
            out.push_back((int)i);
    return out;
}

namespace {

uint64_t pair_key(Glue w, Glue s) { return ((uint64_t)w.id() << 32) | s.id(); }

}  // namespace

SimOutcome simulate(const TileSet& ts, const LSeed& seed) {
    const int w = seed.width, h = seed.height;
    std::unordered_map<uint64_t, std::vector<int>> lookup;
    for (size_t i = 0; i < ts.types.size(); ++i)
        lookup[pair_key(ts.types[i].west, ts.types[i].south)].push_back((int)i);

    Assembly a;
    a.tiles = ts;
    a.width = w;
    a.height = h;
    a.cells.assign((size_t)w * h, -1);

    // Anti-diagonal sweep: both dependencies of (x,y) lie on diagonal x+y-1.
    for (int d = 2; d <= w + h; ++d) {
        for (int x = std::max(1, d - h); x <= std::min(w, d - 1); ++x) {
            int y = d - x;
            Glue west = (x == 1) ? seed.y_east[y - 1] : ts.types[a.at(x - 1, y)].east;
            Glue south = (y == 1) ? seed.x_north[x - 1] : ts.types[a.at(x, y - 1)].north;
            auto it = lookup.find(pair_key(west, south));
            if (it == lookup.end() || it->second.empty())
                return Stuck{x, y, west, south};
            if (it->second.size() > 1)
                return Ambiguous{x, y, it->second};
            a.cells[(size_t)(y - 1) * w + (x - 1)] = it->second[0];
        }
    }
    return Completed{std::move(a)};
}

Pattern pattern_of(const Assembly& a) {
    Pattern p;
    p.width = a.width;
    p.height = a.height;
    p.colors.resize(a.cells.size());
    for (size_t i = 0; i < a.cells.size(); ++i)
        p.colors[i] = a.tiles.types[a.cells[i]].color;
    return p;
}

Pattern pattern_of(const Assembly& a, const TileSet& ts) {
    Pattern p;
    p.width = a.width;
    p.height = a.height;
    p.colors.resize(a.cells.size());
    for (size_t i = 0; i < a.cells.size(); ++i)
        p.colors[i] = ts.types[a.cells[i]].color;
    return p;
}

std::vector<Glue> north_exposure(const Assembly& a) {
    std::vector<Glue> out;
    out.reserve(a.width);
    for (int x = 1; x <= a.width; ++x) out.push_back(a.tile_at(x, a.height).north);
    return out;
}

std::vector<Glue> east_exposure(const Assembly& a) {
    std::vector<Glue> out;
    out.reserve(a.height);
    for (int y = 1; y <= a.height; ++y) out.push_back(a.tile_at(a.width, y).east);
    return out;
}

std::map<ColorId, int> color_census(const TileSet& ts) {
    std::map<ColorId, int> census;
    for (const auto& t : ts.types) census[t.color]++;
    return census;
}

std::vector<ColorId> pattern_colors(const Pattern& p) {
    std::set<ColorId> used(p.colors.begin(), p.colors.end());
    return std::vector<ColorId>(used.begin(), used.end());
}

}  // namespace patsforge
