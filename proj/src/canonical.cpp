#include "patsforge/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace patsforge {

namespace {

// Encoding of a tile order: per tile (color, n, w, s, e) with glues renamed
// to first-occurrence indices over the scan n,w,s,e per tile.
std::vector<int> encode_order(const TileSet& ts, const std::vector<int>& order) {
    std::unordered_map<uint32_t, int> rename;
    std::vector<int> enc;
    enc.reserve(order.size() * 5);
    auto code = [&](Glue g) {
        auto it = rename.find(g.id());
        if (it != rename.end()) return it->second;
        int v = (int)rename.size();
        rename.emplace(g.id(), v);
        return v;
    };
    for (int i : order) {
        const TileType& t = ts.types[i];
        enc.push_back(t.color);
        enc.push_back(code(t.north));
        enc.push_back(code(t.west));
        enc.push_back(code(t.south));
        enc.push_back(code(t.east));
    }
    return enc;
}

// Signature refinement: tiles start from their color, glues from the multiset
// of (side, tile signature) incidences; a few rounds separate everything that
// any invariant can separate.
std::vector<uint64_t> refine(const TileSet& ts) {
    const size_t n = ts.types.size();
    std::vector<uint64_t> tile_sig(n);
    for (size_t i = 0; i < n; ++i) tile_sig[i] = (uint64_t)ts.types[i].color + 1;

    auto mix = [](uint64_t h, uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    };

    for (int round = 0; round < 6; ++round) {
        std::unordered_map<uint32_t, uint64_t> glue_sig;
        for (size_t i = 0; i < n; ++i) {
            const TileType& t = ts.types[i];
            const Glue gs[4] = {t.north, t.west, t.south, t.east};
            for (int side = 0; side < 4; ++side) {
                uint64_t v = mix((uint64_t)side * 0x100000001b3ULL, tile_sig[i]);
                // order-independent accumulation per glue
                glue_sig[gs[side].id()] += v * 0x9ddfea08eb382d69ULL + 1;
            }
        }
        std::vector<uint64_t> next(n);
        for (size_t i = 0; i < n; ++i) {
            const TileType& t = ts.types[i];
            uint64_t h = (uint64_t)ts.types[i].color + 1;
            h = mix(h, glue_sig[t.north.id()]);
            h = mix(h, glue_sig[t.west.id()]);
            h = mix(h, glue_sig[t.south.id()]);
            h = mix(h, glue_sig[t.east.id()]);
            next[i] = h;
        }
        tile_sig = std::move(next);
    }
    return tile_sig;
}

struct CanonicalSearch {
    const TileSet& ts;
    std::vector<std::vector<int>> classes;  // tiles grouped by signature, class order fixed
    std::vector<int> best_order;
    std::vector<int> best_enc;
    long nodes = 0;

    explicit CanonicalSearch(const TileSet& t) : ts(t) {}

    void run() {
        std::vector<int> order;
        order.reserve(ts.types.size());
        descend(0, order);
    }

    void descend(size_t ci, std::vector<int>& order) {
        if (++nodes > 2000000)
            throw std::runtime_error("canonicalize: tile class symmetry too large");
        if (ci == classes.size()) {
            std::vector<int> enc = encode_order(ts, order);
            if (best_enc.empty() || enc < best_enc) {
                best_enc = std::move(enc);
                best_order = order;
            }
            return;
        }
        std::vector<int> cls = classes[ci];
        std::sort(cls.begin(), cls.end());
        do {
            for (int i : cls) order.push_back(i);
            descend(ci + 1, order);
            order.resize(order.size() - cls.size());
        } while (std::next_permutation(cls.begin(), cls.end()));
    }
};

std::vector<int> canonical_encoding(const TileSet& ts, std::vector<int>* order_out) {
    if (ts.types.empty()) {
        if (order_out) order_out->clear();
        return {};
    }
    auto sig = refine(ts);
    // group by (color, signature); group order by the pair itself
    std::map<std::pair<int, uint64_t>, std::vector<int>> groups;
    for (size_t i = 0; i < ts.types.size(); ++i)
        groups[{ts.types[i].color, sig[i]}].push_back((int)i);

    CanonicalSearch search(ts);
    for (auto& [key, members] : groups) search.classes.push_back(members);
    search.run();
    if (order_out) *order_out = search.best_order;
    return search.best_enc;
}

}  // namespace

TileSet canonicalize(const TileSet& ts) {
    std::vector<int> order;
    std::vector<int> enc = canonical_encoding(ts, &order);
    TileSet out;
    out.types.reserve(ts.types.size());
    for (size_t k = 0; k < order.size(); ++k) {
        const int* row = &enc[k * 5];
        TileType t;
        t.color = row[0];
        t.north = Glue("g" + std::to_string(row[1]));
        t.west = Glue("g" + std::to_string(row[2]));
        t.south = Glue("g" + std::to_string(row[3]));
        t.east = Glue("g" + std::to_string(row[4]));
        t.name = ts.types[order[k]].name;
        out.types.push_back(t);
    }
    return out;
}

bool isomorphic(const TileSet& a, const TileSet& b) {
    if (a.types.size() != b.types.size()) return false;
    std::multiset<ColorId> ca, cb;
    for (const auto& t : a.types) ca.insert(t.color);
    for (const auto& t : b.types) cb.insert(t.color);
    if (ca != cb) return false;
    return canonical_encoding(a, nullptr) == canonical_encoding(b, nullptr);
}

}  // namespace patsforge
