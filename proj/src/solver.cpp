#include "patsforge/solver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace patsforge {

namespace {

// Union-find over grid edge variables with rollback, so the branch-and-bound
// can unify and retract glue identifications cheaply.
struct EdgeUnion {
    std::vector<int> parent, rank_;
    struct Op {
        int child, parent_was_rank_bump;
    };
    std::vector<std::pair<int, bool>> trail;  // (child root, parent rank bumped)
    std::vector<int> trail_parent;

    explicit EdgeUnion(int n) : parent(n), rank_(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) const {
        while (parent[a] != a) a = parent[a];
        return a;
    }
    size_t mark() const { return trail.size(); }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] > rank_[b]) std::swap(a, b);
        bool bump = rank_[a] == rank_[b];
        parent[a] = b;
        if (bump) rank_[b]++;
        trail.push_back({a, bump});
        trail_parent.push_back(b);
    }
    void rollback(size_t to) {
        while (trail.size() > to) {
            auto [child, bump] = trail.back();
            int par = trail_parent.back();
            trail.pop_back();
            trail_parent.pop_back();
            parent[child] = child;
            if (bump) rank_[par]--;
        }
    }
};

// Edge ids: vertical edges between (x,y)-(x+1,y) for x=0..w, then horizontal
// edges between (x,y)-(x,y+1) for y=0..h.
struct EdgeIds {
    int w, h;
    EdgeIds(int width, int height) : w(width), h(height) {}
    int count() const { return (w + 1) * h + w * (h + 1); }
    int vedge(int x, int y) const { return x * h + (y - 1); }                  // x in 0..w
    int hedge(int x, int y) const { return (w + 1) * h + y * w + (x - 1); }    // y in 0..h
    int west(int x, int y) const { return vedge(x - 1, y); }
    int east(int x, int y) const { return vedge(x, y); }
    int south(int x, int y) const { return hedge(x, y - 1); }
    int north(int x, int y) const { return hedge(x, y); }
};

struct ClassInfo {
    int rep_x = 0, rep_y = 0;
    ColorId color = 0;
};

Glue edge_glue(const EdgeUnion& uf, int edge) {
    return Glue("e" + std::to_string(uf.find(edge)));
}

SolverWitness derive_witness(const Pattern& p, const std::vector<ClassInfo>& classes,
                             const EdgeUnion& uf, const EdgeIds& ids) {
    SolverWitness w;
    for (const auto& cls : classes) {
        TileType t;
        t.color = cls.color;
        t.north = edge_glue(uf, ids.north(cls.rep_x, cls.rep_y));
        t.west = edge_glue(uf, ids.west(cls.rep_x, cls.rep_y));
        t.south = edge_glue(uf, ids.south(cls.rep_x, cls.rep_y));
        t.east = edge_glue(uf, ids.east(cls.rep_x, cls.rep_y));
        w.tiles.types.push_back(t);
    }
    w.seed.width = p.width;
    w.seed.height = p.height;
    for (int x = 1; x <= p.width; ++x) w.seed.x_north.push_back(edge_glue(uf, ids.hedge(x, 0)));
    for (int y = 1; y <= p.height; ++y) w.seed.y_east.push_back(edge_glue(uf, ids.vedge(0, y)));
    w.size = (int)w.tiles.types.size();
    return w;
}

bool directed_classes(const std::vector<ClassInfo>& classes, const EdgeUnion& uf,
                      const EdgeIds& ids) {
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j) {
            if (uf.find(ids.west(classes[i].rep_x, classes[i].rep_y)) ==
                    uf.find(ids.west(classes[j].rep_x, classes[j].rep_y)) &&
                uf.find(ids.south(classes[i].rep_x, classes[i].rep_y)) ==
                    uf.find(ids.south(classes[j].rep_x, classes[j].rep_y)))
                return false;
        }
    return true;
}

bool reproduces(const Pattern& p, const SolverWitness& w) {
    auto out = simulate(w.tiles, w.seed);
    if (!std::holds_alternative<Completed>(out)) return false;
    return pattern_of(std::get<Completed>(out).assembly) == p;
}

}  // namespace

std::optional<SolverWitness> partition_feasible(const Pattern& p, const CellPartition& part) {
    if (part.width != p.width || part.height != p.height ||
        (int)part.class_of.size() != p.width * p.height)
        throw std::runtime_error("partition shape does not match the pattern");
    EdgeIds ids(p.width, p.height);
    EdgeUnion uf(ids.count());
    std::vector<ClassInfo> classes(part.classes);
    std::vector<bool> seen(part.classes, false);
    for (int y = 1; y <= p.height; ++y)
        for (int x = 1; x <= p.width; ++x) {
            int cls = part.class_of[(size_t)(y - 1) * p.width + (x - 1)];
            if (cls < 0 || cls >= part.classes)
                throw std::runtime_error("partition class id out of range");
            if (!seen[cls]) {
                seen[cls] = true;
                classes[cls] = {x, y, p.at(x, y)};
            } else {
                if (classes[cls].color != p.at(x, y)) return std::nullopt;  // color violation
                uf.unite(ids.north(x, y), ids.north(classes[cls].rep_x, classes[cls].rep_y));
                uf.unite(ids.west(x, y), ids.west(classes[cls].rep_x, classes[cls].rep_y));
                uf.unite(ids.south(x, y), ids.south(classes[cls].rep_x, classes[cls].rep_y));
                uf.unite(ids.east(x, y), ids.east(classes[cls].rep_x, classes[cls].rep_y));
            }
        }
    for (bool s : seen)
        if (!s) return std::nullopt;  // empty class
    if (!directed_classes(classes, uf, ids)) return std::nullopt;
    SolverWitness w = derive_witness(p, classes, uf, ids);
    if (!reproduces(p, w)) return std::nullopt;
    return w;
}

namespace {

struct Searcher {
    const Pattern& p;
    EdgeIds ids;
    EdgeUnion uf;
    std::vector<std::pair<int, int>> order;  // anti-diagonal cell order
    std::vector<int> assignment;             // class per order index
    std::vector<ClassInfo> classes;
    std::vector<int> color_class_count;      // per color, open class count
    int colors_missing;                      // colors with no class yet
    long nodes = 0;
    long node_limit;
    int best_size;
    std::optional<SolverWitness> best;
    std::optional<CellPartition> best_partition;

    Searcher(const Pattern& pat, const SolveOptions& opt)
        : p(pat), ids(pat.width, pat.height), uf(ids.count()), node_limit(opt.node_limit) {
        for (int d = 2; d <= p.width + p.height; ++d)
            for (int x = std::max(1, d - p.height); x <= std::min(p.width, d - 1); ++x)
                order.push_back({x, d - x});
        assignment.assign(order.size(), -1);
        int maxc = 0;
        for (ColorId c : p.colors) maxc = std::max(maxc, c);
        color_class_count.assign(maxc + 1, 0);
        colors_missing = (int)pattern_colors(p).size();
        best_size = opt.budget + 1;
    }

    void unify_cell(int x, int y, const ClassInfo& cls) {
        uf.unite(ids.north(x, y), ids.north(cls.rep_x, cls.rep_y));
        uf.unite(ids.west(x, y), ids.west(cls.rep_x, cls.rep_y));
        uf.unite(ids.south(x, y), ids.south(cls.rep_x, cls.rep_y));
        uf.unite(ids.east(x, y), ids.east(cls.rep_x, cls.rep_y));
    }

    void record_solution() {
        CellPartition part;
        part.width = p.width;
        part.height = p.height;
        part.classes = (int)classes.size();
        part.class_of.assign(order.size(), -1);
        for (size_t i = 0; i < order.size(); ++i) {
            auto [x, y] = order[i];
            part.class_of[(size_t)(y - 1) * p.width + (x - 1)] = assignment[i];
        }
        auto w = partition_feasible(p, part);
        if (w && w->size < best_size) {
            best_size = w->size;
            best = w;
            best_partition = part;
        }
    }

    void descend(size_t idx) {
        if (++nodes > node_limit) throw std::runtime_error("search space exceeded");
        if ((int)classes.size() + colors_missing >= best_size) return;
        if (idx == order.size()) {
            record_solution();
            return;
        }
        auto [x, y] = order[idx];
        ColorId col = p.at(x, y);
        for (int cls = 0; cls <= (int)classes.size(); ++cls) {
            bool fresh = cls == (int)classes.size();
            if (!fresh && classes[cls].color != col) continue;
            size_t mark = uf.mark();
            int missing_was = colors_missing;
            if (fresh) {
                if ((int)classes.size() + 1 >= best_size) break;  // new class can't help
                if (color_class_count[col] == 0) --colors_missing;
                ++color_class_count[col];
                classes.push_back({x, y, col});
            } else {
                unify_cell(x, y, classes[cls]);
            }
            assignment[idx] = cls;
            if (directed_classes(classes, uf, ids)) descend(idx + 1);
            assignment[idx] = -1;
            if (fresh) {
                classes.pop_back();
                --color_class_count[col];
                colors_missing = missing_was;
            }
            uf.rollback(mark);
        }
    }
};

}  // namespace

std::optional<SolverWitness> min_tileset(const Pattern& p, const SolveOptions& opt) {
    Searcher s(p, opt);
    s.descend(0);
    return s.best;
}

std::optional<int> brute_force_min(const Pattern& p, int max_classes) {
    if (p.width * p.height > 12) throw std::runtime_error("instance too large");
    const int n = p.width * p.height;
    std::vector<int> rgs(n, 0);
    std::optional<int> best;
    // Restricted growth strings enumerate set partitions exactly once.
    auto color_at = [&](int i) { return p.colors[i]; };
    std::vector<ColorId> class_color(n + 1, -1);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (used > max_classes) return;
        if (i == n) {
            if (best && used >= *best) return;
            CellPartition part;
            part.width = p.width;
            part.height = p.height;
            part.classes = used;
            part.class_of = rgs;
            if (partition_feasible(p, part)) best = used;
            return;
        }
        for (int cls = 0; cls <= used; ++cls) {
            bool fresh = cls == used;
            if (!fresh && class_color[cls] != color_at(i)) continue;
            if (fresh && used + 1 > max_classes) continue;
            rgs[i] = cls;
            if (fresh) class_color[cls] = color_at(i);
            rec(i + 1, used + (fresh ? 1 : 0));
            if (fresh) class_color[cls] = -1;
        }
        rgs[i] = 0;
    };
    rec(0, 0);
    return best;
}

}  // namespace patsforge
