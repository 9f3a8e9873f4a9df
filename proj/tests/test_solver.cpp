#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "patsforge/core.hpp"
#include "patsforge/solver.hpp"
#include "patsforge/teval.hpp"

#include <random>

using namespace patsforge;

namespace {

Pattern make(int w, int h, std::initializer_list<int> rows_top_first) {
    Pattern p;
    p.width = w;
    p.height = h;
    p.colors.assign((size_t)w * h, 0);
    auto it = rows_top_first.begin();
    for (int y = h; y >= 1; --y)
        for (int x = 1; x <= w; ++x) p.at(x, y) = *it++;
    return p;
}

TileSet half_adder() {
    auto mk = [](const char* n, const char* w, const char* s, const char* e, int c) {
        TileType t;
        t.north = Glue(n);
        t.west = Glue(w);
        t.south = Glue(s);
        t.east = Glue(e);
        t.color = c;
        return t;
    };
    TileSet ts;
    ts.types = {mk("0", "0", "0", "0", 0), mk("1", "1", "0", "0", 1),
                mk("1", "0", "1", "0", 1), mk("0", "1", "1", "1", 0)};
    return ts;
}

Pattern counter_pattern() {
    Pattern p;
    p.width = 5;
    p.height = 9;
    p.colors.assign(45, 0);
    for (int y = 1; y <= 9; ++y)
        for (int x = 1; x <= 5; ++x) p.at(x, y) = (y >> (x - 1)) & 1;
    return p;
}

// verifies witness soundness independently of the solver internals
void check_witness(const Pattern& p, const SolverWitness& w) {
    CHECK(is_directed(w.tiles));
    auto out = simulate(w.tiles, w.seed);
    REQUIRE(std::holds_alternative<Completed>(out));
    CHECK(pattern_of(std::get<Completed>(out).assembly) == p);
}

Pattern random_pattern(std::mt19937& rng, int w, int h, int colors) {
    Pattern p;
    p.width = w;
    p.height = h;
    std::uniform_int_distribution<int> cd(0, colors - 1);
    for (int i = 0; i < w * h; ++i) p.colors.push_back(cd(rng));
    return p;
}

}  // namespace

TEST_CASE("partition_feasible accepts the half-adder partition of the counter") {
    LSeed seed;
    seed.width = 5;
    seed.height = 9;
    seed.x_north.assign(5, Glue("0"));
    seed.y_east.assign(9, Glue("1"));
    auto out = simulate(half_adder(), seed);
    REQUIRE(std::holds_alternative<Completed>(out));
    const Assembly& a = std::get<Completed>(out).assembly;

    CellPartition part;
    part.width = 5;
    part.height = 9;
    part.classes = 4;
    part.class_of = a.cells;  // tile identity as the class
    Pattern p = pattern_of(a);
    auto w = partition_feasible(p, part);
    REQUIRE(w.has_value());
    CHECK(w->size == 4);
    check_witness(p, *w);
}

TEST_CASE("partition_feasible rejects color violations") {
    Pattern p = make(2, 1, {0, 1});
    CellPartition part;
    part.width = 2;
    part.height = 1;
    part.classes = 1;
    part.class_of = {0, 0};
    CHECK_FALSE(partition_feasible(p, part).has_value());
}

TEST_CASE("fully hardcoded partitions are feasible") {
    Pattern p = make(2, 2, {0, 1, 1, 0});
    CellPartition part;
    part.width = 2;
    part.height = 2;
    part.classes = 4;
    part.class_of = {0, 1, 2, 3};
    auto w = partition_feasible(p, part);
    REQUIRE(w.has_value());
    check_witness(p, *w);
}

TEST_CASE("brute force oracle on tiny patterns") {
    CHECK(brute_force_min(make(2, 1, {0, 1}), 4) == 2);
    CHECK(brute_force_min(make(1, 5, {3, 3, 3, 3, 3}), 4) == 1);
    // 2x2 checkerboard: the alternating 2-class partition is feasible
    CHECK(brute_force_min(make(2, 2, {0, 1, 1, 0}), 4) == 2);
    Pattern big;
    big.width = 4;
    big.height = 4;
    big.colors.assign(16, 0);
    CHECK_THROWS_WITH_AS(brute_force_min(big, 4), doctest::Contains("too large"),
                         std::runtime_error);
}

TEST_CASE("min_tileset on simple shapes") {
    auto uniform = min_tileset(make(3, 3, {0, 0, 0, 0, 0, 0, 0, 0, 0}));
    REQUIRE(uniform.has_value());
    CHECK(uniform->size == 1);

    auto checker = min_tileset(make(2, 2, {0, 1, 1, 0}));
    REQUIRE(checker.has_value());
    CHECK(checker->size == 2);
    check_witness(make(2, 2, {0, 1, 1, 0}), *checker);
}

TEST_CASE("binary counter solves to 4 types") {
    Pattern p = counter_pattern();
    SolveOptions opt;
    opt.budget = 6;
    auto w = min_tileset(p, opt);
    REQUIRE(w.has_value());
    CHECK(w->size == 4);
    check_witness(p, *w);
}

TEST_CASE("solver equals the oracle on random small patterns") {
    std::mt19937 rng(2025);
    for (int t = 0; t < 60; ++t) {
        int w = 1 + (int)(rng() % 3), h = 1 + (int)(rng() % 3);
        Pattern p = random_pattern(rng, w, h, 1 + (int)(rng() % 3));
        auto exact = min_tileset(p, {12, 10000000});
        auto oracle = brute_force_min(p, 12);
        REQUIRE(exact.has_value());
        REQUIRE(oracle.has_value());
        CHECK(exact->size == *oracle);
        check_witness(p, *exact);
    }
}

TEST_CASE("budget cuts off the search") {
    Pattern p = make(2, 1, {0, 1});
    SolveOptions opt;
    opt.budget = 1;
    CHECK_FALSE(min_tileset(p, opt).has_value());
}

TEST_CASE("node limit reports exceeded searches") {
    Pattern p = counter_pattern();
    SolveOptions opt;
    opt.node_limit = 50;
    CHECK_THROWS_WITH_AS(min_tileset(p, opt), doctest::Contains("exceeded"),
                         std::runtime_error);
}

TEST_CASE("merging two colors never increases the minimum") {
    std::mt19937 rng(77);
    for (int t = 0; t < 15; ++t) {
        Pattern p = random_pattern(rng, 3, 3, 3);
        auto before = min_tileset(p, {12, 10000000});
        Pattern merged = p;
        for (ColorId& c : merged.colors)
            if (c == 2) c = 0;
        auto after = min_tileset(merged, {12, 10000000});
        REQUIRE(before.has_value());
        REQUIRE(after.has_value());
        CHECK(after->size <= before->size);
    }
}

TEST_CASE("solver results are deterministic") {
    std::mt19937 rng(99);
    Pattern p = random_pattern(rng, 3, 3, 2);
    auto a = min_tileset(p);
    auto b = min_tileset(p);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->size == b->size);
    for (size_t i = 0; i < a->tiles.types.size(); ++i)
        CHECK(a->tiles[i].same_record(b->tiles[i]));
}
