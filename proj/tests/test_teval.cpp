#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "patsforge/core.hpp"
#include "patsforge/io.hpp"
#include "patsforge/teval.hpp"

#include <fstream>
#include <set>

using namespace patsforge;

TEST_CASE("census matches the published per-color counts") {
    auto census = color_census(t_eval());
    std::map<ColorId, int> expected = {
        {color::cyan, 4}, {color::ce, 3},        {color::white, 2},
        {color::black, 2}, {color::dgnl_white, 2}, {color::dgnl_black, 2},
        {color::init, 2}, {color::sat, 1},       {color::yellow, 1},
        {color::red, 1},  {color::blue, 1},
    };
    CHECK(census == expected);
    CHECK(color_census(TileSet{}).empty());
}

TEST_CASE("directed with all west/south pairs unique") {
    TileSet te = t_eval();
    CHECK(te.size() == 21);
    CHECK(is_directed(te));
    std::set<std::pair<uint32_t, uint32_t>> pairs;
    for (const auto& t : te.types) pairs.insert({t.west.id(), t.south.id()});
    CHECK(pairs.size() == 21);
}

TEST_CASE("glue alphabet has 8 symbols") {
    std::set<std::string> glues;
    for (const auto& t : t_eval().types) {
        glues.insert(t.north.symbol());
        glues.insert(t.west.symbol());
        glues.insert(t.south.symbol());
        glues.insert(t.east.symbol());
    }
    CHECK(glues == std::set<std::string>{"F", "T", "c", "f", "n", "s", "t", "v"});
}

TEST_CASE("cyan tiles pass signals straight through") {
    for (const auto& t : t_eval().types)
        if (t.color == color::cyan) {
            CHECK(t.north == t.south);
            CHECK(t.west == t.east);
        }
}

TEST_CASE("CE transition table") {
    TileSet te = t_eval();
    auto the_one = [&](const char* w, const char* s) {
        auto ids = attachable(te, Glue(w), Glue(s));
        REQUIRE(ids.size() == 1);
        return te[ids[0]];
    };
    CHECK(the_one("f", "F").east.symbol() == "f");  // unsatisfied passes through
    CHECK(the_one("f", "T").east.symbol() == "s");  // first true literal
    CHECK(the_one("s", "F").east.symbol() == "s");  // satisfied stays satisfied
    // A second true literal has no CE tile to take it; only yellow fits there.
    auto ids = attachable(te, Glue("s"), Glue("T"));
    REQUIRE(ids.size() == 1);
    CHECK(te[ids[0]].color == color::yellow);
    for (int i : ids) CHECK(te[i].color != color::ce);
}

TEST_CASE("DGNL tiles mirror the assignment northward and lowercase eastward") {
    TileSet te = t_eval();
    const TileType& bF = te[teval_index("t_DGNLbF")];
    const TileType& bT = te[teval_index("t_DGNLbT")];
    CHECK(bF.north.symbol() == "F");
    CHECK(bF.west.symbol() == "F");
    CHECK(bT.north.symbol() == "T");
    CHECK(bT.west.symbol() == "T");
    CHECK(bF.east.symbol() == "f");
    CHECK(bT.east.symbol() == "t");
    const TileType& wF = te[teval_index("t_DGNLwF")];
    const TileType& wT = te[teval_index("t_DGNLwT")];
    CHECK(wF.east.symbol() == "f");
    CHECK(wT.east.symbol() == "t");
    // white crossovers discard the signal northward
    CHECK(wF.north.symbol() == "F");
    CHECK(wT.north.symbol() == "F");
}

TEST_CASE("half-adder census") {
    TileSet ha;
    auto add = [&](const char* n, const char* w, const char* s, const char* e, ColorId c) {
        TileType t;
        t.north = Glue(n);
        t.west = Glue(w);
        t.south = Glue(s);
        t.east = Glue(e);
        t.color = c;
        ha.types.push_back(t);
    };
    add("0", "0", "0", "0", color::white);
    add("1", "1", "0", "0", color::black);
    add("1", "0", "1", "0", color::black);
    add("0", "1", "1", "1", color::white);
    auto census = color_census(ha);
    CHECK(census == std::map<ColorId, int>{{color::white, 2}, {color::black, 2}});
}

TEST_CASE("bundled tileset file matches the in-code catalog") {
    TileSet disk = load_tileset(std::string(PATSFORGE_DATA_DIR) + "/teval.tiles");
    TileSet code = t_eval();
    REQUIRE(disk.size() == code.size());
    for (size_t i = 0; i < code.size(); ++i) {
        CHECK(disk[i].same_record(code[i]));
        CHECK(disk[i].name == code[i].name);
    }
}
