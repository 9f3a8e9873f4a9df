#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "patsforge/canonical.hpp"
#include "patsforge/core.hpp"
#include "patsforge/formula.hpp"
#include "patsforge/gadget.hpp"
#include "patsforge/teval.hpp"
#include "patsforge/verifier.hpp"
#include "testutil.hpp"

#include <random>

using namespace patsforge;

namespace {

// Simulates a rectangle over a tiny tile set; nullopt when it cannot finish.
std::optional<Assembly> tile_rect(const TileSet& ts, int w, int h,
                                  const std::vector<Glue>& west,
                                  const std::vector<Glue>& south) {
    LSeed seed;
    seed.width = w;
    seed.height = h;
    seed.x_north = south;
    seed.y_east = west;
    auto out = simulate(ts, seed);
    if (!std::holds_alternative<Completed>(out)) return std::nullopt;
    return std::get<Completed>(out).assembly;
}

TileSet fig10_triple() {
    CyanTriple c;
    c.north = {0, 0, 1};  // a, a, b
    c.east = {0, 1, 0};
    return c.tile_set();
}

}  // namespace

TEST_CASE("lemma lb4: scaled enumeration finds exactly the published triple") {
    LemmaReport rep = verify_lemma_lb4(7, 4);
    for (const auto& n : rep.notes) MESSAGE(n);
    CHECK(rep.candidates == 64);
    CHECK(rep.survivors.size() == 1);
    CHECK(rep.pass);
    CHECK(isomorphic(rep.survivors[0], fig10_triple()));
}

TEST_CASE("lemma lb4: rejected candidates from the case analysis") {
    // Faithful west copying (east glues mirror wests) pumps immediately.
    CyanTriple case1;
    case1.north = {0, 0, 1};
    case1.east = {0, 0, 1};
    // Flipped propagation: a BCBC column periodicity.
    CyanTriple case2;
    case2.north = {0, 0, 1};  // n3 = b comes from the east assignment below
    case2.east = {1, 1, 0};
    CyanTriple case2n;
    case2n.north = {1, 0, 1};
    case2n.east = {1, 1, 0};
    LemmaReport rep = verify_lemma_lb4(7, 4);
    for (const CyanTriple& c : {case1, case2, case2n}) {
        bool among_survivors = false;
        for (const auto& s : rep.survivors)
            if (isomorphic(s, c.tile_set())) among_survivors = true;
        CHECK_FALSE(among_survivors);
    }
}

TEST_CASE("lemma lb4 normalization: degenerate west patterns fail structurally") {
    // Pairwise distinct west glues make each row a deterministic walk on at
    // most three tiles, so every exposure is eventually periodic with
    // period <= 3 and pre-period <= 3: the aperiodic boundary cannot appear.
    const int W = 18;
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        // three tiles with wests 0,1,2 and random norths/easts
        int n[3], e[3];
        for (int i = 0; i < 3; ++i) {
            n[i] = (int)(rng() % 3);
            e[i] = (int)(rng() % 3);
        }
        // walk one row from a random start and check eventual periodicity
        std::vector<int> row;
        int cur = (int)(rng() % 3);
        for (int i = 0; i < W; ++i) {
            row.push_back(n[cur]);
            cur = e[cur];  // west of the next tile = east of this one
        }
        bool blocked = false;
        for (int p = 1; p <= 3 && !blocked; ++p) {
            bool ok = true;
            for (size_t i = 3; i + p < row.size(); ++i)
                if (row[i] != row[i + p]) ok = false;
            blocked = ok;
        }
        CHECK(blocked);
    }

    // The transposed statement: pairwise-distinct souths make every column a
    // deterministic walk (tile above = function of the tile below), so east
    // exposures pump the same way. All-equal wests force pairwise-distinct
    // souths by directedness, so that family is excluded too.
    for (int trial = 0; trial < 200; ++trial) {
        int n[3], e[3];
        for (int i = 0; i < 3; ++i) {
            n[i] = (int)(rng() % 3);  // norths over 3 tokens = souths' alphabet
            e[i] = (int)(rng() % 3);
        }
        std::vector<int> column;
        int cur = (int)(rng() % 3);
        for (int i = 0; i < W; ++i) {
            column.push_back(e[cur]);
            cur = n[cur];  // south of the next tile = north of this one
        }
        bool blocked = false;
        for (int p = 1; p <= 3 && !blocked; ++p) {
            bool ok = true;
            for (size_t i = 3; i + p < column.size(); ++i)
                if (column[i] != column[i + p]) ok = false;
            blocked = ok;
        }
        CHECK(blocked);
    }
}

TEST_CASE("lemma lb3: unique forced labeling") {
    LemmaReport rep = verify_lemma_lb3();
    for (const auto& n : rep.notes) MESSAGE(n);
    CHECK(rep.pass);
    REQUIRE(rep.survivors.size() == 1);

    TileSet expected;
    auto add = [&](const char* name, ColorId col, const char* n, const char* w,
                   const char* s, const char* e) {
        TileType t;
        t.name = name;
        t.color = col;
        t.north = Glue(n);
        t.west = Glue(w);
        t.south = Glue(s);
        t.east = Glue(e);
        expected.types.push_back(t);
    };
    add("t1", color::ce, "0", "a", "0", "a");
    add("t2", color::ce, "0", "b", "0", "b");
    add("t3", color::yellow, "0", "a", "1", "b");
    add("t4", color::yellow, "1", "b", "1", "b");
    CHECK(isomorphic(rep.survivors[0], expected));
}

TEST_CASE("check_lemma_exactly2 on the evaluation set") {
    TileSet te = t_eval();
    CHECK(check_lemma_exactly2(te, color::init));
    CHECK(check_lemma_exactly2(te, color::white));
    CHECK(check_lemma_exactly2(te, color::black));
    CHECK_THROWS_WITH_AS(check_lemma_exactly2(te, color::ce), doctest::Contains("!= 2"),
                         std::runtime_error);

    TileSet bad = te;
    // force equal easts on the two whites
    bad.types[teval_index("t_wt")].east = Glue("f");
    CHECK_FALSE(check_lemma_exactly2(bad, color::white));
}

TEST_CASE("property 2 on gadget and circuit assemblies") {
    static GadgetBlueprint bp = build_blueprint(7, 4);
    Assembly g = assemble_gadget(bp);
    CHECK(check_property2(g));

    Formula f = testutil::phi_ex();
    auto out = simulate(t_eval(), build_circuit_seed(f, parse_assignment("FFTT"), 3));
    REQUIRE(std::holds_alternative<Completed>(out));
    CHECK(check_property2(std::get<Completed>(out).assembly));  // vacuous: no yellow

    // Hand-built violation: a lone yellow-CEff pair in a 2x1 strip.
    TileSet two;
    two.types = {t_eval()[teval_index("t_y")], t_eval()[teval_index("t_CEff")]};
    // t_y east is s but t_CEff west is f: cannot even attach, so build the
    // violating strip directly instead of by simulation.
    Assembly fake;
    fake.tiles = two;
    fake.width = 2;
    fake.height = 1;
    fake.cells = {0, 1};
    CHECK_FALSE(check_property2(fake));
    // and indeed no tile of the evaluation set fills (west s, south F) but t_CEss
    auto ids = attachable(t_eval(), Glue("s"), Glue("F"));
    REQUIRE(ids.size() == 1);
    CHECK(t_eval()[ids[0]].name == "t_CEss");
}

TEST_CASE("zigzag: the spurious triple never stacks two east signals") {
    TileSet trip = fig10_triple();
    const Glue one("1"), a("a");
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int w = 2 + (int)(rng() % 9), h = 2 + (int)(rng() % 9);
        // grow from all-a south and a west word without adjacent 1 glues
        std::vector<Glue> west;
        bool prev1 = false;
        for (int y = 0; y < h; ++y) {
            bool put1 = !prev1 && (rng() % 3 == 0);
            west.push_back(put1 ? Glue("1") : Glue("0"));
            prev1 = put1;
        }
        auto a_opt = tile_rect(trip, w, h, west, std::vector<Glue>(w, a));
        if (!a_opt) continue;  // some words jam on the west edge; irrelevant here
        CHECK(check_zigzag(*a_opt, one));
    }
    // single B tile
    TileSet bonly;
    bonly.types = {trip[1]};
    auto one_b = tile_rect(bonly, 1, 1, {trip[1].west}, {trip[1].south});
    REQUIRE(one_b.has_value());
    CHECK(check_zigzag(*one_b, one));
    // B directly above B is already impossible by glue mismatch
    CHECK(trip[1].north != trip[1].south);
}
