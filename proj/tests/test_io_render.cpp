#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "patsforge/formula.hpp"
#include "patsforge/io.hpp"
#include "patsforge/painter.hpp"
#include "patsforge/render.hpp"
#include "patsforge/teval.hpp"
#include "testutil.hpp"

#include <fstream>
#include <random>
#include <sstream>

using namespace patsforge;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Pattern random_pattern(std::mt19937& rng) {
    Pattern p;
    p.width = 1 + (int)(rng() % 6);
    p.height = 1 + (int)(rng() % 6);
    std::uniform_int_distribution<int> cd(0, 4);
    for (int i = 0; i < p.width * p.height; ++i) p.colors.push_back(cd(rng));
    return p;
}

LSeed random_seed(std::mt19937& rng) {
    const char* toks[] = {"F", "T", "f", "t", "s", "c", "n", "v"};
    LSeed s;
    s.width = 1 + (int)(rng() % 5);
    s.height = 1 + (int)(rng() % 5);
    for (int i = 0; i < s.width; ++i) s.x_north.push_back(Glue(toks[rng() % 8]));
    for (int i = 0; i < s.height; ++i) s.y_east.push_back(Glue(toks[rng() % 8]));
    return s;
}

}  // namespace

TEST_CASE("round trips: tileset, seed, pattern, formula") {
    std::mt19937 rng(3);
    // tileset round trip on the catalog
    {
        std::istringstream is(to_string(t_eval()));
        TileSet back = read_tileset(is);
        REQUIRE(back.size() == 21);
        for (size_t i = 0; i < back.size(); ++i) CHECK(back[i].same_record(t_eval()[i]));
    }
    for (int t = 0; t < 40; ++t) {
        LSeed s = random_seed(rng);
        std::istringstream is(to_string(s));
        LSeed back = read_seed(is);
        CHECK(back.x_north == s.x_north);
        CHECK(back.y_east == s.y_east);

        Pattern p = random_pattern(rng);
        std::istringstream ps(to_string(p));
        Pattern pback = read_pattern(ps);
        CHECK(pback == p);

        Formula f = testutil::random_formula(rng);
        std::ostringstream fo;
        write_formula(fo, f);
        Formula fback = parse_formula(fo.str());
        CHECK(fback.m == f.m);
        CHECK(fback.clauses == f.clauses);
    }
}

TEST_CASE("comments and malformed input") {
    std::istringstream ok("# header comment\nseed 2 1\nx: a b # trailing\ny: c\n");
    LSeed s = read_seed(ok);
    CHECK(s.width == 2);
    CHECK(s.y_east[0].symbol() == "c");

    std::istringstream bad("pattern 2 1 9\n0 1\n");
    CHECK_THROWS_AS(read_pattern(bad), std::runtime_error);
    std::istringstream eof("tileset 2\ntile a 0 x x x x\n");
    CHECK_THROWS_AS(read_tileset(eof), std::runtime_error);
}

TEST_CASE("ascii render is deterministic with one glyph per cell") {
    Pattern p;
    p.width = 1;
    p.height = 1;
    p.colors = {color::red};
    RenderSpec spec = RenderSpec::teval_defaults();
    CHECK(render(p, spec) == "R\n");
    Formula f = testutil::phi_ex();
    Pattern circ = paint_circuit(f, 3);
    std::string once = render(circ, spec);
    std::string twice = render(circ, spec);
    CHECK(once == twice);
    CHECK(once.size() == (size_t)(circ.width + 1) * circ.height);
}

TEST_CASE("fig-3 circuit matches the golden render") {
    Formula f = testutil::phi_ex();
    Pattern circ = paint_circuit(f, 3);
    std::string golden = slurp(std::string(PATSFORGE_DATA_DIR) + "/fig3_circuit.ascii");
    CHECK(render(circ, RenderSpec::teval_defaults()) == golden);
}

TEST_CASE("missing palette entries are reported") {
    Pattern p;
    p.width = 1;
    p.height = 1;
    p.colors = {42};
    CHECK_THROWS_WITH_AS(render(p, RenderSpec::teval_defaults()),
                         doctest::Contains("missing palette"), std::runtime_error);
    // for_pattern synthesizes glyphs for unknown colors
    CHECK_NOTHROW(render(p, RenderSpec::for_pattern(p, RenderSpec::Format::ascii)));
}

TEST_CASE("ppm and svg renders") {
    Pattern p;
    p.width = 2;
    p.height = 1;
    p.colors = {color::red, color::blue};
    std::string ppm = render(p, RenderSpec::teval_defaults(RenderSpec::Format::ppm));
    CHECK(ppm.substr(0, 2) == "P6");
    CHECK(ppm.size() == std::string("P6\n2 1\n255\n").size() + 6);
    std::string svg = render(p, RenderSpec::teval_defaults(RenderSpec::Format::svg));
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("rect") != std::string::npos);
}
