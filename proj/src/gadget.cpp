/*
 * Gadget layout. The blueprint is two seed glue words; everything else is
 * forced by the evaluation tile set. Columns fall into five kinds, keyed by
 * their x-axis glue:
 *
 *   c  signal column: red/blue over uppercase input, Init over lowercase,
 *      flipping the case east of it; a single Sat (fed west glue s) retires
 *      it into CE/cyan rows with north F.
 *   F  crossbar column: cyan over F/T, CE over f/s; never needs retiring.
 *   T  vertical-T column: cyan until the first lowercase f arrives, which
 *      folds it into a CEfs and regenerates an s one column east.
 *   n  crossover column: white below its first uppercase arrival, one
 *      DGNL-white there, cyan above; used for template diagonals and to
 *      absorb stray uppercase tails.
 *   v  black analogue of n; DGNL-black reflects a T vertically.
 *
 * The y word drives the schedule: the boundary word rows, then one s per
 * unretired signal column (west to east), f rows to fold the vertical-T
 * columns (each also delivers one s via its fold), then per template block
 * four bit rows followed by four retire rows. The generator lays columns
 * against a live simulation and refuses to emit a blueprint whose east face
 * is not f/t below a single top F.
 */

#include "patsforge/gadget.hpp"

#include "patsforge/teval.hpp"
#include "patsforge/verifier.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace patsforge {

namespace {

const Glue gF("F"), gT("T"), gc("c"), gf("f"), gt("t"), gs("s"), gn("n"), gv("v");

// The eight one-eighths in their published order; the low two bits of every
// instance in the eighth are fixed by its name.
struct EighthPlan {
    const char* name;
    bool black;
    bool b1, b2;
};
constexpr EighthPlan kEighths[8] = {
    {"wFF", false, false, false}, {"wFT", false, false, true},
    {"wTF", false, true, false},  {"wTT", false, true, true},
    {"bTT", true, true, true},    {"bTF", true, true, false},
    {"bFT", true, false, true},   {"bFF", true, false, false},
};

std::array<bool, 4> block_bits(int k) {  // k = 0..31
    const EighthPlan& e = kEighths[k / 4];
    bool hi[4][2] = {{false, false}, {false, true}, {true, false}, {true, true}};
    return {e.b1, e.b2, hi[k % 4][0], hi[k % 4][1]};
}

// Grows an assembly eastward one full column at a time. The east face is all
// later columns ever see, so group-by-group construction is exact.
struct ColumnGrower {
    TileSet ts;
    int height;
    std::vector<Glue> face;                 // current east face, rows 1..H
    std::vector<std::vector<int>> columns;  // placed tile indices per column
    std::map<std::pair<uint32_t, uint32_t>, int> lookup;

    ColumnGrower(const TileSet& set, const std::vector<Glue>& y_east)
        : ts(set), height((int)y_east.size()), face(y_east) {
        for (size_t i = 0; i < ts.types.size(); ++i)
            lookup[{ts.types[i].west.id(), ts.types[i].south.id()}] = (int)i;
    }

    void add_column(Glue x_north) {
        std::vector<int> col(height);
        Glue south = x_north;
        for (int y = 1; y <= height; ++y) {
            auto it = lookup.find({face[y - 1].id(), south.id()});
            if (it == lookup.end()) {
                std::ostringstream os;
                os << "gadget layout stuck at column " << columns.size() + 1 << ", row "
                   << y << ": west=" << face[y - 1].symbol() << " south=" << south.symbol();
                throw std::runtime_error(os.str());
            }
            col[y - 1] = it->second;
            face[y - 1] = ts.types[it->second].east;
            south = ts.types[it->second].north;
        }
        columns.push_back(std::move(col));
    }

    int width() const { return (int)columns.size(); }
    const TileType& tile(int x, int y) const { return ts.types[columns[x - 1][y - 1]]; }
};

}  // namespace

Lb4Boundary lb4_boundary(int c, int r) {
    if (c < 1 || r < 1) throw std::runtime_error("lb4_boundary: c and r must be >= 1");
    Lb4Boundary b;
    auto push = [](std::vector<ColorId>& v, ColorId col, int n) {
        v.insert(v.end(), n, col);
    };
    push(b.top, color::sat, 1);
    push(b.top, color::red, 1);
    push(b.top, color::ce, 2);
    push(b.top, color::yellow, 3);
    push(b.top, color::ce, 1);
    push(b.top, color::yellow, 2);
    push(b.top, color::ce, c);
    push(b.top, color::yellow, 1);
    push(b.top, color::ce, 2);
    push(b.top, color::sat, 1);
    push(b.right, color::red, 2);
    push(b.right, color::blue, 2 * r - 1);
    push(b.right, color::red, 2 * r - 1);
    push(b.right, color::blue, 2);
    push(b.right, color::sat, 1);
    return b;
}

TemplateInstance template_instance(bool black, const std::array<bool, 4>& bits) {
    LSeed seed;
    seed.width = 6;
    seed.height = 4;
    Glue south = black ? gv : gn;
    seed.x_north = {south, south, south, south, gc, gc};
    for (bool b : bits) seed.y_east.push_back(b ? gT : gF);
    auto out = simulate(t_eval(), seed);
    if (!std::holds_alternative<Completed>(out))
        throw std::runtime_error("template instance failed to assemble");
    TemplateInstance inst;
    inst.black = black;
    inst.bits = bits;
    inst.assembly = std::get<Completed>(out).assembly;
    inst.pattern = pattern_of(inst.assembly);
    return inst;
}

GadgetBlueprint build_blueprint(int c, int r) {
    if (c < 1 || r < 2) throw std::runtime_error("build_blueprint: need c >= 1, r >= 2");
    const int q = 4 * r + 2;          // height of the LB4 red/blue words
    const int lb4_w = c + 14;         // LB4 width including both Sat corners
    const int R1 = q + 12;            // first staircase bit row
    const int H = R1 + 8 * 32 + 2;    // blocks, two f buffer rows, top F row

    // ---- y-axis word ----
    std::vector<Glue> y;
    y.insert(y.end(), 2, gF);
    y.insert(y.end(), 2 * r - 1, gT);
    y.insert(y.end(), 2 * r - 1, gF);
    y.insert(y.end(), 2, gT);
    // The q+1 row is the LB4 top word itself: its Sat corners cap column 1
    // and, via the regenerated s, the right column and the red-CE-Sat motif
    // column. Two more s rows, six retiring f rows and two trailing s rows
    // cap everything else in the leftmost and middle parts.
    y.insert(y.end(), 3, gs);
    y.insert(y.end(), 6, gf);
    y.insert(y.end(), 2, gs);
    for (int k = 0; k < 32; ++k) {
        auto bits = block_bits(k);
        int p = 0;
        for (bool b : bits)
            if (b && kEighths[k / 4].black) ++p;
        for (bool b : bits) y.push_back(b ? gT : gF);
        y.insert(y.end(), p, gf);      // one kill row per black vertical
        y.insert(y.end(), 4 - p, gs);  // remaining caps for the block's c columns
    }
    y.insert(y.end(), 2, gf);
    y.push_back(gF);
    if ((int)y.size() != H) throw std::runtime_error("gadget y word height mismatch");

    // ---- x-axis word, laid out group by group against a live simulation ----
    ColumnGrower grow(t_eval(), y);
    std::vector<Glue> x;
    auto add = [&](Glue g) {
        x.push_back(g);
        grow.add_column(g);
    };

    // LB4: red/blue column, Init column, cyan crossbar, red/blue column.
    std::set<int> t_cols = {4, 5, 6, 7, 9, 10, 11 + c};
    add(gc);
    add(gc);
    for (int col = 3; col <= 13 + c; ++col) add(t_cols.count(col) ? gT : gF);
    add(gc);

    // Middle part: the Init sandwich, then the motif groups.
    add(gc);  // Init column of the sandwich
    add(gc);  // red/blue column whose west neighbours are all Init
    add(gc);  // Init; carries red at the LB4 top row
    add(gT);  // vertical T that folds into the red-CE-Sat cells
    add(gc);
    add(gc);  // red of red-CE-Init-red
    add(gF);
    add(gc);
    add(gc);
    add(gc);  // blue of blue-white-Init-cyan-blue
    add(gn);
    add(gc);
    add(gF);
    add(gc);

    // Tail absorbers: one crossover column per uppercase row left below the
    // staircase. The face tells us exactly how many are needed.
    auto upper_rows_below = [&](int limit) {
        int count = 0;
        for (int yy = 1; yy <= limit; ++yy)
            if (grow.face[yy - 1] == gF || grow.face[yy - 1] == gT) ++count;
        return count;
    };
    int absorbers = 0;
    while (upper_rows_below(R1 - 1) > 0) {
        add(gn);
        if (++absorbers > 12) throw std::runtime_error("gadget absorber count diverged");
    }

    // Staircase: 32 blocks of 4 crossover columns, 4 signal columns and 2
    // absorbers; block k parks its template on rows R1+8k .. R1+8k+3.
    std::vector<int> block_x;
    for (int k = 0; k < 32; ++k) {
        block_x.push_back((int)x.size() + 1);
        Glue palette = kEighths[k / 4].black ? gv : gn;
        for (int i = 0; i < 4; ++i) add(palette);
        for (int i = 0; i < 4; ++i) add(gc);
        add(gn);
        add(gn);
    }

    // East face guard: the staircase's signal columns re-lowercase every bit
    // row on the way out, so nothing should remain uppercase here. If a
    // layout change ever leaks one, absorb it the same way as a tail.
    int flippers = 0;
    while (upper_rows_below(H - 1) > 0) {
        add(gn);
        if (++flippers > 8 * 32) throw std::runtime_error("gadget normalizer diverged");
    }
    for (int yy = 1; yy < H; ++yy)
        if (!(grow.face[yy - 1] == gf || grow.face[yy - 1] == gt))
            throw std::runtime_error("gadget east face is not lowercase at row " +
                                     std::to_string(yy));
    if (!(grow.face[H - 1] == gF))
        throw std::runtime_error("gadget east face must end with F");

    GadgetBlueprint bp;
    bp.c = c;
    bp.r = r;
    bp.width = (int)x.size();
    bp.height = H;
    bp.seed.width = bp.width;
    bp.seed.height = H;
    bp.seed.x_north = x;
    bp.seed.y_east = y;

    bp.regions.push_back({"lb4", Box{1, 1, lb4_w, q + 1}});
    bp.regions.push_back({"leftmost", Box{1, 1, lb4_w, H}});
    bp.regions.push_back({"middle", Box{lb4_w + 1, 1, block_x[0] - 1, H}});
    for (int g = 0; g < 8; ++g) {
        int first = 4 * g, last = 4 * g + 3;
        Box box{block_x[first], R1 + 8 * first, block_x[last] + 5, R1 + 8 * last + 3};
        bp.regions.push_back({std::string("eighth_") + kEighths[g].name, box});
    }
    bp.regions.push_back({"joint_anchor", Box{bp.width, H, bp.width, H}});

    bp.motifs.push_back({"m_rowtop", {2, q + 1}});
    bp.motifs.push_back({"m_yellowstack", {c + 10, q + 3}});
    bp.motifs.push_back({"m_initcol", {c + 15, 1}});
    bp.motifs.push_back({"m_redcesat", {c + 17, q + 1}});
    bp.motifs.push_back({"m_rcir", {c + 20, q + 1}});
    bp.motifs.push_back({"m_bwicb", {c + 24, 3}});
    return bp;
}

std::optional<Box> GadgetBlueprint::region(const std::string& name) const {
    for (const auto& [n, box] : regions)
        if (n == name) return box;
    return std::nullopt;
}

Assembly assemble_gadget(const GadgetBlueprint& bp) {
    auto out = simulate(t_eval(), bp.seed);
    if (std::holds_alternative<Stuck>(out)) {
        const auto& st = std::get<Stuck>(out);
        std::ostringstream os;
        os << "blueprint invalid: stuck at (" << st.x << "," << st.y
           << "): west=" << st.west.symbol() << " south=" << st.south.symbol();
        throw std::runtime_error(os.str());
    }
    if (std::holds_alternative<Ambiguous>(out)) {
        const auto& am = std::get<Ambiguous>(out);
        std::ostringstream os;
        os << "blueprint invalid: ambiguous at (" << am.x << "," << am.y << ")";
        throw std::runtime_error(os.str());
    }
    return std::get<Completed>(out).assembly;
}

ExposureReport check_exposures(const Assembly& a) {
    ExposureReport rep;
    rep.north_ok = true;
    rep.east_ok = true;
    auto north = north_exposure(a);
    for (int xx = 1; xx <= a.width; ++xx)
        if (!(north[xx - 1] == gF)) {
            rep.north_ok = false;
            rep.first_bad_north = xx;
            break;
        }
    auto east = east_exposure(a);
    for (int yy = 1; yy <= a.height; ++yy) {
        bool ok = (yy == a.height) ? east[yy - 1] == gF
                                   : (east[yy - 1] == gf || east[yy - 1] == gt);
        if (!ok) {
            rep.east_ok = false;
            rep.first_bad_east = yy;
            break;
        }
    }
    return rep;
}

MotifSpec motif_spec(const std::string& name, int /*c*/, int r) {
    auto grid = [](int w, int h, std::vector<ColorId> colors,
                   std::vector<std::string> tiles) {
        MotifSpec m;
        m.width = w;
        m.height = h;
        m.colors = std::move(colors);
        m.tile_names = std::move(tiles);
        return m;
    };
    if (name == "m_rowtop")
        return grid(4, 1, {color::red, color::ce, color::ce, color::yellow},
                    {"t_F", "t_CEff", "t_CEfs", "t_y"});
    if (name == "m_redcesat")
        return grid(3, 1, {color::red, color::ce, color::sat}, {"t_F", "t_CEfs", "t_Sat"});
    if (name == "m_rcir")
        return grid(4, 1, {color::red, color::ce, color::init, color::red},
                    {"t_F", "t_CEff", "t_InitF", "t_F"});
    if (name == "m_bwicb")
        return grid(5, 1, {color::blue, color::white, color::init, color::cyan, color::blue},
                    {"t_T", "t_wt", "t_InitT", "t_sbTF", "t_T"});
    if (name == "m_yellowstack") {
        MotifSpec m;
        m.width = 2;
        m.height = 7;
        for (int row = 0; row < 6; ++row) {
            m.colors.insert(m.colors.end(), {color::ce, color::yellow});
            m.tile_names.insert(m.tile_names.end(), {"t_CEss", "t_y"});
        }
        m.colors.insert(m.colors.end(), {color::ce, color::ce});
        m.tile_names.insert(m.tile_names.end(), {"t_CEff", "t_CEfs"});
        return m;
    }
    if (name == "m_initcol") {
        // Init column beside the red/blue column: 2 red and 2r-1 blue at the
        // bottom, then the hardcoded red at height 2r+2.
        MotifSpec m;
        m.width = 2;
        m.height = 2 * r + 2;
        auto row = [&](const char* init, const char* rb, ColorId col) {
            m.colors.insert(m.colors.end(), {color::init, col});
            m.tile_names.insert(m.tile_names.end(), {init, rb});
        };
        row("t_InitF", "t_F", color::red);
        row("t_InitF", "t_F", color::red);
        for (int i = 0; i < 2 * r - 1; ++i) row("t_InitT", "t_T", color::blue);
        row("t_InitF", "t_F", color::red);
        return m;
    }
    throw std::runtime_error("unknown motif: " + name);
}

namespace {

bool motif_matches(const Assembly& a, int x0, int y0, const MotifSpec& m,
                   std::string* why) {
    if (x0 < 1 || y0 < 1 || x0 + m.width - 1 > a.width || y0 + m.height - 1 > a.height) {
        if (why) *why = "anchor out of bounds";
        return false;
    }
    for (int dy = 0; dy < m.height; ++dy)
        for (int dx = 0; dx < m.width; ++dx) {
            const TileType& t = a.tile_at(x0 + dx, y0 + dy);
            size_t idx = (size_t)dy * m.width + dx;
            if (t.color != m.colors[idx] || t.name != m.tile_names[idx]) {
                if (why) {
                    std::ostringstream os;
                    os << "cell (" << x0 + dx << "," << y0 + dy << ") is " << t.name
                       << ", expected " << m.tile_names[idx];
                    *why = os.str();
                }
                return false;
            }
        }
    return true;
}

bool instance_occurs(const Assembly& a, const Box& box, const TemplateInstance& inst) {
    for (int y0 = box.y0; y0 + 3 <= box.y1; ++y0)
        for (int x0 = box.x0; x0 + 5 <= box.x1; ++x0) {
            bool match = true;
            for (int dy = 0; dy < 4 && match; ++dy)
                for (int dx = 0; dx < 6 && match; ++dx)
                    if (a.at(x0 + dx, y0 + dy) != inst.assembly.at(1 + dx, 1 + dy))
                        match = false;
            if (match) return true;
        }
    return false;
}

}  // namespace

BlueprintReport validate_blueprint(const GadgetBlueprint& bp) {
    BlueprintReport rep;
    Assembly a;
    try {
        a = assemble_gadget(bp);
    } catch (const std::exception& e) {
        rep.fail(e.what());
        return rep;
    }

    auto exp = check_exposures(a);
    if (!exp.north_ok)
        rep.fail("north exposure not all F (first bad column " +
                 std::to_string(exp.first_bad_north) + ")");
    if (!exp.east_ok)
        rep.fail("east exposure not f/t+F (first bad row " +
                 std::to_string(exp.first_bad_east) + ")");

    auto lb4 = bp.region("lb4");
    if (!lb4) {
        rep.fail("no lb4 region");
    } else {
        Lb4Boundary want = lb4_boundary(bp.c, bp.r);
        if (lb4->x1 - lb4->x0 + 1 != (int)want.top.size() ||
            lb4->y1 - lb4->y0 + 1 != (int)want.right.size())
            rep.fail("lb4 region dimensions do not match the boundary words");
        else {
            for (int i = 0; i < (int)want.top.size(); ++i)
                if (a.tile_at(lb4->x0 + i, lb4->y1).color != want.top[i]) {
                    rep.fail("lb4 top row mismatch at offset " + std::to_string(i));
                    break;
                }
            for (int i = 0; i < (int)want.right.size(); ++i)
                if (a.tile_at(lb4->x1, lb4->y0 + i).color != want.right[i]) {
                    rep.fail("lb4 right column mismatch at offset " + std::to_string(i));
                    break;
                }
        }
    }

    for (const auto& [name, anchor] : bp.motifs) {
        std::string why;
        if (!motif_matches(a, anchor.first, anchor.second, motif_spec(name, bp.c, bp.r),
                           &why))
            rep.fail("motif " + name + ": " + why);
    }

    // The 32 template instances: pairwise distinct and each present in its
    // one-eighth region.
    std::vector<TemplateInstance> instances;
    for (int k = 0; k < 32; ++k)
        instances.push_back(template_instance(kEighths[k / 4].black, block_bits(k)));
    for (size_t i = 0; i < instances.size(); ++i)
        for (size_t j = i + 1; j < instances.size(); ++j)
            if (instances[i].pattern == instances[j].pattern) {
                rep.fail("template instances " + std::to_string(i) + " and " +
                         std::to_string(j) + " coincide");
            }
    for (int k = 0; k < 32; ++k) {
        auto box = bp.region(std::string("eighth_") + kEighths[k / 4].name);
        if (!box) {
            rep.fail(std::string("missing region for eighth ") + kEighths[k / 4].name);
            continue;
        }
        if (!instance_occurs(a, *box, instances[k]))
            rep.fail("template instance " + std::to_string(k) + " (" +
                     kEighths[k / 4].name + ") not found in its region");
    }

    if (!check_property2(a)) rep.fail("yellow-CE run property violated");
    return rep;
}

GadgetBlueprint read_blueprint(std::istream& in) {
    GadgetBlueprint bp;
    std::string line;
    int lineno = 0;
    bool dims_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        auto bad = [&](const std::string& what) {
            throw std::runtime_error("blueprint line " + std::to_string(lineno) + ": " + what);
        };
        if (kw == "gadget") {
            if (!(ls >> bp.width >> bp.height)) bad("expected gadget <w> <h>");
            ls >> bp.c >> bp.r;  // optional constants, default 25/13
            dims_seen = true;
        } else if (kw == "xseed:") {
            std::string tok;
            while (ls >> tok) bp.seed.x_north.push_back(Glue(tok));
        } else if (kw == "yseed:") {
            std::string tok;
            while (ls >> tok) bp.seed.y_east.push_back(Glue(tok));
        } else if (kw == "region") {
            std::string name;
            Box b;
            if (!(ls >> name >> b.x0 >> b.y0 >> b.x1 >> b.y1)) bad("bad region line");
            bp.regions.push_back({name, b});
        } else if (kw == "motif") {
            std::string name;
            int x, y;
            if (!(ls >> name >> x >> y)) bad("bad motif line");
            bp.motifs.push_back({name, {x, y}});
        } else {
            bad("unknown keyword '" + kw + "'");
        }
    }
    if (!dims_seen) throw std::runtime_error("blueprint missing 'gadget <w> <h>' header");
    if ((int)bp.seed.x_north.size() != bp.width || (int)bp.seed.y_east.size() != bp.height)
        throw std::runtime_error("blueprint seed lengths do not match dimensions");
    bp.seed.width = bp.width;
    bp.seed.height = bp.height;
    return bp;
}

void write_blueprint(std::ostream& out, const GadgetBlueprint& bp) {
    out << "gadget " << bp.width << " " << bp.height << " " << bp.c << " " << bp.r << "\n";
    out << "xseed:";
    for (const Glue& g : bp.seed.x_north) out << " " << g.symbol();
    out << "\nyseed:";
    for (const Glue& g : bp.seed.y_east) out << " " << g.symbol();
    out << "\n";
    for (const auto& [name, b] : bp.regions)
        out << "region " << name << " " << b.x0 << " " << b.y0 << " " << b.x1 << " "
            << b.y1 << "\n";
    for (const auto& [name, p] : bp.motifs)
        out << "motif " << name << " " << p.first << " " << p.second << "\n";
}

GadgetBlueprint load_blueprint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open blueprint file: " + path);
    return read_blueprint(in);
}

void save_blueprint(const std::string& path, const GadgetBlueprint& bp) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write blueprint file: " + path);
    write_blueprint(out, bp);
}

}  // namespace patsforge
