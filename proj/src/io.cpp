#include "patsforge/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace patsforge {

namespace {

// Token stream that drops '#' comments to end of line.
struct TokenReader {
    std::istream& in;
    int line = 1;

    explicit TokenReader(std::istream& s) : in(s) {}

    std::string next() {
        std::string tok;
        char c;
        while (in.get(c)) {
            if (c == '#') {
                while (in.get(c) && c != '\n') {
                }
                ++line;
                continue;
            }
            if (c == '\n') {
                ++line;
                continue;
            }
            if (isspace((unsigned char)c)) continue;
            tok.push_back(c);
            while (in.get(c)) {
                if (isspace((unsigned char)c) || c == '#') {
                    in.unget();
                    break;
                }
                tok.push_back(c);
            }
            return tok;
        }
        throw std::runtime_error("unexpected end of input at line " + std::to_string(line));
    }

    int next_int() {
        std::string tok = next();
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::runtime_error("expected integer, got '" + tok + "' at line " +
                                     std::to_string(line));
        }
        if (pos != tok.size())
            throw std::runtime_error("expected integer, got '" + tok + "' at line " +
                                     std::to_string(line));
        return v;
    }

    void expect(const std::string& kw) {
        std::string tok = next();
        if (tok != kw)
            throw std::runtime_error("expected '" + kw + "', got '" + tok + "' at line " +
                                     std::to_string(line));
    }
};

}  // namespace

TileSet read_tileset(std::istream& in) {
    TokenReader r(in);
    r.expect("tileset");
    int n = r.next_int();
    if (n < 0) throw std::runtime_error("negative tile count");
    TileSet ts;
    ts.types.reserve(n);
    for (int i = 0; i < n; ++i) {
        r.expect("tile");
        TileType t;
        t.name = r.next();
        t.color = r.next_int();
        t.north = Glue(r.next());
        t.west = Glue(r.next());
        t.south = Glue(r.next());
        t.east = Glue(r.next());
        for (const auto& prev : ts.types)
            if (prev.same_record(t))
                throw std::runtime_error("duplicate tile record '" + t.name + "'");
        ts.types.push_back(t);
    }
    return ts;
}

void write_tileset(std::ostream& out, const TileSet& ts) {
    out << "tileset " << ts.types.size() << "\n";
    for (size_t i = 0; i < ts.types.size(); ++i) {
        const TileType& t = ts.types[i];
        std::string name = t.name.empty() ? ("t" + std::to_string(i)) : t.name;
        out << "tile " << name << " " << t.color << " " << t.north.symbol() << " "
            << t.west.symbol() << " " << t.south.symbol() << " " << t.east.symbol()
            << "\n";
    }
}

LSeed read_seed(std::istream& in) {
    TokenReader r(in);
    r.expect("seed");
    LSeed s;
    s.width = r.next_int();
    s.height = r.next_int();
    if (s.width < 1 || s.height < 1) throw std::runtime_error("seed dimensions must be positive");
    r.expect("x:");
    for (int i = 0; i < s.width; ++i) s.x_north.push_back(Glue(r.next()));
    r.expect("y:");
    for (int i = 0; i < s.height; ++i) s.y_east.push_back(Glue(r.next()));
    return s;
}

void write_seed(std::ostream& out, const LSeed& seed) {
    out << "seed " << seed.width << " " << seed.height << "\n";
    out << "x:";
    for (const Glue& g : seed.x_north) out << " " << g.symbol();
    out << "\ny:";
    for (const Glue& g : seed.y_east) out << " " << g.symbol();
    out << "\n";
}

Pattern read_pattern(std::istream& in) {
    TokenReader r(in);
    r.expect("pattern");
    Pattern p;
    p.width = r.next_int();
    p.height = r.next_int();
    int numcolors = r.next_int();
    if (p.width < 1 || p.height < 1) throw std::runtime_error("pattern dimensions must be positive");
    p.colors.assign((size_t)p.width * p.height, 0);
    for (int row = 0; row < p.height; ++row) {
        int y = p.height - row;  // file lists top row first
        for (int x = 1; x <= p.width; ++x) p.at(x, y) = r.next_int();
    }
    if ((int)pattern_colors(p).size() != numcolors)
        throw std::runtime_error("pattern header declares " + std::to_string(numcolors) +
                                 " colors, file uses " +
                                 std::to_string(pattern_colors(p).size()));
    return p;
}

void write_pattern(std::ostream& out, const Pattern& p) {
    out << "pattern " << p.width << " " << p.height << " " << pattern_colors(p).size()
        << "\n";
    for (int y = p.height; y >= 1; --y) {
        for (int x = 1; x <= p.width; ++x) {
            if (x > 1) out << " ";
            out << p.at(x, y);
        }
        out << "\n";
    }
}

namespace {

template <typename T, typename Reader>
T load_file(const std::string& path, Reader reader, const char* what) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(std::string("cannot open ") + what + " file: " + path);
    return reader(in);
}

template <typename T, typename Writer>
void save_file(const std::string& path, const T& value, Writer writer, const char* what) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(std::string("cannot write ") + what + " file: " + path);
    writer(out, value);
}

}  // namespace

TileSet load_tileset(const std::string& path) {
    return load_file<TileSet>(path, [](std::istream& in) { return read_tileset(in); }, "tileset");
}
LSeed load_seed(const std::string& path) {
    return load_file<LSeed>(path, [](std::istream& in) { return read_seed(in); }, "seed");
}
Pattern load_pattern(const std::string& path) {
    return load_file<Pattern>(path, [](std::istream& in) { return read_pattern(in); }, "pattern");
}
void save_tileset(const std::string& path, const TileSet& ts) {
    save_file(path, ts, [](std::ostream& o, const TileSet& v) { write_tileset(o, v); }, "tileset");
}
void save_seed(const std::string& path, const LSeed& seed) {
    save_file(path, seed, [](std::ostream& o, const LSeed& v) { write_seed(o, v); }, "seed");
}
void save_pattern(const std::string& path, const Pattern& p) {
    save_file(path, p, [](std::ostream& o, const Pattern& v) { write_pattern(o, v); }, "pattern");
}

std::string to_string(const TileSet& ts) {
    std::ostringstream os;
    write_tileset(os, ts);
    return os.str();
}
std::string to_string(const LSeed& seed) {
    std::ostringstream os;
    write_seed(os, seed);
    return os.str();
}
std::string to_string(const Pattern& p) {
    std::ostringstream os;
    write_pattern(os, p);
    return os.str();
}

}  // namespace patsforge
