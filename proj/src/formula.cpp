#include "patsforge/formula.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace patsforge {

Formula read_formula(std::istream& in) {
    Formula f;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    int expect_k = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!header_seen) {
            std::string fmt;
            if (first != "p" || !(ls >> fmt) || fmt != "mono13")
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": expected header 'p mono13 <m> <k>'");
            if (!(ls >> f.m >> expect_k) || f.m < 1 || expect_k < 0)
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": bad m/k in header");
            header_seen = true;
            continue;
        }
        std::array<int, 3> cl;
        std::istringstream cs(line);
        if (!(cs >> cl[0] >> cl[1] >> cl[2]))
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected three variable indices");
        std::string extra;
        if (cs >> extra)
            throw std::runtime_error("line " + std::to_string(lineno) + ": trailing tokens");
        for (int v : cl) {
            if (v < 0) throw std::runtime_error("line " + std::to_string(lineno) +
                                                ": non-monotone clause");
            if (v < 1 || v > f.m)
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": variable index out of range");
        }
        if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": non-monotone clause (duplicate literal)");
        f.clauses.push_back(cl);
    }
    if (!header_seen) throw std::runtime_error("missing 'p mono13' header");
    if ((int)f.clauses.size() != expect_k)
        throw std::runtime_error("header declares k=" + std::to_string(expect_k) + " but " +
                                 std::to_string(f.clauses.size()) + " clauses given");
    return f;
}

Formula parse_formula(const std::string& text) {
    std::istringstream in(text);
    return read_formula(in);
}

Formula load_formula(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open formula file: " + path);
    return read_formula(in);
}

void write_formula(std::ostream& out, const Formula& f) {
    out << "p mono13 " << f.m << " " << f.k() << "\n";
    for (const auto& cl : f.clauses) out << cl[0] << " " << cl[1] << " " << cl[2] << "\n";
}

Assignment parse_assignment(const std::string& text) {
    Assignment a;
    for (char c : text) {
        switch (c) {
            case 'T': case 't': case '1': a.bits.push_back(true); break;
            case 'F': case 'f': case '0': a.bits.push_back(false); break;
            default:
                throw std::runtime_error(std::string("bad assignment character '") + c + "'");
        }
    }
    return a;
}

std::string to_string(const Assignment& a) {
    std::string s;
    for (bool b : a.bits) s.push_back(b ? 'T' : 'F');
    return s;
}

bool satisfies_1in3(const Formula& f, const Assignment& a) {
    if (a.size() != f.m) throw std::runtime_error("assignment length does not match m");
    for (const auto& cl : f.clauses) {
        int trues = 0;
        for (int v : cl) trues += a.bits[v - 1] ? 1 : 0;
        if (trues != 1) return false;
    }
    return true;
}

std::vector<Assignment> enumerate_1in3(const Formula& f, int max_vars) {
    if (f.m > max_vars) throw std::runtime_error("instance too large for oracle");
    std::vector<Assignment> out;
    // Lexicographic with T before F: descending binary counting.
    for (uint64_t word = (1ULL << f.m); word-- > 0;) {
        Assignment a;
        a.bits.resize(f.m);
        for (int i = 0; i < f.m; ++i) a.bits[i] = (word >> (f.m - 1 - i)) & 1;
        if (satisfies_1in3(f, a)) out.push_back(a);
    }
    return out;
}

std::optional<Assignment> solve_1in3_bruteforce(const Formula& f, int max_vars) {
    if (f.m > max_vars) throw std::runtime_error("instance too large for oracle");
    for (uint64_t word = (1ULL << f.m); word-- > 0;) {
        Assignment a;
        a.bits.resize(f.m);
        for (int i = 0; i < f.m; ++i) a.bits[i] = (word >> (f.m - 1 - i)) & 1;
        if (satisfies_1in3(f, a)) return a;
    }
    return std::nullopt;
}

std::vector<Glue> encode_x(const Formula& f, int h) {
    if (h < 1) throw std::runtime_error("encode_x: h must be >= 1");
    const Glue c("c"), n("n"), v("v");
    std::vector<Glue> out;
    for (int j = 1; j <= f.k(); ++j) {
        out.push_back(c);
        for (int i = 0; i < h; ++i) out.push_back(n);
        const auto& cl = f.clauses[j - 1];
        for (int var = 1; var <= f.m; ++var) {
            bool member = std::find(cl.begin(), cl.end(), var) != cl.end();
            out.push_back(member ? v : n);
        }
        for (int i = 0; i < j - 1; ++i) out.push_back(n);
    }
    out.push_back(c);
    return out;
}

std::vector<Glue> encode_y(const Assignment& a, int k) {
    const Glue F("F"), T("T");
    std::vector<Glue> out;
    for (bool b : a.bits) out.push_back(b ? T : F);
    for (int i = 0; i < k; ++i) out.push_back(F);
    return out;
}

LSeed build_circuit_seed(const Formula& f, const Assignment& a, int h) {
    if (h < 1) throw std::runtime_error("build_circuit_seed: h must be >= 1");
    if (a.size() != f.m) throw std::runtime_error("assignment length does not match m");
    LSeed seed;
    const Glue n("n"), fl("f"), F("F");
    for (int i = 0; i < f.m + 1; ++i) seed.x_north.push_back(n);
    auto enc = encode_x(f, h);
    seed.x_north.insert(seed.x_north.end(), enc.begin(), enc.end());
    for (int i = 0; i < h - 1; ++i) seed.y_east.push_back(fl);
    seed.y_east.push_back(F);
    auto ey = encode_y(a, f.k());
    seed.y_east.insert(seed.y_east.end(), ey.begin(), ey.end());
    seed.width = (int)seed.x_north.size();
    seed.height = (int)seed.y_east.size();
    return seed;
}

}  // namespace patsforge
