#include "patsforge/painter.hpp"

#include "patsforge/teval.hpp"

#include <algorithm>
#include <stdexcept>

namespace patsforge {

CircuitLayout circuit_layout(const Formula& f, int h) {
    if (h < 1) throw std::runtime_error("circuit_layout: h must be >= 1");
    CircuitLayout lay;
    lay.h = h;
    lay.m = f.m;
    lay.k = f.k();
    using K = CircuitLayout::Kind;
    for (int q = 1; q <= f.m + 1; ++q) lay.columns.push_back({K::joint, 0, q, false});
    for (int j = 1; j <= f.k(); ++j) {
        lay.columns.push_back({K::clause_c, j, 0, false});
        int o = 0;
        for (int i = 0; i < h; ++i) lay.columns.push_back({K::prepad, j, ++o, false});
        const auto& cl = f.clauses[j - 1];
        for (int var = 1; var <= f.m; ++var) {
            bool member = std::find(cl.begin(), cl.end(), var) != cl.end();
            lay.columns.push_back({K::membership, j, ++o, member});
        }
        for (int p = 0; p < j - 1; ++p) lay.columns.push_back({K::postpad, j, ++o, false});
    }
    lay.columns.push_back({K::trailing_c, f.k() + 1, 0, false});
    return lay;
}

Pattern paint_circuit(const Formula& f, int h) {
    const CircuitLayout lay = circuit_layout(f, h);
    const int H = lay.height();
    const int hm = h + f.m;
    Pattern p;
    p.width = lay.width();
    p.height = H;
    p.colors.assign((size_t)p.width * H, 0);

    using K = CircuitLayout::Kind;
    for (int x = 1; x <= p.width; ++x) {
        const auto& col = lay.columns[x - 1];
        switch (col.kind) {
            case K::joint: {
                int d = h + col.offset - 1;
                for (int y = 1; y <= H; ++y)
                    p.at(x, y) = y < d    ? color::white
                                 : y == d ? color::dgnl_white
                                          : color::cyan;
                break;
            }
            case K::clause_c: {
                if (col.clause == 1) {
                    for (int y = 1; y <= H; ++y)
                        p.at(x, y) = y <= hm ? color::init : color::red;
                } else {
                    int sat_row = hm + col.clause - 1;
                    for (int y = 1; y <= H; ++y)
                        p.at(x, y) = y < sat_row    ? color::init
                                     : y == sat_row ? color::sat
                                                    : color::ce;
                }
                break;
            }
            case K::trailing_c: {
                // With no clauses the column degenerates to all Init.
                for (int y = 1; y <= H; ++y)
                    p.at(x, y) = (lay.k >= 1 && y == H) ? color::sat : color::init;
                break;
            }
            default: {
                bool member = col.kind == K::membership && col.member;
                int d = col.offset;
                int ce_from = hm + col.clause;
                for (int y = 1; y <= H; ++y) {
                    if (y < d)
                        p.at(x, y) = member ? color::black : color::white;
                    else if (y == d)
                        p.at(x, y) = member ? color::dgnl_black : color::dgnl_white;
                    else if (y < ce_from)
                        p.at(x, y) = color::cyan;
                    else
                        p.at(x, y) = color::ce;
                }
                break;
            }
        }
    }
    return p;
}

}  // namespace patsforge
