#include "patsforge/reduction.hpp"

#include "patsforge/teval.hpp"

#include <stdexcept>

namespace patsforge {

Pattern reduce(const Formula& f, const GadgetBlueprint& bp, const Pattern& gadget) {
    if (gadget.width != bp.width || gadget.height != bp.height)
        throw std::runtime_error("blueprint invalid: gadget pattern dimensions mismatch");
    const int h = bp.height;
    Pattern circuit = paint_circuit(f, h);
    Pattern p;
    p.width = bp.width + circuit.width;
    p.height = circuit.height;  // h + m + k
    p.colors.assign((size_t)p.width * p.height, color::cyan);
    for (int y = 1; y <= h; ++y)
        for (int x = 1; x <= bp.width; ++x) p.at(x, y) = gadget.at(x, y);
    // rows h+1 .. h+m+k above the gadget stay cyan: the assignment band
    for (int y = 1; y <= circuit.height; ++y)
        for (int x = 1; x <= circuit.width; ++x) p.at(bp.width + x, y) = circuit.at(x, y);
    return p;
}

Pattern reduce(const Formula& f, const GadgetBlueprint& bp) {
    return reduce(f, bp, pattern_of(assemble_gadget(bp)));
}

LSeed build_seed(const Formula& f, const Assignment& a, const GadgetBlueprint& bp) {
    if (a.size() != f.m) throw std::runtime_error("assignment length does not match m");
    LSeed seed;
    seed.x_north = bp.seed.x_north;
    const Glue n("n");
    for (int i = 0; i < f.m + 1; ++i) seed.x_north.push_back(n);
    auto enc = encode_x(f, bp.height);
    seed.x_north.insert(seed.x_north.end(), enc.begin(), enc.end());
    seed.y_east = bp.seed.y_east;
    auto ey = encode_y(a, f.k());
    seed.y_east.insert(seed.y_east.end(), ey.begin(), ey.end());
    seed.width = (int)seed.x_north.size();
    seed.height = (int)seed.y_east.size();
    return seed;
}

}  // namespace patsforge
