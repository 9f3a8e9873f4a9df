#include "patsforge/render.hpp"

#include "patsforge/teval.hpp"

#include <sstream>
#include <stdexcept>

namespace patsforge {

namespace {

// One glyph per evaluation color, chosen to keep golden diffs readable:
// . cyan, E CE, w white, b black, / DGNL-white, \ DGNL-black,
// i Init, S Sat, Y yellow, R red, B blue.
const std::map<ColorId, char> kTevalGlyphs = {
    {color::cyan, '.'},       {color::ce, 'E'},         {color::white, 'w'},
    {color::black, 'b'},      {color::dgnl_white, '/'}, {color::dgnl_black, '\\'},
    {color::init, 'i'},       {color::sat, 'S'},        {color::yellow, 'Y'},
    {color::red, 'R'},        {color::blue, 'B'},
};

const std::map<ColorId, std::array<uint8_t, 3>> kTevalRgb = {
    {color::cyan, {0, 200, 220}},      {color::ce, {190, 190, 190}},
    {color::white, {255, 255, 255}},   {color::black, {30, 30, 30}},
    {color::dgnl_white, {225, 225, 245}}, {color::dgnl_black, {80, 80, 110}},
    {color::init, {140, 140, 140}},    {color::sat, {0, 170, 60}},
    {color::yellow, {240, 220, 0}},    {color::red, {220, 40, 40}},
    {color::blue, {40, 60, 220}},
};

char glyph_for(const RenderSpec& spec, ColorId c) {
    auto it = spec.glyphs.find(c);
    if (it == spec.glyphs.end())
        throw std::runtime_error("missing palette entry for color " + std::to_string(c));
    return it->second;
}

std::array<uint8_t, 3> rgb_for(const RenderSpec& spec, ColorId c) {
    auto it = spec.rgb.find(c);
    if (it == spec.rgb.end())
        throw std::runtime_error("missing palette entry for color " + std::to_string(c));
    return it->second;
}

}  // namespace

RenderSpec RenderSpec::teval_defaults(Format f) {
    RenderSpec spec;
    spec.format = f;
    spec.glyphs = kTevalGlyphs;
    spec.rgb = kTevalRgb;
    return spec;
}

RenderSpec RenderSpec::for_pattern(const Pattern& p, Format f) {
    RenderSpec spec = teval_defaults(f);
    const char* extra = "0123456789abcdefghjklmnopqrstuvxyz";
    int next = 0;
    for (ColorId c : pattern_colors(p)) {
        if (!spec.glyphs.count(c)) {
            spec.glyphs[c] = extra[next % 34];
            uint8_t v = (uint8_t)(40 + 29 * (next % 7));
            spec.rgb[c] = {v, (uint8_t)(255 - v), (uint8_t)(60 + 23 * (next % 8))};
            ++next;
        }
    }
    return spec;
}

std::string render(const Pattern& p, const RenderSpec& spec) {
    switch (spec.format) {
        case RenderSpec::Format::ascii: {
            std::string out;
            out.reserve((size_t)(p.width + 1) * p.height);
            for (int y = p.height; y >= 1; --y) {
                for (int x = 1; x <= p.width; ++x) out.push_back(glyph_for(spec, p.at(x, y)));
                out.push_back('\n');
            }
            return out;
        }
        case RenderSpec::Format::ppm: {
            std::ostringstream os;
            os << "P6\n" << p.width << " " << p.height << "\n255\n";
            std::string out = os.str();
            for (int y = p.height; y >= 1; --y)
                for (int x = 1; x <= p.width; ++x) {
                    auto c = rgb_for(spec, p.at(x, y));
                    out.push_back((char)c[0]);
                    out.push_back((char)c[1]);
                    out.push_back((char)c[2]);
                }
            return out;
        }
        case RenderSpec::Format::svg: {
            const int s = spec.cell_size;
            std::ostringstream os;
            os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << p.width * s
               << "\" height=\"" << p.height * s << "\">\n";
            for (int y = p.height; y >= 1; --y)
                for (int x = 1; x <= p.width; ++x) {
                    auto c = rgb_for(spec, p.at(x, y));
                    os << "<rect x=\"" << (x - 1) * s << "\" y=\"" << (p.height - y) * s
                       << "\" width=\"" << s << "\" height=\"" << s << "\" fill=\"rgb("
                       << (int)c[0] << "," << (int)c[1] << "," << (int)c[2] << ")\"/>\n";
                }
            os << "</svg>\n";
            return os.str();
        }
    }
    throw std::runtime_error("unknown render format");
}

}  // namespace patsforge
