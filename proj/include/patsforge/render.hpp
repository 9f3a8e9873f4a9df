#pragma once

#include "patsforge/core.hpp"

#include <array>
#include <map>
#include <string>

namespace patsforge {

struct RenderSpec {
    enum class Format { ascii, ppm, svg };
    Format format = Format::ascii;
    int cell_size = 12;  // pixels per cell for ppm/svg
    std::map<ColorId, char> glyphs;                       // ascii
    std::map<ColorId, std::array<uint8_t, 3>> rgb;        // ppm/svg

    /// Legend covering the 11 evaluation-set colors.
    static RenderSpec teval_defaults(Format f = Format::ascii);
    /// Synthesizes glyphs/rgb entries for every color in p (generic patterns).
    static RenderSpec for_pattern(const Pattern& p, Format f);
};

/// Deterministic bytes; throws on a color missing from the palette map.
std::string render(const Pattern& p, const RenderSpec& spec);

}  // namespace patsforge
