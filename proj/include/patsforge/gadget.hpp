#pragma once

#include "patsforge/core.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

namespace patsforge {

struct Box {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // inclusive, (1,1) south-west
};

/// Declarative layout of GADGET: the seed glue words that assemble it under
/// the evaluation tile set, plus named sub-regions and motif anchors.
struct GadgetBlueprint {
    int c = 25, r = 13;
    int width = 0, height = 0;
    LSeed seed;
    std::vector<std::pair<std::string, Box>> regions;
    std::vector<std::pair<std::string, std::pair<int, int>>> motifs;

    std::optional<Box> region(const std::string& name) const;
};

/// Boundary words of the LB4 subpattern: top row west to east and right
/// column bottom to top, both including the shared corner Sat.
struct Lb4Boundary {
    std::vector<ColorId> top;
    std::vector<ColorId> right;
};
Lb4Boundary lb4_boundary(int c, int r);

/// One of the 32 red/blue-tagged subpattern templates: four crossover
/// columns, an Init column, and a column of four red/blue cells encoding
/// the bits bottom-up.
struct TemplateInstance {
    bool black = false;            // palette: white or black crossovers
    std::array<bool, 4> bits{};    // blue = true, red = false
    Pattern pattern;               // 6 x 4 colors
    Assembly assembly;             // its unique evaluation-set tiling
};
TemplateInstance template_instance(bool black, const std::array<bool, 4>& bits);

/// Expected colors and tiling of a named motif, parameterized like the
/// blueprint. Grids are row-major from the south row.
struct MotifSpec {
    int width = 0, height = 0;
    std::vector<ColorId> colors;
    std::vector<std::string> tile_names;
};
MotifSpec motif_spec(const std::string& name, int c, int r);

/// Constructs the blueprint for the given constants. The layout is produced
/// column group by column group and cross-checked against an incremental
/// simulation, so a returned blueprint always assembles.
GadgetBlueprint build_blueprint(int c = 25, int r = 13);

/// Simulates the blueprint seed; throws with the failing position if the
/// tiling gets stuck or ambiguous.
Assembly assemble_gadget(const GadgetBlueprint& bp);

struct ExposureReport {
    bool north_ok = false, east_ok = false;
    int first_bad_north = 0, first_bad_east = 0;  // 1-based, 0 = none
};
/// North must expose only F; east only f/t except F at the very top.
ExposureReport check_exposures(const Assembly& a);

struct BlueprintReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};
/// Full validation: assembly, exposures, LB4 boundary words, motif
/// occurrences, the 32 template instances, and the yellow-run property.
BlueprintReport validate_blueprint(const GadgetBlueprint& bp);

GadgetBlueprint read_blueprint(std::istream& in);
void write_blueprint(std::ostream& out, const GadgetBlueprint& bp);
GadgetBlueprint load_blueprint(const std::string& path);
void save_blueprint(const std::string& path, const GadgetBlueprint& bp);

}  // namespace patsforge
