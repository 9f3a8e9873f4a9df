#pragma once

#include "patsforge/core.hpp"

#include <array>
#include <string>

namespace patsforge {

/// Three abstract cyan tile types in the forced normal form: west glues
/// (0, 0, 1), south glues (a, b, a); north glues range over {a,b}^3 and
/// east glues over {0,1}^3, a 64-candidate space.
struct CyanTriple {
    std::array<int, 3> north{};  // 0 = a, 1 = b
    std::array<int, 3> east{};   // 0 or 1

    TileSet tile_set() const;
};

struct LemmaReport {
    std::string lemma;
    long candidates = 0;
    std::vector<TileSet> survivors;  // canonical forms, deduplicated
    bool pass = false;
    std::vector<std::string> notes;
    std::vector<std::string> candidate_lines;  // one line per candidate (lb4)
};

/// Lemma on the spurious 3-cyan option: enumerates the normalized candidate
/// space against the scaled LB4 cyan rectangle and reports the survivors.
/// Also re-derives the normalization (all-equal and pairwise-distinct west
/// glues fail), shows every 2-cyan set fails, and shows the surviving triple
/// plus at most 3 red/blue types cannot tile the scaled right column.
LemmaReport verify_lemma_lb4(int c_scaled = 7, int r_scaled = 4);

/// Forced labeling of 2 CE + 2 yellow tile types over the 4x5 subpattern;
/// also confirms a single yellow type is infeasible.
LemmaReport verify_lemma_lb3();

/// For a color with exactly 2 types: west glues differ, east glues differ,
/// south glues equal. Throws if the color count is not 2.
bool check_lemma_exactly2(const TileSet& ts, ColorId color);

/// Every maximal yellow-then-CE run along a row ends in t_CEss.
bool check_property2(const Assembly& a);

/// No column of the assembly exposes two vertically consecutive east glues
/// from the zigzag signal class (glue "1" for the spurious cyan triple).
bool check_zigzag(const Assembly& a, Glue signal);

}  // namespace patsforge
