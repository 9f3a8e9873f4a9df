#pragma once

#include "patsforge/core.hpp"

#include <iosfwd>
#include <string>

namespace patsforge {

// All formats are ASCII, whitespace-separated tokens, '#' starts a comment.
// Pattern files list rows top to bottom; the loader flips to the internal
// south-west origin.

TileSet read_tileset(std::istream& in);
void write_tileset(std::ostream& out, const TileSet& ts);

LSeed read_seed(std::istream& in);
void write_seed(std::ostream& out, const LSeed& seed);

Pattern read_pattern(std::istream& in);
void write_pattern(std::ostream& out, const Pattern& p);

TileSet load_tileset(const std::string& path);
LSeed load_seed(const std::string& path);
Pattern load_pattern(const std::string& path);
void save_tileset(const std::string& path, const TileSet& ts);
void save_seed(const std::string& path, const LSeed& seed);
void save_pattern(const std::string& path, const Pattern& p);

std::string to_string(const TileSet& ts);
std::string to_string(const LSeed& seed);
std::string to_string(const Pattern& p);

}  // namespace patsforge
