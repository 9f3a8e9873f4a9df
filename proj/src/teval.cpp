#include "patsforge/teval.hpp"

namespace patsforge {

const std::vector<std::string>& teval_color_names() {
    static const std::vector<std::string> names = {
        "cyan", "CE", "white", "black", "DGNL-white", "DGNL-black",
        "Init", "Sat",  "yellow", "red", "blue"};
    return names;
}

TileSet t_eval() {
    auto tile = [](const char* name, ColorId col, const char* n, const char* w,
                   const char* s, const char* e) {
        TileType t;
        t.name = name;
        t.color = col;
        t.north = Glue(n);
        t.west = Glue(w);
        t.south = Glue(s);
        t.east = Glue(e);
        return t;
    };
    TileSet ts;
    ts.types = {
        tile("t_F", color::red, "c", "F", "c", "f"),
        tile("t_T", color::blue, "c", "T", "c", "t"),
        tile("t_Sat", color::sat, "F", "s", "c", "F"),
        tile("t_y", color::yellow, "T", "s", "T", "s"),
        tile("t_InitF", color::init, "c", "f", "c", "F"),
        tile("t_InitT", color::init, "c", "t", "c", "T"),
        tile("t_wf", color::white, "n", "f", "n", "f"),
        tile("t_wt", color::white, "n", "t", "n", "t"),
        tile("t_bf", color::black, "v", "f", "v", "f"),
        tile("t_bt", color::black, "v", "t", "v", "t"),
        tile("t_CEss", color::ce, "F", "s", "F", "s"),
        tile("t_CEff", color::ce, "F", "f", "F", "f"),
        tile("t_CEfs", color::ce, "F", "f", "T", "s"),
        tile("t_sbFF", color::cyan, "F", "F", "F", "F"),
        tile("t_sbFT", color::cyan, "T", "F", "T", "F"),
        tile("t_sbTF", color::cyan, "F", "T", "F", "T"),
        tile("t_sbTT", color::cyan, "T", "T", "T", "T"),
        tile("t_DGNLwF", color::dgnl_white, "F", "F", "n", "f"),
        tile("t_DGNLwT", color::dgnl_white, "F", "T", "n", "t"),
        tile("t_DGNLbF", color::dgnl_black, "F", "F", "v", "f"),
        tile("t_DGNLbT", color::dgnl_black, "T", "T", "v", "t"),
    };
    return ts;
}

int teval_index(const std::string& name) {
    static const TileSet ts = t_eval();
    for (size_t i = 0; i < ts.types.size(); ++i)
        if (ts.types[i].name == name) return (int)i;
    return -1;
}

}  // namespace patsforge
