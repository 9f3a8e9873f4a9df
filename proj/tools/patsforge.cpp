// Command-line front end: reduce | simulate | solve | verify | render | eval
// plus the seedgen and blueprint helpers. Exit codes: 0 success, 1 domain
// failure (stuck / infeasible / lemma fail), 2 usage or I/O error.

#include "CLI11.hpp"

#include "patsforge/canonical.hpp"
#include "patsforge/core.hpp"
#include "patsforge/formula.hpp"
#include "patsforge/gadget.hpp"
#include "patsforge/io.hpp"
#include "patsforge/painter.hpp"
#include "patsforge/reduction.hpp"
#include "patsforge/render.hpp"
#include "patsforge/solver.hpp"
#include "patsforge/teval.hpp"
#include "patsforge/verifier.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace patsforge;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

long node_limit_from_env() {
    const char* env = std::getenv("PATSFORGE_NODE_LIMIT");
    if (!env) return 10000000;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || v <= 0) throw std::runtime_error("bad PATSFORGE_NODE_LIMIT");
    return v;
}

RenderSpec::Format parse_format(const std::string& name) {
    if (name == "ascii") return RenderSpec::Format::ascii;
    if (name == "ppm") return RenderSpec::Format::ppm;
    if (name == "svg") return RenderSpec::Format::svg;
    throw CLI::ValidationError("--format", "expected ascii, ppm or svg");
}

void print_lemma_report(const LemmaReport& rep, bool machine) {
    if (machine) {
        std::cout << "lemma " << rep.lemma << " candidates " << rep.candidates
                  << " survivors " << rep.survivors.size() << " pass " << rep.pass << "\n";
        for (const auto& line : rep.candidate_lines) std::cout << line << "\n";
        for (const auto& s : rep.survivors)
            for (const auto& t : s.types)
                std::cout << "survivor-tile " << t.color << " " << t.north.symbol() << " "
                          << t.west.symbol() << " " << t.south.symbol() << " "
                          << t.east.symbol() << "\n";
        return;
    }
    std::cout << "lemma " << rep.lemma << ": " << rep.candidates
              << " candidates examined, " << rep.survivors.size()
              << " survivor(s) up to renaming\n";
    for (const auto& note : rep.notes) std::cout << "  - " << note << "\n";
    std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"patsforge: rectilinear tile self-assembly toolkit"};
    app.require_subcommand(1);

    // --- simulate ---
    auto* sim = app.add_subcommand("simulate", "tile the rectangle delimited by a seed");
    std::string sim_tiles, sim_seed, sim_out;
    bool sim_diag = false;
    sim->add_option("tileset", sim_tiles)->required();
    sim->add_option("seed", sim_seed)->required();
    sim->add_flag("--diag", sim_diag, "print diagnostics for failures");
    sim->add_option("-o,--output", sim_out, "write the pattern to a file");

    // --- eval ---
    auto* ev = app.add_subcommand("eval", "evaluate an assignment against a formula");
    std::string ev_formula, ev_assignment;
    ev->add_option("formula", ev_formula)->required();
    ev->add_option("assignment", ev_assignment)->required();

    // --- reduce ---
    auto* red = app.add_subcommand("reduce", "emit the reduced pattern for a formula");
    red->set_help_flag("--help");  // frees --h for the circuit height
    std::string red_formula, red_gadget, red_out;
    int red_h = 3;
    red->add_option("formula", red_formula)->required();
    red->add_option("--gadget", red_gadget, "blueprint file; omit for the circuit only");
    red->add_option("--h", red_h, "circuit height when no gadget is given");
    red->add_option("-o,--output", red_out)->required();

    // --- seedgen ---
    auto* sg = app.add_subcommand("seedgen", "emit the seed encoding formula+assignment");
    sg->set_help_flag("--help");
    std::string sg_formula, sg_assignment, sg_gadget, sg_out;
    int sg_h = 3;
    sg->add_option("formula", sg_formula)->required();
    sg->add_option("assignment", sg_assignment)->required();
    sg->add_option("--gadget", sg_gadget, "blueprint file; omit for the circuit seed");
    sg->add_option("--h", sg_h, "circuit height when no gadget is given");
    sg->add_option("-o,--output", sg_out)->required();

    // --- solve ---
    auto* sol = app.add_subcommand("solve", "exact minimum tile set for a pattern");
    std::string sol_pattern, sol_out;
    int sol_budget = 8;
    bool sol_oracle = false;
    sol->add_option("pattern", sol_pattern)->required();
    sol->add_option("--budget", sol_budget, "largest tile count worth returning");
    sol->add_flag("--oracle", sol_oracle, "cross-check with the exhaustive oracle");
    sol->add_option("-o,--output", sol_out, "write tileset+seed witness");

    // --- verify ---
    auto* ver = app.add_subcommand("verify", "mechanical lemma checks");
    ver->require_subcommand(1);
    auto* vlb4 = ver->add_subcommand("lb4", "cyan lower bound enumeration");
    int v_c = 7, v_r = 4;
    bool v_machine = false, v_full = false;
    vlb4->add_option("--c", v_c);
    vlb4->add_option("--r", v_r);
    vlb4->add_flag("--full", v_full, "use the published constants c=25 r=13");
    vlb4->add_flag("--machine", v_machine);
    auto* vlb3 = ver->add_subcommand("lb3", "CE/yellow forced labeling");
    vlb3->add_flag("--machine", v_machine);
    auto* vg = ver->add_subcommand("gadget", "validate a blueprint");
    std::string vg_file;
    vg->add_option("blueprint", vg_file)->required();

    // --- render ---
    auto* ren = app.add_subcommand("render", "render a pattern");
    std::string ren_pattern, ren_format = "ascii", ren_out;
    ren->add_option("pattern", ren_pattern)->required();
    ren->add_option("--format", ren_format, "ascii, ppm or svg");
    ren->add_option("-o,--output", ren_out, "output file (default stdout)");

    // --- blueprint ---
    auto* bpgen = app.add_subcommand("blueprint", "generate a gadget blueprint");
    int bp_c = 25, bp_r = 13;
    std::string bp_out;
    bpgen->add_option("--c", bp_c);
    bpgen->add_option("--r", bp_r);
    bpgen->add_option("-o,--output", bp_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (sim->parsed()) {
        TileSet ts = load_tileset(sim_tiles);
        LSeed seed = load_seed(sim_seed);
        auto out = simulate(ts, seed);
        if (std::holds_alternative<Stuck>(out)) {
            const auto& st = std::get<Stuck>(out);
            std::cout << "stuck at (" << st.x << "," << st.y
                      << "): west=" << st.west.symbol() << " south=" << st.south.symbol()
                      << "\n";
            return kExitDomain;
        }
        if (std::holds_alternative<Ambiguous>(out)) {
            const auto& am = std::get<Ambiguous>(out);
            std::cout << "ambiguous at (" << am.x << "," << am.y << "): "
                      << am.candidates.size() << " candidate tiles\n";
            return kExitDomain;
        }
        const Assembly& a = std::get<Completed>(out).assembly;
        Pattern p = pattern_of(a);
        if (sim_diag)
            std::cerr << "completed " << p.width << "x" << p.height << " with "
                      << pattern_colors(p).size() << " colors\n";
        if (!sim_out.empty())
            save_pattern(sim_out, p);
        else
            write_pattern(std::cout, p);
        return 0;
    }

    if (ev->parsed()) {
        Formula f = load_formula(ev_formula);
        Assignment a = parse_assignment(ev_assignment);
        if (a.size() != f.m) {
            std::cerr << "assignment length " << a.size() << " does not match m=" << f.m
                      << "\n";
            return kExitUsage;
        }
        bool sat = satisfies_1in3(f, a);
        std::cout << (sat ? "satisfies" : "does not satisfy") << " (1-in-3)\n";
        return sat ? 0 : kExitDomain;
    }

    if (red->parsed()) {
        Formula f = load_formula(red_formula);
        Pattern p;
        if (red_gadget.empty()) {
            p = paint_circuit(f, red_h);
        } else {
            GadgetBlueprint bp = load_blueprint(red_gadget);
            p = reduce(f, bp);
        }
        save_pattern(red_out, p);
        std::cout << "pattern " << p.width << "x" << p.height << " with "
                  << pattern_colors(p).size() << " colors\n";
        return 0;
    }

    if (sg->parsed()) {
        Formula f = load_formula(sg_formula);
        Assignment a = parse_assignment(sg_assignment);
        LSeed seed = sg_gadget.empty() ? build_circuit_seed(f, a, sg_h)
                                       : build_seed(f, a, load_blueprint(sg_gadget));
        save_seed(sg_out, seed);
        return 0;
    }

    if (sol->parsed()) {
        Pattern p = load_pattern(sol_pattern);
        SolveOptions opt;
        opt.budget = sol_budget;
        opt.node_limit = node_limit_from_env();
        auto best = min_tileset(p, opt);
        if (!best) {
            std::cout << "infeasible within budget " << sol_budget << "\n";
            return kExitDomain;
        }
        std::cout << "minimum " << best->size << " tile types\n";
        if (sol_oracle) {
            auto oracle = brute_force_min(p, sol_budget);
            if (!oracle || *oracle != best->size) {
                std::cout << "oracle disagrees: "
                          << (oracle ? std::to_string(*oracle) : std::string("none")) << "\n";
                return kExitDomain;
            }
            std::cout << "oracle agrees\n";
        }
        if (!sol_out.empty()) {
            std::ofstream os(sol_out);
            if (!os) throw std::runtime_error("cannot write " + sol_out);
            write_tileset(os, best->tiles);
            write_seed(os, best->seed);
        }
        return 0;
    }

    if (ver->parsed()) {
        if (vlb4->parsed()) {
            if (v_full) {
                v_c = 25;
                v_r = 13;
            }
            LemmaReport rep = verify_lemma_lb4(v_c, v_r);
            print_lemma_report(rep, v_machine);
            return rep.pass ? 0 : kExitDomain;
        }
        if (vlb3->parsed()) {
            LemmaReport rep = verify_lemma_lb3();
            print_lemma_report(rep, v_machine);
            return rep.pass ? 0 : kExitDomain;
        }
        GadgetBlueprint bp = load_blueprint(vg_file);
        BlueprintReport rep = validate_blueprint(bp);
        if (rep.ok) {
            std::cout << "blueprint ok: " << bp.width << "x" << bp.height << "\n";
            return 0;
        }
        for (const auto& f : rep.failures) std::cout << "fail: " << f << "\n";
        return kExitDomain;
    }

    if (ren->parsed()) {
        Pattern p = load_pattern(ren_pattern);
        RenderSpec spec = RenderSpec::for_pattern(p, parse_format(ren_format));
        std::string bytes = render(p, spec);
        if (ren_out.empty()) {
            std::cout << bytes;
        } else {
            std::ofstream os(ren_out, std::ios::binary);
            if (!os) throw std::runtime_error("cannot write " + ren_out);
            os.write(bytes.data(), (std::streamsize)bytes.size());
        }
        return 0;
    }

    if (bpgen->parsed()) {
        GadgetBlueprint bp = build_blueprint(bp_c, bp_r);
        save_blueprint(bp_out, bp);
        std::cout << "blueprint " << bp.width << "x" << bp.height << " written\n";
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
