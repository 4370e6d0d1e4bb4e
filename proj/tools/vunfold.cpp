// vunfold: facet paths, facet cycles and certified vertex-unfoldings for
// triangulated manifolds of any dimension.
//
// Exit codes: 0 ok, 2 invalid input, 3 cycle impossible where a cycle was
// demanded, 4 internal invariant failure.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <unistd.h>

#include <CLI11.hpp>

#include "vunfold/facet_path.hpp"
#include "vunfold/hull.hpp"
#include "vunfold/io.hpp"
#include "vunfold/strip_layout.hpp"

namespace {

using namespace vunfold;

bool use_color() { return isatty(1) && std::getenv("NO_COLOR") == nullptr; }

std::string tint(const std::string& text, const char* code) {
    if (!use_color()) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string good(const std::string& t) { return tint(t, "32"); }
std::string bad(const std::string& t) { return tint(t, "31"); }

void print_path(const FacetPath& p) {
    std::cout << (p.cyclic ? "facet cycle" : "facet path") << ", " << p.length() << " facets\n";
    for (int i = 0; i < p.length(); ++i)
        std::cout << p.vertices[i] << " f" << p.facets[i] << ' ';
    std::cout << p.vertices.back() << '\n';
}

void print_report(const ValidationReport& rep) {
    for (const Violation& v : rep.violations)
        std::cout << "  " << bad(v.code) << ": " << v.message << '\n';
}

int cmd_check(const std::string& file) {
    const SimplicialComplex c = read_complex_file(file);
    std::cout << "dim " << c.dim << ", " << c.vertex_count << " vertices, " << c.facet_count()
              << " facets" << (c.coords ? "" : " (abstract, no coordinates)") << '\n';

    const ValidationReport rep = validate_pseudomanifold(c);
    std::cout << "pseudo-manifold: " << (rep.ok() ? good("ok") : bad("FAIL")) << '\n';
    if (!rep.ok()) {
        print_report(rep);
        return 2;
    }

    const DualGraph dual = build_dual(c);
    std::cout << "dual graph: " << dual.arcs.size() << " arcs, " << dual.boundary.size()
              << " boundary ridges\n";
    std::cout << "simplicial: " << (is_simplicial(dual) ? "yes" : "no (multi-edges in dual)")
              << '\n';

    if (c.dim == 2) {
        int bad_stars = 0;
        for (int v = 0; v < c.vertex_count; ++v) {
            try {
                vertex_rotation(c, v);
            } catch (const NonManifoldStarError&) {
                ++bad_stars;
            } catch (const InvalidInputError&) {
                // isolated vertex: no star to speak of
            }
        }
        std::cout << "vertex stars: "
                  << (bad_stars == 0 ? std::string("all manifold")
                                     : std::to_string(bad_stars) + " non-manifold")
                  << '\n';

        const UnfoldedComplex u = unfold(c, dual, spanning_tree(dual, 0));
        const bool checkered = checkering_of(u).has_value();
        if (dual.arcs.size() == static_cast<size_t>(dual.node_count - 1)) {
            std::cout << "polygon triangulation: " << (checkered ? "checkered" : "non-checkered")
                      << '\n';
            if (checkered)
                std::cout << "  facet cycles are impossible; facet paths exist\n";
        } else {
            std::cout << "BFS unfolding: " << (checkered ? "checkered" : "non-checkered") << '\n';
        }
    }
    return 0;
}

int cmd_path(const std::string& file, bool noncrossing, const std::string& json_out,
             int seed_facet) {
    const SimplicialComplex c = read_complex_file(file);
    FacetPath p = facet_path(c, seed_facet);
    if (noncrossing) p = make_noncrossing(c, p);
    const ValidationReport rep = verify_path(c, p);
    if (!rep.ok()) throw InternalError("pipeline produced an invalid path: " + rep.violations[0].code);
    print_path(p);
    if (!json_out.empty()) {
        nlohmann::json j;
        j["cyclic"] = p.cyclic;
        j["vertices"] = p.vertices;
        j["facets"] = p.facets;
        j["input_hash"] = input_hash(c);
        detail::spit(json_out, j.dump(2) + "\n");
        std::cout << "wrote " << json_out << '\n';
    }
    return 0;
}

int cmd_cycle(const std::string& file, std::optional<int> start_facet,
              const std::string& json_out, int seed_facet) {
    const SimplicialComplex c = read_complex_file(file);
    const FacetPath p = facet_cycle(c, start_facet, seed_facet);
    const ValidationReport rep = verify_path(c, p);
    if (!rep.ok()) throw InternalError("pipeline produced an invalid cycle: " + rep.violations[0].code);
    print_path(p);
    if (!json_out.empty()) {
        nlohmann::json j;
        j["cyclic"] = p.cyclic;
        j["vertices"] = p.vertices;
        j["facets"] = p.facets;
        j["input_hash"] = input_hash(c);
        detail::spit(json_out, j.dump(2) + "\n");
        std::cout << "wrote " << json_out << '\n';
    }
    return 0;
}

int cmd_unfold(const std::string& file, bool want_cycle, double gap, bool noncrossing,
               std::optional<int> start_facet, const std::string& svg_out,
               const std::string& json_out, bool show_strips, bool labels, int seed_facet) {
    const SimplicialComplex c = read_complex_file(file);
    FacetPath p = want_cycle ? facet_cycle(c, start_facet, seed_facet) : facet_path(c, seed_facet);
    if (noncrossing) p = make_noncrossing(c, p);

    const StripLayout lay = layout(c, p, gap);
    const ValidationReport rep = verify_layout(lay, c, 1e-9);
    if (!rep.ok())
        throw InternalError("layout failed certification: " + rep.violations.front().code);

    const double span = lay.placements.back().x_right - lay.placements.front().x_left;
    std::cout << (p.cyclic ? "cyclic" : "open") << " layout: " << lay.placements.size()
              << " strips, total width " << span << ", gap " << gap << '\n';
    std::cout << "certified: congruence and strip disjointness at 1e-9\n";

    if (!json_out.empty()) {
        write_layout_json_file(json_out, lay, c);
        std::cout << "wrote " << json_out << '\n';
    }
    if (!svg_out.empty()) {
        SvgOptions opt;
        opt.show_strips = show_strips;
        opt.labels = labels;
        write_svg_file(svg_out, lay, c, opt);
        std::cout << "wrote " << svg_out << '\n';
    }
    return 0;
}

int cmd_gen(int points, std::uint64_t seed, const std::string& out) {
    int perturbations = 0;
    const SimplicialComplex c = gen_hull(points, seed, &perturbations);
    if (perturbations > 0)
        std::cerr << "note: degenerate point set perturbed " << perturbations << " time(s)\n";
    write_complex_file(out, c);
    std::cout << "hull: " << c.vertex_count << " vertices, " << c.facet_count()
              << " facets, seed " << seed << '\n';
    std::cout << "wrote " << out << '\n';
    return 0;
}

int cmd_bench(const std::string& sizes_arg, std::uint64_t seed) {
    std::vector<int> sizes;
    std::istringstream ss(sizes_arg);
    for (std::string tok; std::getline(ss, tok, ',');) sizes.push_back(std::stoi(tok));
    if (sizes.empty()) throw InvalidInputError("bench: no sizes given");

    using clock = std::chrono::steady_clock;
    auto ms = [](clock::duration d) {
        return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(d).count();
    };

    const size_t k = sizes.size();
    std::vector<SimplicialComplex> meshes;
    std::vector<int> points(k);
    std::vector<double> gen_ms(k);
    for (size_t i = 0; i < k; ++i) {
        points[i] = sizes[i] / 2 + 2;
        const auto t0 = clock::now();
        meshes.push_back(gen_hull(points[i], seed));
        gen_ms[i] = ms(clock::now() - t0);
    }

    // round-robin repetitions with per-size minima, so transient machine
    // load cannot bias one size against another
    std::vector<double> best_path(k, 1e100), best_layout(k, 1e100);
    for (int pass = 0; pass < 5; ++pass) {
        for (size_t i = 0; i < k; ++i) {
            const auto a = clock::now();
            const FacetPath p = facet_path(meshes[i]);
            const auto b = clock::now();
            const StripLayout lay = layout(meshes[i], p, 0.0);
            const auto d = clock::now();
            if (pass == 0 && !verify_path(meshes[i], p).ok())
                throw InternalError("bench: invalid path");
            if (lay.placements.size() != static_cast<size_t>(meshes[i].facet_count()))
                throw InternalError("bench: incomplete layout");
            best_path[i] = std::min(best_path[i], ms(b - a));
            best_layout[i] = std::min(best_layout[i], ms(d - b));
        }
    }

    std::cout << "# facets points gen_ms path_ms layout_ms pipeline_ms ratio\n";
    double prev_pipeline = -1;
    for (size_t i = 0; i < k; ++i) {
        const double pipeline = best_path[i] + best_layout[i];
        char line[160];
        std::snprintf(line, sizeof(line), "%d %d %.3f %.3f %.3f %.3f %s\n",
                      meshes[i].facet_count(), points[i], gen_ms[i], best_path[i], best_layout[i],
                      pipeline,
                      prev_pipeline < 0 ? "-" : detail::fmt9(pipeline / prev_pipeline).c_str());
        std::cout << line;
        prev_pipeline = pipeline;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"facet paths and certified vertex-unfoldings of simplicial manifolds"};
    app.require_subcommand(1);

    std::string file, json_out, svg_out, out_file, sizes = "1000,2000,4000,8000";
    bool noncrossing = false, want_cycle = false, want_path = false, show_strips = false,
         labels = false;
    double gap = 0.0;
    int seed_facet = 0, points = 100;
    std::uint64_t seed = 1;
    int start_facet = -1;

    CLI::App* check = app.add_subcommand("check", "validate a mesh and print diagnostics");
    check->add_option("file", file, "mesh file (.off/.obj/.json)")->required();

    CLI::App* path = app.add_subcommand("path", "compute a facet path");
    path->add_option("file", file)->required();
    path->add_flag("--noncrossing", noncrossing, "uncross the path at repeated vertices");
    path->add_option("--json", json_out, "write the path as JSON");
    path->add_option("--seed-facet", seed_facet, "root facet of the spanning tree");

    CLI::App* cycle = app.add_subcommand("cycle", "compute a facet cycle (exit 3 if impossible)");
    cycle->add_option("file", file)->required();
    cycle->add_option("--start-facet", start_facet, "rotate the cycle to start at this facet");
    cycle->add_option("--json", json_out, "write the cycle as JSON");
    cycle->add_option("--seed-facet", seed_facet, "root facet of the spanning tree");

    CLI::App* unfold = app.add_subcommand("unfold", "strip/slab vertex-unfolding");
    unfold->add_option("file", file)->required();
    unfold->add_flag("--cycle", want_cycle, "demand a facet cycle (exit 3 if impossible)");
    unfold->add_flag("--path", want_path, "use a facet path (default)");
    unfold->add_option("--gap", gap, "spacing between consecutive strips")->check(CLI::NonNegativeNumber);
    unfold->add_flag("--noncrossing", noncrossing, "uncross the path first");
    unfold->add_option("--start-facet", start_facet, "with --cycle: first facet of the layout");
    unfold->add_option("--svg", svg_out, "write an SVG rendering (2D only)");
    unfold->add_option("--json", json_out, "write the layout document");
    unfold->add_flag("--show-strips", show_strips, "draw strip guides in the SVG");
    unfold->add_flag("--labels", labels, "draw vertex labels in the SVG");
    unfold->add_option("--seed-facet", seed_facet, "root facet of the spanning tree");

    CLI::App* gen = app.add_subcommand("gen", "random convex polyhedron (points on a sphere)");
    gen->add_option("--points", points, "number of sphere points")->required();
    gen->add_option("--seed", seed, "RNG seed")->required();
    gen->add_option("--out", out_file, "output mesh (.off/.json)")->required();

    CLI::App* bench = app.add_subcommand("bench", "runtime table for the pipeline");
    bench->add_option("--sizes", sizes, "comma-separated facet-count targets");
    bench->add_option("--seed", seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(file);
        if (path->parsed()) return cmd_path(file, noncrossing, json_out, seed_facet);
        if (cycle->parsed())
            return cmd_cycle(file, start_facet >= 0 ? std::optional<int>(start_facet) : std::nullopt,
                             json_out, seed_facet);
        if (unfold->parsed()) {
            if (want_cycle && want_path)
                throw InvalidInputError("--cycle and --path are mutually exclusive");
            return cmd_unfold(file, want_cycle, gap, noncrossing,
                              start_facet >= 0 ? std::optional<int>(start_facet) : std::nullopt,
                              svg_out, json_out, show_strips, labels, seed_facet);
        }
        if (gen->parsed()) return cmd_gen(points, seed, out_file);
        if (bench->parsed()) return cmd_bench(sizes, seed);
    } catch (const CycleImpossibleError& e) {
        std::cerr << bad("no facet cycle") << " [" << e.reason() << "]: " << e.what() << '\n';
        return 3;
    } catch (const InvalidInputError& e) {
        std::cerr << bad("invalid input") << ": " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        std::cerr << bad("internal invariant failure") << ": " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << bad("unexpected error") << ": " << e.what() << '\n';
        return 4;
    }
    return 0;
}
