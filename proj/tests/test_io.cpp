#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "corpus.hpp"
#include "vunfold/facet_path.hpp"
#include "vunfold/io.hpp"

using namespace vunfold;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
    int n = 0;
    for (size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1))
        ++n;
    return n;
}

const char* kOctahedronOff =
    "OFF\n"
    "# a comment\n"
    "6 8 12\n"
    "1 0 0\n-1 0 0\n0 1 0\n0 -1 0\n0 0 1\n0 0 -1\n"
    "3 0 2 4\n3 2 1 4\n3 1 3 4\n3 3 0 4\n3 2 0 5\n3 1 2 5\n3 3 1 5\n3 0 3 5\n";

}  // namespace

TEST_CASE("OFF reader parses the octahedron") {
    std::istringstream in(kOctahedronOff);
    const SimplicialComplex c = read_off(in);
    CHECK(c.vertex_count == 6);
    CHECK(c.facet_count() == 8);
    CHECK(c == corpus::octahedron());
}

TEST_CASE("OFF reader accepts counts on the header line") {
    std::istringstream in("OFF 3 1 3\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
    const SimplicialComplex c = read_off(in);
    CHECK(c.vertex_count == 3);
    CHECK(c.facet_count() == 1);
}

TEST_CASE("OFF round trip") {
    const SimplicialComplex c = gen_hull(25, 5);
    std::ostringstream out;
    write_off(out, c);
    std::istringstream in(out.str());
    CHECK(read_off(in) == c);
}

TEST_CASE("OFF reader reports positioned errors") {
    SECTION("non-triangular face") {
        std::istringstream in("OFF\n4 1 0\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n4 0 1 2 3\n");
        try {
            read_off(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 7);
            CHECK(std::string(e.what()).find("non-triangular") != std::string::npos);
        }
    }
    SECTION("truncated file") {
        std::istringstream in("OFF\n6 8 12\n1 0 0\n");
        CHECK_THROWS_AS(read_off(in), ParseError);
    }
    SECTION("bad coordinate") {
        std::istringstream in("OFF\n3 1 0\n0 0 zero\n1 0 0\n0 1 0\n3 0 1 2\n");
        CHECK_THROWS_AS(read_off(in), ParseError);
    }
}

TEST_CASE("OBJ reader handles slash references and rejects quads") {
    SECTION("triangles with texture/normal refs") {
        std::istringstream in(
            "# comment\nv 0 0 0\nv 1 0 0\nv 0 1 0\nv 0 0 1\n"
            "vn 0 0 1\nf 1/1/1 2/2/1 3/3/1\nf 1//1 2//1 4//1\nf 2 3 4\nf -4 -2 -1\n");
        const SimplicialComplex c = read_obj(in);
        CHECK(c.vertex_count == 4);
        CHECK(c.facet_count() == 4);
        CHECK(c.facets[3] == std::vector<int>{0, 2, 3});
    }
    SECTION("quad face") {
        std::istringstream in("v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1 2 3 4\n");
        try {
            read_obj(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("non-triangular") != std::string::npos);
            CHECK(e.line == 5);
        }
    }
}

TEST_CASE("JSON complex documents round trip") {
    SimplicialComplex c = corpus::simplex_boundary(3);  // 5 tetrahedra
    c.labels = std::vector<std::string>{"a", "b", "c", "d", "e"};
    const nlohmann::json j = complex_to_json(c);
    CHECK(complex_from_json(j) == c);

    std::istringstream in(j.dump());
    CHECK(read_json(in) == c);
}

TEST_CASE("JSON parse errors carry a position") {
    std::istringstream in("{\n  \"dim\": 2,\n  broken\n}\n");
    try {
        read_json(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("JSON documents with missing fields are rejected") {
    std::istringstream in("{\"dim\": 2}");
    CHECK_THROWS_AS(read_json(in), InvalidInputError);
}

TEST_CASE("readers reject invalid complexes at load time") {
    // degenerate (collinear) triangle
    std::istringstream in("OFF\n3 1 0\n0 0 0\n1 0 0\n2 0 0\n3 0 1 2\n");
    CHECK_THROWS_AS(read_off(in), InvalidInputError);
}

TEST_CASE("layout JSON round trips to an identical StripLayout") {
    const SimplicialComplex c = corpus::cube_triangulated();
    const StripLayout lay = layout(c, facet_cycle(c), 0.25);
    const nlohmann::json j = layout_to_json(lay, c, 1234);
    CHECK(j["provenance"]["seed"] == 1234);
    CHECK(j["provenance"]["tool_version"] == kToolVersion);
    const StripLayout back = layout_from_json(j);
    CHECK(back == lay);
}

TEST_CASE("input hash is stable and input-sensitive") {
    const std::string h1 = input_hash(corpus::octahedron());
    CHECK(h1 == input_hash(corpus::octahedron()));
    CHECK(h1 != input_hash(corpus::icosahedron()));
    CHECK(h1.substr(0, 8) == "fnv1a64:");
}

TEST_CASE("SVG output for the cube layout") {
    const SimplicialComplex c = corpus::cube_triangulated();
    const StripLayout lay = layout(c, facet_cycle(c), 0.0);
    const std::string svg = write_svg(lay, c);
    CHECK(count_occurrences(svg, "<polygon") == 12);
    CHECK(svg == write_svg(lay, c));  // byte-identical

    SECTION("strip guides and labels") {
        SvgOptions opt;
        opt.show_strips = true;
        opt.labels = true;
        const std::string full = write_svg(lay, c, opt);
        CHECK(count_occurrences(full, "<rect class=\"strip\"") == 12);
        CHECK(count_occurrences(full, "<text") == 36);
    }
}

TEST_CASE("SVG coordinates match the JSON document to 9 significant digits") {
    const SimplicialComplex c = corpus::octahedron();
    const StripLayout lay = layout(c, facet_cycle(c), 0.1);
    const std::string svg = write_svg(lay, c, {.fill_by_parity = false});
    const nlohmann::json j = layout_to_json(lay, c);

    // pull every polygon point back out of the SVG text
    size_t at = 0;
    for (const auto& pj : j["placements"]) {
        at = svg.find("<polygon points=\"", at);
        REQUIRE(at != std::string::npos);
        const size_t end = svg.find('"', at + 17);
        std::string pts = svg.substr(at + 17, end - at - 17);
        for (char& ch : pts)
            if (ch == ',') ch = ' ';
        std::istringstream ss(pts);
        for (const auto& coord : pj["coords"]) {
            double x = 0, y = 0;
            REQUIRE((ss >> x >> y));
            const double cx = coord[0].get<double>(), cy = -coord[1].get<double>();
            CHECK(std::abs(x - cx) <= 1e-8 * std::max(1.0, std::abs(cx)));
            CHECK(std::abs(y - cy) <= 1e-8 * std::max(1.0, std::abs(cy)));
        }
        at = end;
    }
}

TEST_CASE("SVG writer rejects higher-dimensional layouts, JSON accepts them") {
    const SimplicialComplex c = corpus::simplex_path(4);
    const StripLayout lay = layout(c, facet_path(c));
    CHECK_THROWS_AS(write_svg(lay, c), InvalidInputError);
    CHECK_NOTHROW(layout_to_json(lay, c));
}

TEST_CASE("uncertified layouts are never emitted") {
    const SimplicialComplex c = corpus::octahedron();
    StripLayout lay = layout(c, facet_cycle(c));
    for (Point& p : lay.placements[2].coords)
        for (double& x : p) x *= 2.0;  // break congruence
    CHECK_THROWS_AS(layout_to_json(lay, c), InternalError);
    CHECK_THROWS_AS(write_svg(lay, c), InternalError);
}

TEST_CASE("file extension dispatch") {
    const SimplicialComplex c = gen_hull(12, 6);
    const std::string dir = std::filesystem::temp_directory_path().string();
    write_complex_file(dir + "/vunfold_test.off", c);
    write_complex_file(dir + "/vunfold_test.json", c);
    CHECK(read_complex_file(dir + "/vunfold_test.off") == c);
    CHECK(read_complex_file(dir + "/vunfold_test.json") == c);
    CHECK_THROWS_AS(read_complex_file(dir + "/vunfold_test.xyz"), InvalidInputError);
    CHECK_THROWS_AS(read_complex_file(dir + "/definitely_missing.off"), InvalidInputError);
}
