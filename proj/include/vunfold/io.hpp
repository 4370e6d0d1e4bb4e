#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vunfold/strip_layout.hpp"

namespace vunfold {

inline constexpr const char* kToolVersion = "0.1.0";

namespace detail {

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char byte : data) {
        h ^= byte;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << data;
}

// fixed 9-significant-digit formatting for SVG output
inline std::string fmt9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline void reject_invalid(const SimplicialComplex& c) {
    const ValidationReport rep = validate_structure(c);
    if (!rep.ok())
        throw InvalidInputError("invalid complex: " + rep.violations.front().message +
                                " [" + rep.violations.front().code + "]");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// complex readers

/// OFF reader (triangular faces only; trailing per-line extras such as face
/// colors are ignored).
inline SimplicialComplex read_off(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_tokens = [&](const char* what) {
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ss(line);
            std::vector<std::string> tokens;
            std::string t;
            while (ss >> t) tokens.push_back(t);
            if (!tokens.empty()) return tokens;
        }
        throw ParseError(std::string("unexpected end of OFF file, expected ") + what, lineno);
    };

    std::vector<std::string> head = next_tokens("header or counts");
    if (head[0] == "OFF") {
        head.erase(head.begin());
        if (head.empty()) head = next_tokens("counts");
    }
    if (head.size() < 2) throw ParseError("OFF counts line needs vertex and face counts", lineno);
    int nv = 0, nf = 0;
    try {
        nv = std::stoi(head[0]);
        nf = std::stoi(head[1]);
    } catch (...) {
        throw ParseError("bad OFF counts", lineno);
    }

    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = nv;
    c.coords.emplace();
    for (int v = 0; v < nv; ++v) {
        const auto tokens = next_tokens("vertex coordinates");
        if (tokens.size() < 3) throw ParseError("vertex line needs 3 coordinates", lineno);
        Point p(3);
        try {
            for (int j = 0; j < 3; ++j) p[j] = std::stod(tokens[j]);
        } catch (...) {
            throw ParseError("bad vertex coordinate", lineno);
        }
        c.coords->push_back(std::move(p));
    }
    for (int f = 0; f < nf; ++f) {
        const auto tokens = next_tokens("face");
        int k = 0;
        try {
            k = std::stoi(tokens[0]);
        } catch (...) {
            throw ParseError("bad face vertex count", lineno);
        }
        if (k != 3) throw ParseError("non-triangular face (" + std::to_string(k) + " vertices)", lineno);
        if (static_cast<int>(tokens.size()) < 1 + k) throw ParseError("truncated face line", lineno);
        std::vector<int> fac(3);
        try {
            for (int j = 0; j < 3; ++j) fac[j] = std::stoi(tokens[1 + j]);
        } catch (...) {
            throw ParseError("bad face index", lineno);
        }
        c.facets.push_back(std::move(fac));
    }
    detail::reject_invalid(c);
    return c;
}

/// OBJ reader: v and f directives, triangular faces only, no implicit
/// triangulation of polygons.
inline SimplicialComplex read_obj(std::istream& in) {
    SimplicialComplex c;
    c.dim = 2;
    c.coords.emplace();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag[0] == '#') continue;
        if (tag == "v") {
            Point p(3);
            if (!(ss >> p[0] >> p[1] >> p[2]))
                throw ParseError("vertex line needs 3 coordinates", lineno);
            c.coords->push_back(std::move(p));
        } else if (tag == "f") {
            std::vector<int> fac;
            std::string ref;
            while (ss >> ref) {
                const std::string head = ref.substr(0, ref.find('/'));
                int idx = 0;
                try {
                    idx = std::stoi(head);
                } catch (...) {
                    throw ParseError("bad face index '" + ref + "'", lineno);
                }
                const int nv = static_cast<int>(c.coords->size());
                if (idx > 0)
                    fac.push_back(idx - 1);
                else if (idx < 0)
                    fac.push_back(nv + idx);
                else
                    throw ParseError("face index 0 is not allowed", lineno);
            }
            if (fac.size() != 3)
                throw ParseError("non-triangular face (" + std::to_string(fac.size()) + " vertices)",
                                 lineno);
            c.facets.push_back(std::move(fac));
        }
        // all other directives ignored
    }
    c.vertex_count = static_cast<int>(c.coords->size());
    detail::reject_invalid(c);
    return c;
}

// ---------------------------------------------------------------------------
// JSON documents

inline nlohmann::json complex_to_json(const SimplicialComplex& c) {
    nlohmann::json j;
    j["dim"] = c.dim;
    j["vertex_count"] = c.vertex_count;
    j["facets"] = c.facets;
    if (c.coords) j["coords"] = *c.coords;
    if (c.labels) j["labels"] = *c.labels;
    return j;
}

inline SimplicialComplex complex_from_json(const nlohmann::json& j) {
    SimplicialComplex c;
    try {
        c.dim = j.at("dim").get<int>();
        c.vertex_count = j.at("vertex_count").get<int>();
        c.facets = j.at("facets").get<std::vector<std::vector<int>>>();
        if (j.contains("coords") && !j["coords"].is_null())
            c.coords = j["coords"].get<std::vector<Point>>();
        if (j.contains("labels") && !j["labels"].is_null())
            c.labels = j["labels"].get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("bad complex document: ") + e.what());
    }
    detail::reject_invalid(c);
    return c;
}

inline SimplicialComplex read_json(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        int line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
        }
        throw ParseError(std::string("JSON parse error: ") + e.what(), line, col);
    }
    return complex_from_json(j);
}

/// Reads a complex from a file, dispatching on the extension
/// (.off / .obj / .json).
inline SimplicialComplex read_complex_file(const std::string& path) {
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    const std::string text = detail::slurp(path);
    std::istringstream in(text);
    if (ext == "off" || ext == "OFF") return read_off(in);
    if (ext == "obj" || ext == "OBJ") return read_obj(in);
    if (ext == "json" || ext == "JSON") return read_json(in);
    throw InvalidInputError("unknown mesh file extension '" + ext + "' (want .off, .obj or .json)");
}

inline void write_complex_json_file(const std::string& path, const SimplicialComplex& c) {
    detail::spit(path, complex_to_json(c).dump(2) + "\n");
}

/// OFF writer; requires dim 2 with 3D coordinates.
inline void write_off(std::ostream& out, const SimplicialComplex& c) {
    if (c.dim != 2 || !c.coords || (!c.coords->empty() && (*c.coords)[0].size() != 3))
        throw InvalidInputError("OFF output requires a 2-complex with 3D coordinates");
    out << "OFF\n" << c.vertex_count << ' ' << c.facet_count() << " 0\n";
    for (const Point& p : *c.coords)
        out << detail::fmt17(p[0]) << ' ' << detail::fmt17(p[1]) << ' ' << detail::fmt17(p[2])
            << '\n';
    for (const auto& f : c.facets) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

inline void write_complex_file(const std::string& path, const SimplicialComplex& c) {
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "off" || ext == "OFF") {
        std::ostringstream out;
        write_off(out, c);
        detail::spit(path, out.str());
    } else if (ext == "json" || ext == "JSON") {
        write_complex_json_file(path, c);
    } else {
        throw InvalidInputError("unknown output extension '" + ext + "' (want .off or .json)");
    }
}

// ---------------------------------------------------------------------------
// layout documents

struct LayoutProvenance {
    std::string input_hash;
    std::optional<std::uint64_t> seed;
    std::string tool_version = kToolVersion;
};

inline std::string input_hash(const SimplicialComplex& c) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(detail::fnv1a64(complex_to_json(c).dump())));
    return std::string("fnv1a64:") + buf;
}

/// Layout JSON document.  The layout must verify against the complex before
/// anything is written; an uncertified unfolding is never emitted.
inline nlohmann::json layout_to_json(const StripLayout& layout, const SimplicialComplex& c,
                                     std::optional<std::uint64_t> seed = {}) {
    const ValidationReport rep = verify_layout(layout, c);
    if (!rep.ok())
        throw InternalError("refusing to emit uncertified layout: " + rep.violations.front().code);

    nlohmann::json j;
    j["format"] = "vunfold-layout";
    j["dim"] = layout.dim;
    j["gap"] = layout.gap;
    j["provenance"] = {{"input_hash", input_hash(c)}, {"tool_version", kToolVersion}};
    if (seed)
        j["provenance"]["seed"] = *seed;
    else
        j["provenance"]["seed"] = nullptr;
    j["path"] = {{"cyclic", layout.path.cyclic},
                 {"vertices", layout.path.vertices},
                 {"facets", layout.path.facets}};
    j["placements"] = nlohmann::json::array();
    for (const Placement& pl : layout.placements)
        j["placements"].push_back({{"facet", pl.facet},
                                   {"entry", pl.entry},
                                   {"exit", pl.exit},
                                   {"strip", {pl.x_left, pl.x_right}},
                                   {"coords", pl.coords}});
    return j;
}

inline StripLayout layout_from_json(const nlohmann::json& j) {
    StripLayout layout;
    try {
        if (j.at("format").get<std::string>() != "vunfold-layout")
            throw InvalidInputError("not a layout document");
        layout.dim = j.at("dim").get<int>();
        layout.gap = j.at("gap").get<double>();
        layout.path.cyclic = j.at("path").at("cyclic").get<bool>();
        layout.path.vertices = j.at("path").at("vertices").get<std::vector<int>>();
        layout.path.facets = j.at("path").at("facets").get<std::vector<int>>();
        for (const auto& pj : j.at("placements")) {
            Placement pl;
            pl.facet = pj.at("facet").get<int>();
            pl.entry = pj.at("entry").get<int>();
            pl.exit = pj.at("exit").get<int>();
            pl.x_left = pj.at("strip").at(0).get<double>();
            pl.x_right = pj.at("strip").at(1).get<double>();
            pl.coords = pj.at("coords").get<std::vector<Point>>();
            layout.placements.push_back(std::move(pl));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("bad layout document: ") + e.what());
    }
    return layout;
}

inline void write_layout_json_file(const std::string& path, const StripLayout& layout,
                                   const SimplicialComplex& c,
                                   std::optional<std::uint64_t> seed = {}) {
    detail::spit(path, layout_to_json(layout, c, seed).dump(2) + "\n");
}

inline StripLayout read_layout_json_file(const std::string& path) {
    const std::string text = detail::slurp(path);
    try {
        return layout_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what(), 0);
    }
}

// ---------------------------------------------------------------------------
// SVG

struct SvgOptions {
    std::string stroke = "#1a1a1a";
    bool fill_by_parity = true;
    bool show_strips = false;
    bool labels = false;
};

/// SVG rendering of a 2D layout: one polygon per facet, optional strip
/// guides and vertex labels.  The y axis is flipped so that "above the
/// axis" in layout coordinates renders upward.  Output is byte-identical
/// for fixed input and options; coordinates carry 9 significant digits.
inline std::string write_svg(const StripLayout& layout, const SimplicialComplex& c,
                             const SvgOptions& opt = {}) {
    if (layout.dim != 2)
        throw InvalidInputError("SVG output requires a 2D layout (use JSON for higher dimension)");
    const ValidationReport rep = verify_layout(layout, c);
    if (!rep.ok())
        throw InternalError("refusing to emit uncertified layout: " + rep.violations.front().code);

    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const Placement& pl : layout.placements)
        for (const Point& p : pl.coords) {
            const double y = -p[1];
            if (first) {
                xmin = xmax = p[0];
                ymin = ymax = y;
                first = false;
            }
            xmin = std::min(xmin, p[0]);
            xmax = std::max(xmax, p[0]);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    const double margin = 0.05 * std::max({xmax - xmin, ymax - ymin, 1.0});
    const double stroke_width = 0.0025 * std::max({xmax - xmin, ymax - ymin, 1.0});
    using detail::fmt9;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt9(xmin - margin) << ' '
        << fmt9(ymin - margin) << ' ' << fmt9(xmax - xmin + 2 * margin) << ' '
        << fmt9(ymax - ymin + 2 * margin) << "\">\n";

    if (opt.show_strips)
        for (const Placement& pl : layout.placements)
            svg << "  <rect class=\"strip\" x=\"" << fmt9(pl.x_left) << "\" y=\""
                << fmt9(ymin - margin) << "\" width=\"" << fmt9(pl.width()) << "\" height=\""
                << fmt9(ymax - ymin + 2 * margin)
                << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"" << fmt9(stroke_width / 2)
                << "\"/>\n";

    int parity = 0;
    for (const Placement& pl : layout.placements) {
        svg << "  <polygon points=\"";
        for (size_t i = 0; i < pl.coords.size(); ++i) {
            if (i) svg << ' ';
            svg << fmt9(pl.coords[i][0]) << ',' << fmt9(-pl.coords[i][1]);
        }
        const char* fill = !opt.fill_by_parity ? "none" : (parity ? "#9ecadb" : "#d7ebf2");
        svg << "\" fill=\"" << fill << "\" stroke=\"" << opt.stroke << "\" stroke-width=\""
            << fmt9(stroke_width) << "\"/>\n";
        parity ^= 1;
    }

    if (opt.labels) {
        const double font = 8 * stroke_width;
        for (const Placement& pl : layout.placements)
            for (size_t i = 0; i < pl.coords.size(); ++i) {
                const int v = c.facets[pl.facet][i];
                const std::string name = c.labels ? (*c.labels)[v] : std::to_string(v);
                svg << "  <text x=\"" << fmt9(pl.coords[i][0]) << "\" y=\"" << fmt9(-pl.coords[i][1])
                    << "\" font-size=\"" << fmt9(font) << "\">" << name << "</text>\n";
            }
    }
    svg << "</svg>\n";
    return svg.str();
}

inline void write_svg_file(const std::string& path, const StripLayout& layout,
                           const SimplicialComplex& c, const SvgOptions& opt = {}) {
    detail::spit(path, write_svg(layout, c, opt));
}

}  // namespace vunfold
