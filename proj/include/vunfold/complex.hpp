#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "vunfold/errors.hpp"
#include "vunfold/geometry.hpp"

namespace vunfold {

/// Abstract d-dimensional simplicial complex given as a facet list.
///
/// Vertices are dense integer indices in [0, vertex_count); labels, when
/// present, are metadata only.  Coordinates are optional and may live in any
/// ambient dimension m >= dim.  Ridges (codimension-1 faces) are identified
/// by their sorted vertex tuples, so gluings are orientation-free.
struct SimplicialComplex {
    int dim = 0;
    int vertex_count = 0;
    std::vector<std::vector<int>> facets;
    std::optional<std::vector<Point>> coords;
    std::optional<std::vector<std::string>> labels;

    bool operator==(const SimplicialComplex&) const = default;

    int facet_count() const { return static_cast<int>(facets.size()); }

    /// Coordinates of one facet's vertices, in facet order.
    std::vector<Point> facet_points(int f) const {
        std::vector<Point> pts;
        pts.reserve(facets[f].size());
        for (int v : facets[f]) pts.push_back((*coords)[v]);
        return pts;
    }
};

using Ridge = std::vector<int>;  // sorted vertex tuple

/// The d+1 ridges of a facet: drop each vertex in turn, sort the rest.
inline std::vector<Ridge> facet_ridges(const std::vector<int>& facet) {
    std::vector<Ridge> out;
    out.reserve(facet.size());
    for (size_t skip = 0; skip < facet.size(); ++skip) {
        Ridge r;
        r.reserve(facet.size() - 1);
        for (size_t i = 0; i < facet.size(); ++i)
            if (i != skip) r.push_back(facet[i]);
        std::sort(r.begin(), r.end());
        out.push_back(std::move(r));
    }
    return out;
}

struct Violation {
    std::string code;
    std::string message;
    std::vector<int> indices;

    bool operator==(const Violation&) const = default;
};

/// Machine-checkable certificate produced by every verifier.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string code, std::string message, std::vector<int> indices = {}) {
        violations.push_back({std::move(code), std::move(message), std::move(indices)});
    }

    bool operator==(const ValidationReport&) const = default;
};

/// Bipartite vertex-facet incidence graph: an arc (v, f) whenever v is a
/// vertex of facet f.
struct IncidenceGraph {
    std::vector<std::vector<int>> vertex_facets;  // facets incident to each vertex
    std::vector<std::vector<int>> facet_vertices;

    bool operator==(const IncidenceGraph&) const = default;
};

inline IncidenceGraph incidence_graph(const SimplicialComplex& c) {
    IncidenceGraph g;
    g.vertex_facets.resize(c.vertex_count);
    g.facet_vertices = c.facets;
    for (int f = 0; f < c.facet_count(); ++f)
        for (int v : c.facets[f]) g.vertex_facets[v].push_back(f);
    return g;
}

/// One node per facet, one arc per interior ridge.  Multi-arcs and
/// self-loops are representable, although facet-list complexes with
/// distinct vertices per facet never produce loops.
struct DualArc {
    int a = 0;
    int b = 0;
    Ridge ridge;

    bool operator==(const DualArc&) const = default;
};

struct BoundaryRidge {
    int facet = 0;
    Ridge ridge;

    bool operator==(const BoundaryRidge&) const = default;
};

struct DualGraph {
    int node_count = 0;
    std::vector<DualArc> arcs;
    std::vector<BoundaryRidge> boundary;
    std::vector<std::vector<int>> adjacency;  // per facet: incident arc ids, ascending

    bool operator==(const DualGraph&) const = default;

    int other_end(int arc_id, int facet) const {
        const DualArc& a = arcs[arc_id];
        return a.a == facet ? a.b : a.a;
    }
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // returns false if already in the same set
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep the lowest index as representative
        parent[b] = a;
        return true;
    }
};

// ridge -> list of facets containing it, in facet order
inline std::map<Ridge, std::vector<int>> ridge_occurrences(const SimplicialComplex& c) {
    std::map<Ridge, std::vector<int>> occ;
    for (int f = 0; f < c.facet_count(); ++f)
        for (Ridge& r : facet_ridges(c.facets[f])) occ[std::move(r)].push_back(f);
    return occ;
}

}  // namespace detail

/// Structural validation of the facet list itself: facet sizes, vertex
/// ranges, distinctness, and (when coordinates are present) affine
/// independence of every facet.
inline ValidationReport validate_structure(const SimplicialComplex& c) {
    ValidationReport rep;
    if (c.dim < 1) rep.add("bad-dim", "dimension must be >= 1, got " + std::to_string(c.dim));
    if (c.facets.empty()) rep.add("empty-complex", "facet list is empty");
    if (c.coords && static_cast<int>(c.coords->size()) != c.vertex_count)
        rep.add("coords-count", "coordinate list length does not match vertex_count");
    if (c.labels && static_cast<int>(c.labels->size()) != c.vertex_count)
        rep.add("labels-count", "label list length does not match vertex_count");

    const size_t want = static_cast<size_t>(c.dim) + 1;
    int ambient = -1;
    if (c.coords)
        for (size_t v = 0; v < c.coords->size(); ++v) {
            const int m = static_cast<int>((*c.coords)[v].size());
            if (ambient < 0) ambient = m;
            if (m != ambient || m < c.dim)
                rep.add("coords-dim", "vertex " + std::to_string(v) + " has bad ambient dimension",
                        {static_cast<int>(v)});
        }

    const bool coords_coherent = c.coords && rep.ok();
    for (int f = 0; f < c.facet_count(); ++f) {
        const auto& fac = c.facets[f];
        if (fac.size() != want) {
            rep.add("facet-size",
                    "facet " + std::to_string(f) + " has " + std::to_string(fac.size()) +
                        " vertices, expected " + std::to_string(want),
                    {f});
            continue;
        }
        bool range_ok = true;
        for (int v : fac)
            if (v < 0 || v >= c.vertex_count) {
                rep.add("vertex-out-of-range",
                        "facet " + std::to_string(f) + " references vertex " + std::to_string(v),
                        {f, v});
                range_ok = false;
            }
        if (!range_ok) continue;
        std::vector<int> sorted = fac;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            rep.add("facet-repeated-vertex", "facet " + std::to_string(f) + " repeats a vertex",
                    {f});
        else if (coords_coherent && geom::simplex_degenerate(c.facet_points(f)))
            rep.add("degenerate-facet", "facet " + std::to_string(f) + " is affinely dependent",
                    {f});
    }
    return rep;
}

/// Pseudo-manifold validation: structure plus "every ridge lies in at most
/// two facets" plus a connected dual graph.
inline ValidationReport validate_pseudomanifold(const SimplicialComplex& c) {
    ValidationReport rep = validate_structure(c);
    if (!rep.ok()) return rep;

    const auto occ = detail::ridge_occurrences(c);
    detail::UnionFind uf(c.facet_count());
    for (const auto& [ridge, facets] : occ) {
        if (facets.size() > 2) {
            Violation v{"ridge-overused", "ridge {", facets};
            for (size_t i = 0; i < ridge.size(); ++i)
                v.message += (i ? "," : "") + std::to_string(ridge[i]);
            v.message += "} lies in " + std::to_string(facets.size()) + " facets";
            rep.violations.push_back(std::move(v));
        }
        for (size_t i = 1; i < facets.size(); ++i) uf.unite(facets[0], facets[i]);
    }
    for (int f = 1; f < c.facet_count(); ++f)
        if (uf.find(f) != uf.find(0)) {
            rep.add("disconnected-dual", "dual graph is disconnected (facet " + std::to_string(f) +
                                             " unreachable from facet 0)",
                    {f});
            break;
        }
    return rep;
}

/// Dual graph with deterministic arc ordering: arcs sorted by facet-index
/// pair, then by ridge.  Rejects complexes failing pseudo-manifold
/// validation.
inline DualGraph build_dual(const SimplicialComplex& c) {
    ValidationReport rep = validate_pseudomanifold(c);
    if (!rep.ok())
        throw InvalidInputError("build_dual: complex failed pseudo-manifold validation: " +
                                rep.violations.front().code);

    DualGraph g;
    g.node_count = c.facet_count();
    for (const auto& [ridge, facets] : detail::ridge_occurrences(c)) {
        if (facets.size() == 1)
            g.boundary.push_back({facets[0], ridge});
        else
            g.arcs.push_back({std::min(facets[0], facets[1]), std::max(facets[0], facets[1]), ridge});
    }
    std::sort(g.arcs.begin(), g.arcs.end(), [](const DualArc& x, const DualArc& y) {
        return std::tie(x.a, x.b, x.ridge) < std::tie(y.a, y.b, y.ridge);
    });
    std::sort(g.boundary.begin(), g.boundary.end(), [](const BoundaryRidge& x, const BoundaryRidge& y) {
        return std::tie(x.facet, x.ridge) < std::tie(y.facet, y.ridge);
    });
    g.adjacency.resize(g.node_count);
    for (int i = 0; i < static_cast<int>(g.arcs.size()); ++i) {
        g.adjacency[g.arcs[i].a].push_back(i);
        if (g.arcs[i].b != g.arcs[i].a) g.adjacency[g.arcs[i].b].push_back(i);
    }
    return g;
}

/// A dual graph is simple when no facet pair shares two ridges and no facet
/// is glued to itself.
inline bool is_simplicial(const DualGraph& dual) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(dual.arcs.size());
    for (const DualArc& a : dual.arcs) {
        if (a.a == a.b) return false;
        pairs.emplace_back(a.a, a.b);
    }
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

inline bool is_simplicial(const SimplicialComplex& c) { return is_simplicial(build_dual(c)); }

/// Facets incident to a vertex, ordered by successive edge-sharing around
/// it; cyclic for interior vertices, linear for boundary vertices.
struct VertexRotation {
    std::vector<int> facets;
    bool cyclic = false;

    bool operator==(const VertexRotation&) const = default;
};

/// Rotation order of the facets around vertex v of a 2-manifold.  Fails
/// with NonManifoldStarError when the star is not a single edge-connected
/// chain or cycle.
inline VertexRotation vertex_rotation(const SimplicialComplex& c, int v) {
    if (c.dim != 2) throw InvalidInputError("vertex_rotation requires dim == 2");
    if (v < 0 || v >= c.vertex_count) throw InvalidInputError("vertex_rotation: bad vertex index");

    std::vector<int> star;
    for (int f = 0; f < c.facet_count(); ++f)
        if (std::find(c.facets[f].begin(), c.facets[f].end(), v) != c.facets[f].end())
            star.push_back(f);
    if (star.empty()) throw InvalidInputError("vertex_rotation: vertex has no incident facets");

    // edges through v -> star facets containing them
    std::map<int, std::vector<int>> edge_facets;  // keyed by the other endpoint
    for (int f : star)
        for (int w : c.facets[f])
            if (w != v) edge_facets[w].push_back(f);

    // star-local facet adjacency: facets sharing an edge through v
    std::map<int, std::vector<int>> nbrs;
    int open_edges = 0;
    for (auto& [w, fs] : edge_facets) {
        if (fs.size() > 2)
            throw NonManifoldStarError("edge through vertex " + std::to_string(v) +
                                       " lies in more than two facets");
        if (fs.size() == 1)
            ++open_edges;
        else {
            nbrs[fs[0]].push_back(fs[1]);
            nbrs[fs[1]].push_back(fs[0]);
        }
    }

    VertexRotation rot;
    rot.cyclic = (open_edges == 0);
    if (!rot.cyclic && open_edges != 2)
        throw NonManifoldStarError("star of vertex " + std::to_string(v) +
                                   " is not a single chain");

    int start = -1;
    if (rot.cyclic)
        start = *std::min_element(star.begin(), star.end());
    else  // lowest facet with an unshared edge through v
        for (int f : star) {
            size_t shared = nbrs.count(f) ? nbrs[f].size() : 0;
            if (shared < 2) {
                start = f;
                break;
            }
        }
    if (start < 0) throw NonManifoldStarError("star of vertex " + std::to_string(v) + " malformed");

    rot.facets.push_back(start);
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int g : nbrs[cur])
            if (g != prev && (next == -1 || g < next)) next = g;
        if (next == -1 || next == start) break;
        rot.facets.push_back(next);
        prev = cur;
        cur = next;
        if (rot.facets.size() > star.size())
            throw NonManifoldStarError("star of vertex " + std::to_string(v) +
                                       " does not form a single chain");
    }
    if (rot.facets.size() != star.size())
        throw NonManifoldStarError("star of vertex " + std::to_string(v) +
                                   " does not form a single chain");
    return rot;
}

}  // namespace vunfold
