#pragma once

// Shared mesh builders for the test suites.

#include <random>

#include "vunfold/complex.hpp"
#include "vunfold/hull.hpp"

namespace corpus {

using vunfold::Point;
using vunfold::SimplicialComplex;

inline SimplicialComplex tetrahedron() {
    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = 4;
    c.coords = std::vector<Point>{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    c.facets = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    return c;
}

inline SimplicialComplex octahedron() {
    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = 6;
    c.coords = std::vector<Point>{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    c.facets = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4}, {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
    return c;
}

inline SimplicialComplex icosahedron() {
    const double p = (1.0 + std::sqrt(5.0)) / 2.0;
    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = 12;
    c.coords = std::vector<Point>{{-1, p, 0}, {1, p, 0},  {-1, -p, 0}, {1, -p, 0},
                                  {0, -1, p}, {0, 1, p},  {0, -1, -p}, {0, 1, -p},
                                  {p, 0, -1}, {p, 0, 1},  {-p, 0, -1}, {-p, 0, 1}};
    c.facets = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},  {0, 7, 10}, {0, 10, 11},
                {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                {3, 9, 4},  {3, 4, 2},  {3, 2, 6},  {3, 6, 8},  {3, 8, 9},
                {4, 9, 5},  {2, 4, 11}, {6, 2, 10}, {8, 6, 7},  {9, 8, 1}};
    return c;
}

/// The standard 12-triangle triangulation of the cube surface.
inline SimplicialComplex cube_triangulated() {
    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = 8;
    c.coords = std::vector<Point>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                                  {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    c.facets = {{0, 2, 1}, {0, 3, 2},   // bottom
                {4, 5, 6}, {4, 6, 7},   // top
                {0, 1, 5}, {0, 5, 4},   // front
                {1, 2, 6}, {1, 6, 5},   // right
                {2, 3, 7}, {2, 7, 6},   // back
                {3, 0, 4}, {3, 4, 7}};  // left
    return c;
}

/// Triangulated dodecahedron: vertices at icosahedron face centroids, one
/// pentagon per icosahedron vertex, fan-triangulated from its lowest corner.
inline SimplicialComplex dodecahedron_triangulated() {
    const SimplicialComplex ico = icosahedron();
    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = ico.facet_count();
    c.coords.emplace();
    for (int f = 0; f < ico.facet_count(); ++f) {
        Point cen(3, 0.0);
        for (int v : ico.facets[f])
            for (int j = 0; j < 3; ++j) cen[j] += (*ico.coords)[v][j] / 3.0;
        c.coords->push_back(std::move(cen));
    }
    for (int v = 0; v < ico.vertex_count; ++v) {
        const vunfold::VertexRotation rot = vunfold::vertex_rotation(ico, v);
        std::vector<int> penta = rot.facets;  // cyclic order of 5 faces
        const auto low = std::min_element(penta.begin(), penta.end());
        std::rotate(penta.begin(), low, penta.end());
        for (size_t i = 1; i + 1 < penta.size(); ++i)
            c.facets.push_back({penta[0], penta[i], penta[i + 1]});
    }
    return c;
}

/// One central triangle adjacent to three outer triangles; the smallest
/// checkered polygon triangulation beyond a single triangle.  The center is
/// facet 3.
inline SimplicialComplex triforce() {
    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = 6;
    c.coords = std::vector<Point>{{0, 0}, {2, 0}, {1, std::sqrt(3.0)},
                                  {1, 0}, {1.5, std::sqrt(3.0) / 2}, {0.5, std::sqrt(3.0) / 2}};
    c.facets = {{0, 3, 5}, {3, 1, 4}, {5, 4, 2}, {3, 4, 5}};
    return c;
}

inline SimplicialComplex single_triangle() {
    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = 3;
    c.coords = std::vector<Point>{{0, 0}, {1, 0}, {0, 1}};
    c.facets = {{0, 1, 2}};
    return c;
}

/// Fan of k triangles around the apex vertex 0.
inline SimplicialComplex fan(int k) {
    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = k + 2;
    c.coords.emplace();
    c.coords->push_back({0, 0});
    for (int j = 1; j <= k + 1; ++j) {
        const double th = 3.14159265358979323846 * (j - 1) / (k + 1);
        c.coords->push_back({std::cos(th), std::sin(th)});
    }
    for (int i = 1; i <= k; ++i) c.facets.push_back({0, i, i + 1});
    return c;
}

/// Zigzag strip of k triangles (i, i+1, i+2); its dual is a path and its
/// scaffold splits into vertex-disjoint pieces, which exercises flips.
inline SimplicialComplex snake(int k) {
    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = k + 2;
    c.coords.emplace();
    for (int j = 0; j < k + 2; ++j)
        c.coords->push_back({static_cast<double>(j), static_cast<double>(j % 2)});
    for (int i = 0; i < k; ++i) c.facets.push_back({i, i + 1, i + 2});
    return c;
}

/// Recursive checkered polygon triangulation: level 0 is a single triangle,
/// level 1 the triforce; at each further level every black leaf sprouts a
/// white triangle with two fresh black ears.  Sizes 1, 4, 13, 31, ...
inline SimplicialComplex layered_checkered(int levels) {
    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = 3;
    c.facets = {{0, 1, 2}};
    if (levels == 0) return c;

    struct Black {
        int facet;
        std::array<int, 2> free_edge;  // one free edge to grow from
    };
    std::vector<Black> blacks;
    auto attach = [&c](int a, int b) {
        const int w = c.vertex_count++;
        c.facets.push_back({a, b, w});
        return w;
    };
    // level 1: the root triangle becomes white with three black ears
    for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
        const int w = attach(a, b);
        blacks.push_back({static_cast<int>(c.facets.size()) - 1, {a, w}});
    }
    for (int level = 2; level <= levels; ++level) {
        std::vector<Black> next;
        for (const Black& blk : blacks) {
            // white child on the black's free edge
            const auto [a, b] = blk.free_edge;
            const int w = attach(a, b);
            const int white = static_cast<int>(c.facets.size()) - 1;
            // two fresh black ears on the white's free edges
            for (auto [x, y] : {std::pair{a, w}, std::pair{b, w}}) {
                const int z = attach(x, y);
                (void)white;
                next.push_back({static_cast<int>(c.facets.size()) - 1, {x, z}});
            }
        }
        blacks = std::move(next);
    }
    return c;
}

/// A 7-facet checkered polygon triangulation with two white facets.
inline SimplicialComplex checkered7() {
    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = 9;
    c.facets = {{0, 1, 2}, {0, 1, 3}, {1, 2, 4}, {0, 2, 5}, {1, 3, 6}, {3, 6, 7}, {1, 6, 8}};
    return c;
}

/// Abstract Klein bottle from a k-by-k grid with a reversed top-bottom
/// identification; it cannot carry an embedding, so no coordinates.
inline SimplicialComplex klein_bottle(int k = 4) {
    auto canon = [k](int x, int y) {
        if (y == k) {
            x = k - x;
            y = 0;
        }
        x = ((x % k) + k) % k;
        return y * k + x;
    };
    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = k * k;
    for (int y = 0; y < k; ++y)
        for (int x = 0; x < k; ++x) {
            const int a = canon(x, y), b = canon(x + 1, y), cc = canon(x + 1, y + 1),
                      d = canon(x, y + 1);
            c.facets.push_back({a, b, cc});
            c.facets.push_back({a, cc, d});
        }
    return c;
}

/// Chain of k d-simplices {i, ..., i+d} on the moment curve.
inline SimplicialComplex simplex_path(int k, int d = 3) {
    SimplicialComplex c;
    c.dim = d;
    c.vertex_count = k + d;
    c.coords.emplace();
    for (int j = 0; j < k + d; ++j) {
        Point p(d);
        double t = 1.0;
        for (int e = 0; e < d; ++e) p[e] = (t *= j + 1);
        c.coords->push_back(std::move(p));
    }
    for (int i = 0; i < k; ++i) {
        std::vector<int> fac(d + 1);
        std::iota(fac.begin(), fac.end(), i);
        c.facets.push_back(std::move(fac));
    }
    return c;
}

/// Boundary complex of a (d+1)-simplex: d+2 vertices, all (d+1)-subsets.
inline SimplicialComplex simplex_boundary(int d = 3) {
    SimplicialComplex c;
    c.dim = d;
    c.vertex_count = d + 2;
    c.coords.emplace();
    for (int j = 0; j < d + 2; ++j) {
        Point p(d);
        double t = 1.0;
        for (int e = 0; e < d; ++e) p[e] = (t *= j + 1);
        c.coords->push_back(std::move(p));
    }
    for (int skip = 0; skip < d + 2; ++skip) {
        std::vector<int> fac;
        for (int j = 0; j < d + 2; ++j)
            if (j != skip) fac.push_back(j);
        c.facets.push_back(std::move(fac));
    }
    return c;
}

inline SimplicialComplex single_simplex(int d) {
    SimplicialComplex c;
    c.dim = d;
    c.vertex_count = d + 1;
    c.coords.emplace();
    for (int j = 0; j < d + 1; ++j) {
        Point p(d, 0.0);
        if (j > 0) p[j - 1] = 1.0;
        c.coords->push_back(std::move(p));
    }
    std::vector<int> fac(d + 1);
    std::iota(fac.begin(), fac.end(), 0);
    c.facets = {fac};
    return c;
}

/// Two triangles on the same vertex set: a pseudo-manifold whose dual has
/// three parallel arcs (the simplest non-simplicial 2-manifold).
inline SimplicialComplex double_triangle() {
    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = 3;
    c.facets = {{0, 1, 2}, {0, 1, 2}};
    return c;
}

/// Random polygon triangulation grown by attaching fresh-apex triangles to
/// random boundary edges.
inline SimplicialComplex random_polygon_triangulation(int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = 3;
    c.facets = {{0, 1, 2}};
    std::vector<std::array<int, 2>> boundary{{0, 1}, {1, 2}, {0, 2}};
    for (int step = 1; step < k; ++step) {
        const size_t pick = rng() % boundary.size();
        const auto [a, b] = boundary[pick];
        const int w = c.vertex_count++;
        c.facets.push_back({a, b, w});
        boundary.erase(boundary.begin() + static_cast<long>(pick));
        boundary.push_back({a, w});
        boundary.push_back({b, w});
    }
    return c;
}

}  // namespace corpus
