#pragma once

#include <array>
#include <cmath>
#include <random>

#include "vunfold/complex.hpp"

namespace vunfold {
namespace detail {

inline double orient3d(const Point& a, const Point& b, const Point& c, const Point& p) {
    const double ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
    const double vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
    const double wx = p[0] - a[0], wy = p[1] - a[1], wz = p[2] - a[2];
    return ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
}

}  // namespace detail

/// Facets of the 3D convex hull by incremental insertion, outward oriented,
/// canonicalized (lowest vertex first per facet, facet list sorted).
/// Quadratic time, intended for desk-scale inputs.  Throws on point sets
/// without four affinely independent points.
inline std::vector<std::array<int, 3>> convex_hull_facets(const std::vector<Point>& pts,
                                                          double eps = 1e-12) {
    const int n = static_cast<int>(pts.size());
    if (n < 4) throw InvalidInputError("convex hull needs at least 4 points");

    // initial non-degenerate simplex, scanning in index order
    const int i0 = 0;
    int i1 = -1, i2 = -1, i3 = -1;
    for (int i = 1; i < n && i1 < 0; ++i) {
        double d2 = 0;
        for (int j = 0; j < 3; ++j) d2 += (pts[i][j] - pts[i0][j]) * (pts[i][j] - pts[i0][j]);
        if (d2 > eps) i1 = i;
    }
    for (int i = 1; i < n && i1 >= 0 && i2 < 0; ++i) {
        if (i == i1) continue;
        const double ux = pts[i1][0] - pts[i0][0], uy = pts[i1][1] - pts[i0][1],
                     uz = pts[i1][2] - pts[i0][2];
        const double vx = pts[i][0] - pts[i0][0], vy = pts[i][1] - pts[i0][1],
                     vz = pts[i][2] - pts[i0][2];
        const double cx = uy * vz - uz * vy, cy = uz * vx - ux * vz, cz = ux * vy - uy * vx;
        if (cx * cx + cy * cy + cz * cz > eps * eps) i2 = i;
    }
    for (int i = 1; i < n && i2 >= 0 && i3 < 0; ++i) {
        if (i == i1 || i == i2) continue;
        if (std::abs(detail::orient3d(pts[i0], pts[i1], pts[i2], pts[i])) > eps) i3 = i;
    }
    if (i3 < 0) throw InvalidInputError("convex hull: degenerate point set");

    Point centroid(3, 0.0);
    for (int i : {i0, i1, i2, i3})
        for (int j = 0; j < 3; ++j) centroid[j] += pts[i][j] / 4.0;

    auto outward = [&](std::array<int, 3> f) {
        if (detail::orient3d(pts[f[0]], pts[f[1]], pts[f[2]], centroid) > 0)
            std::swap(f[1], f[2]);
        return f;
    };
    std::vector<std::array<int, 3>> faces{
        outward({i0, i1, i2}), outward({i0, i1, i3}), outward({i0, i2, i3}), outward({i1, i2, i3})};

    for (int p = 1; p < n; ++p) {
        if (p == i1 || p == i2 || p == i3) continue;
        std::vector<char> visible(faces.size(), 0);
        bool any = false;
        for (size_t f = 0; f < faces.size(); ++f) {
            if (detail::orient3d(pts[faces[f][0]], pts[faces[f][1]], pts[faces[f][2]], pts[p]) >
                eps) {
                visible[f] = 1;
                any = true;
            }
        }
        if (!any) continue;  // interior or on the surface

        // horizon: directed edges of visible faces whose twin is invisible
        std::map<std::pair<int, int>, int> edge_use;  // directed edge -> visible count
        for (size_t f = 0; f < faces.size(); ++f) {
            if (!visible[f]) continue;
            for (int e = 0; e < 3; ++e) {
                const int a = faces[f][e], b = faces[f][(e + 1) % 3];
                ++edge_use[{a, b}];
            }
        }
        std::vector<std::pair<int, int>> horizon;
        for (const auto& [edge, cnt] : edge_use)
            if (!edge_use.count({edge.second, edge.first})) horizon.push_back(edge);
        std::sort(horizon.begin(), horizon.end());

        std::vector<std::array<int, 3>> next;
        for (size_t f = 0; f < faces.size(); ++f)
            if (!visible[f]) next.push_back(faces[f]);
        for (const auto& [a, b] : horizon) next.push_back(outward({a, b, p}));
        faces = std::move(next);
    }

    // canonical form: rotate lowest vertex first (orientation preserved), sort
    for (auto& f : faces) {
        while (!(f[0] < f[1] && f[0] < f[2])) {
            const int t = f[0];
            f[0] = f[1];
            f[1] = f[2];
            f[2] = t;
        }
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

/// Convex hull of n deterministic pseudo-random points on the unit sphere:
/// a simplicial closed 2-manifold.  Degenerate point sets are deterministically
/// perturbed and retried; `perturbations`, when given, reports how often.
inline SimplicialComplex gen_hull(int n, std::uint64_t seed, int* perturbations = nullptr) {
    if (n < 4) throw InvalidInputError("gen_hull: need at least 4 points");
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);  // [0, 1)
    };
    std::vector<Point> pts(n, Point(3, 0.0));
    for (auto& p : pts) {
        const double z = 2.0 * uniform() - 1.0;
        const double phi = 2.0 * 3.14159265358979323846 * uniform();
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        p = {rho * std::cos(phi), rho * std::sin(phi), z};
    }

    int tries = 0;
    std::vector<std::array<int, 3>> faces;
    while (true) {
        try {
            faces = convex_hull_facets(pts);
            break;
        } catch (const InvalidInputError&) {
            if (++tries > 8) throw;
            for (auto& p : pts) {
                double norm = 0;
                for (double& x : p) {
                    x += (uniform() - 0.5) * 1e-9;
                    norm += x * x;
                }
                norm = std::sqrt(norm);
                for (double& x : p) x /= norm;
            }
        }
    }
    if (perturbations) *perturbations = tries;

    // keep only hull vertices, reindexed in ascending original order
    std::vector<int> remap(n, -1);
    int next_id = 0;
    for (int v = 0; v < n; ++v) {
        bool on_hull = false;
        for (const auto& f : faces)
            if (f[0] == v || f[1] == v || f[2] == v) on_hull = true;
        if (on_hull) remap[v] = next_id++;
    }

    SimplicialComplex c;
    c.dim = 2;
    c.vertex_count = next_id;
    c.coords.emplace(next_id);
    for (int v = 0; v < n; ++v)
        if (remap[v] >= 0) (*c.coords)[remap[v]] = pts[v];
    for (const auto& f : faces) c.facets.push_back({remap[f[0]], remap[f[1]], remap[f[2]]});
    return c;
}

}  // namespace vunfold
