#pragma once

#include "vunfold/facet_path.hpp"

namespace vunfold {

/// One rigidly placed facet copy in its own vertical strip (d = 2) or
/// parallel slab (general d).  Coordinates are in layout space R^d, in the
/// facet's vertex order; entry and exit are complex vertex indices.
struct Placement {
    int facet = 0;
    int entry = 0;
    int exit = 0;
    double x_left = 0;
    double x_right = 0;
    std::vector<Point> coords;

    bool operator==(const Placement&) const = default;

    double width() const { return x_right - x_left; }
};

struct StripLayout {
    int dim = 0;
    double gap = 0;
    FacetPath path;
    std::vector<Placement> placements;

    bool operator==(const StripLayout&) const = default;
};

/// Source shape a placement is congruent to: the facet's own coordinates
/// when present, else a unit regular simplex (abstract complexes carry no
/// geometry of their own).
inline std::vector<Point> reference_shape(const SimplicialComplex& c, int f) {
    if (c.coords) return c.facet_points(f);
    // unit regular d-simplex, built incrementally: each new vertex sits
    // over the centroid of the previous ones at edge length 1
    const int d = c.dim;
    std::vector<Point> pts{Point(d, 0.0)};
    for (int k = 1; k <= d; ++k) {
        Point cen(d, 0.0);
        for (const Point& p : pts)
            for (int j = 0; j < d; ++j) cen[j] += p[j] / static_cast<double>(pts.size());
        double r2 = 0;
        for (int j = 0; j < d; ++j) r2 += (pts[0][j] - cen[j]) * (pts[0][j] - cen[j]);
        cen[k - 1] = std::sqrt(1.0 - r2);
        pts.push_back(std::move(cen));
    }
    return pts;
}

namespace detail {

inline Eigen::VectorXd strip_functional(const std::vector<Point>& simplex, int entry, int exit) {
    const int n = static_cast<int>(simplex.size());
    if (entry == exit || entry < 0 || exit < 0 || entry >= n || exit >= n)
        throw InvalidInputError("placement: entry and exit must be distinct simplex vertices");
    if (geom::simplex_degenerate(simplex))
        throw InvalidInputError("placement: degenerate simplex");
    const int m = static_cast<int>(simplex[0].size());
    Eigen::MatrixXd offs(n - 1, m);
    Eigen::VectorXd rhs(n - 1);
    int row = 0;
    for (int i = 0; i < n; ++i) {
        if (i == entry) continue;
        for (int j = 0; j < m; ++j) offs(row, j) = simplex[i][j] - simplex[entry][j];
        rhs(row) = (i == exit) ? 1.0 : 0.5;
        ++row;
    }
    return geom::min_norm_solve(offs, rhs);
}

}  // namespace detail

/// Unit vector along which the entry vertex is strictly minimal, the exit
/// strictly maximal, and every other vertex of the simplex sits exactly
/// midway: the linear part of the affine functional taking 0 at entry, 1 at
/// exit and 1/2 elsewhere.
inline Point placement_direction(const std::vector<Point>& simplex, int entry, int exit) {
    const Eigen::VectorXd w = detail::strip_functional(simplex, entry, exit).normalized();
    return Point(w.data(), w.data() + w.size());
}

/// Rigid copy of the simplex in R^d with the placement direction mapped to
/// +x and the entry vertex at the anchor.  In 2D the reflection is fixed by
/// putting the non-path vertex strictly above the entry's y; in higher
/// dimension the frame comes from Gram-Schmidt over the vertex offsets in
/// index order.
inline std::vector<Point> place_facet(const std::vector<Point>& simplex, int entry, int exit,
                                      const Point& anchor) {
    const int d = static_cast<int>(simplex.size()) - 1;
    const int m = static_cast<int>(simplex[0].size());
    if (static_cast<int>(anchor.size()) != d)
        throw InvalidInputError("place_facet: anchor must live in layout space R^d");

    const Eigen::VectorXd w = detail::strip_functional(simplex, entry, exit);
    Eigen::MatrixXd offs(m, d);
    int col = 0;
    for (int i = 0; i <= d; ++i) {
        if (i == entry) continue;
        for (int j = 0; j < m; ++j) offs(j, col) = simplex[i][j] - simplex[entry][j];
        ++col;
    }
    Eigen::MatrixXd frame = geom::orthonormal_frame(w, offs, d);
    if (frame.size() == 0) throw InvalidInputError("place_facet: degenerate simplex");

    auto placed_offset = [&](int i) {
        Eigen::VectorXd off(m);
        for (int j = 0; j < m; ++j) off(j) = simplex[i][j] - simplex[entry][j];
        return Eigen::VectorXd(frame.transpose() * off);
    };

    if (d == 2) {
        // reflection canonicalization: non-path vertex above the axis
        int third = -1;
        for (int i = 0; i <= d; ++i)
            if (i != entry && i != exit) third = i;
        double sign = placed_offset(third)(1);
        if (sign == 0.0) sign = placed_offset(exit)(1);
        if (sign < 0.0) frame.col(1) = -frame.col(1);
    }

    std::vector<Point> out(d + 1, Point(d, 0.0));
    for (int i = 0; i <= d; ++i) {
        const Eigen::VectorXd po = placed_offset(i);
        for (int j = 0; j < d; ++j) out[i][j] = anchor[j] + po(j);
    }
    out[entry] = anchor;  // exact
    return out;
}

/// Lays out every facet of the path in its own strip, sweeping left to
/// right; facet i is anchored at facet i-1's placed exit shifted by gap
/// along +x.  Cyclic paths are laid out open.
inline StripLayout layout(const SimplicialComplex& c, const FacetPath& p, double gap = 0.0) {
    if (gap < 0) throw InvalidInputError("layout: gap must be >= 0");
    {
        const ValidationReport rep = verify_path(c, p);
        if (!rep.ok())
            throw InvalidInputError("layout: invalid facet path: " + rep.violations.front().code);
    }
    StripLayout out;
    out.dim = c.dim;
    out.gap = gap;
    out.path = p;

    Point anchor(c.dim, 0.0);
    for (int i = 0; i < p.length(); ++i) {
        const int f = p.facets[i];
        const auto& fac = c.facets[f];
        const auto local = [&](int v) {
            const auto it = std::find(fac.begin(), fac.end(), v);
            return static_cast<int>(it - fac.begin());
        };
        const int entry_local = local(p.vertices[i]);
        const int exit_local = local(p.vertices[i + 1]);

        Placement pl;
        pl.facet = f;
        pl.entry = p.vertices[i];
        pl.exit = p.vertices[i + 1];
        pl.coords = place_facet(reference_shape(c, f), entry_local, exit_local, anchor);
        pl.x_left = anchor[0];
        pl.x_right = pl.coords[exit_local][0];
        anchor = pl.coords[exit_local];
        anchor[0] += gap;
        out.placements.push_back(std::move(pl));
    }
    return out;
}

/// Certifies a layout: disjoint consecutive strips separated by the gap,
/// entry/exit on the strip boundaries with everything else strictly inside,
/// congruence of each placed facet to its source shape within relative tol,
/// and shared-vertex coincidence when gap is zero.
inline ValidationReport verify_layout(const StripLayout& layout, const SimplicialComplex& c,
                                      double tol = 1e-9) {
    ValidationReport rep;
    if (layout.placements.size() != layout.path.facets.size()) {
        rep.add("placement-count", "placement list does not match path length");
        return rep;
    }

    auto close = [&](double a, double b) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); };

    for (size_t i = 0; i < layout.placements.size(); ++i) {
        const Placement& pl = layout.placements[i];
        const int f = pl.facet;
        if (f != layout.path.facets[i])
            rep.add("placement-order", "placement " + std::to_string(i) + " does not follow path",
                    {static_cast<int>(i), f});
        if (!(pl.x_right > pl.x_left))
            rep.add("strip-width", "strip of facet " + std::to_string(f) + " has no width", {f});
        if (i > 0) {
            const Placement& prev = layout.placements[i - 1];
            if (pl.x_left < prev.x_right)
                rep.add("strip-overlap",
                        "strip of facet " + std::to_string(f) + " overlaps its predecessor", {f});
            if (!close(pl.x_left - prev.x_right, layout.gap))
                rep.add("strip-gap", "strips of facets " + std::to_string(prev.facet) + " and " +
                                         std::to_string(f) + " are not separated by the gap",
                        {prev.facet, f});
            if (layout.gap == 0.0) {
                // consecutive facets share the placed point of the path vertex
                const auto& fac_prev = c.facets[prev.facet];
                const auto& fac_cur = c.facets[f];
                const int prev_slot = static_cast<int>(
                    std::find(fac_prev.begin(), fac_prev.end(), prev.exit) - fac_prev.begin());
                const int cur_slot = static_cast<int>(
                    std::find(fac_cur.begin(), fac_cur.end(), pl.entry) - fac_cur.begin());
                for (int j = 0; j < layout.dim; ++j)
                    if (!close(prev.coords[prev_slot][j], pl.coords[cur_slot][j])) {
                        rep.add("shared-vertex",
                                "consecutive placements do not share the path vertex point",
                                {prev.facet, f});
                        break;
                    }
            }
        }

        const auto& fac = c.facets[f];
        for (size_t slot = 0; slot < fac.size(); ++slot) {
            const double x = pl.coords[slot][0];
            if (fac[slot] == pl.entry) {
                if (!close(x, pl.x_left))
                    rep.add("entry-not-left", "entry vertex off the left strip boundary", {f});
            } else if (fac[slot] == pl.exit) {
                if (!close(x, pl.x_right))
                    rep.add("exit-not-right", "exit vertex off the right strip boundary", {f});
            } else if (!(pl.x_left < x && x < pl.x_right)) {
                rep.add("interior-not-strict",
                        "vertex " + std::to_string(fac[slot]) + " of facet " + std::to_string(f) +
                            " not strictly inside its strip",
                        {f, fac[slot]});
            }
        }

        // congruence against the source shape
        const std::vector<Point> src = reference_shape(c, f);
        for (size_t a = 0; a < src.size(); ++a)
            for (size_t b = a + 1; b < src.size(); ++b) {
                double ds = 0, dp = 0;
                for (size_t j = 0; j < src[a].size(); ++j)
                    ds += (src[a][j] - src[b][j]) * (src[a][j] - src[b][j]);
                for (int j = 0; j < layout.dim; ++j)
                    dp += (pl.coords[a][j] - pl.coords[b][j]) * (pl.coords[a][j] - pl.coords[b][j]);
                ds = std::sqrt(ds);
                dp = std::sqrt(dp);
                if (std::abs(dp - ds) > tol * ds)
                    rep.add("congruence",
                            "facet " + std::to_string(f) + " is not congruent to its source shape",
                            {f, static_cast<int>(a), static_cast<int>(b)});
            }
    }
    return rep;
}

}  // namespace vunfold
