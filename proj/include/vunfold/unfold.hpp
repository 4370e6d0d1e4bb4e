#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "vunfold/complex.hpp"

namespace vunfold {

/// Dual arcs selected as tree edges (the "kept" ridges); the complement of
/// the interior arc set is the cut set.
struct UnfoldTree {
    int root = 0;
    std::vector<int> arc_ids;  // ascending indices into DualGraph::arcs

    bool operator==(const UnfoldTree&) const = default;
};

/// Breadth-first spanning tree of the dual graph rooted at seed_facet.
inline UnfoldTree spanning_tree(const DualGraph& dual, int seed_facet) {
    if (seed_facet < 0 || seed_facet >= dual.node_count)
        throw InvalidInputError("spanning_tree: seed facet out of range");

    UnfoldTree t;
    t.root = seed_facet;
    std::vector<bool> seen(dual.node_count, false);
    seen[seed_facet] = true;
    std::deque<int> queue{seed_facet};
    int reached = 1;
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop_front();
        for (int arc : dual.adjacency[f]) {
            const int g = dual.other_end(arc, f);
            if (seen[g]) continue;
            seen[g] = true;
            t.arc_ids.push_back(arc);
            queue.push_back(g);
            ++reached;
        }
    }
    if (reached != dual.node_count)
        throw InvalidInputError("spanning_tree: dual graph is disconnected");
    std::sort(t.arc_ids.begin(), t.arc_ids.end());
    return t;
}

/// A complex whose dual graph is a tree, together with the folding map back
/// to the source complex: facet-wise bijective, vertex-wise surjective.
struct UnfoldedComplex {
    SimplicialComplex complex;
    std::vector<int> facet_map;   // unfolded facet -> source facet (identity)
    std::vector<int> vertex_map;  // unfolded vertex -> source vertex

    bool operator==(const UnfoldedComplex&) const = default;
};

/// Glue the facets of c together along the tree arcs only; vertices are
/// duplicated along every cut ridge.  The result's dual graph is exactly t.
inline UnfoldedComplex unfold(const SimplicialComplex& c, const DualGraph& dual,
                              const UnfoldTree& t) {
    const int d1 = c.dim + 1;
    const int nf = c.facet_count();
    if (static_cast<int>(t.arc_ids.size()) != nf - 1)
        throw InvalidInputError("unfold: tree does not span the dual graph");

    // one provisional vertex per facet corner, merged across tree arcs
    detail::UnionFind uf(nf * d1);
    auto slot_of = [&](int f, int v) {
        for (int i = 0; i < d1; ++i)
            if (c.facets[f][i] == v) return i;
        throw InternalError("unfold: ridge vertex missing from facet");
    };
    for (int arc : t.arc_ids) {
        const DualArc& a = dual.arcs[arc];
        for (int v : a.ridge) uf.unite(a.a * d1 + slot_of(a.a, v), a.b * d1 + slot_of(a.b, v));
    }

    // the first copy of each source vertex keeps its id, so an unfolding
    // with no cuts is the identity; duplicated copies get fresh ids
    UnfoldedComplex u;
    u.complex.dim = c.dim;
    u.facet_map.resize(nf);
    u.complex.facets.assign(nf, std::vector<int>(d1));
    u.vertex_map.resize(c.vertex_count);
    std::iota(u.vertex_map.begin(), u.vertex_map.end(), 0);
    std::vector<int> class_id(nf * d1, -1);
    std::vector<bool> source_claimed(c.vertex_count, false);
    for (int f = 0; f < nf; ++f) {
        u.facet_map[f] = f;
        for (int i = 0; i < d1; ++i) {
            const int rep = uf.find(f * d1 + i);
            if (class_id[rep] < 0) {
                const int v = c.facets[f][i];
                if (!source_claimed[v]) {
                    source_claimed[v] = true;
                    class_id[rep] = v;
                } else {
                    class_id[rep] = static_cast<int>(u.vertex_map.size());
                    u.vertex_map.push_back(v);
                }
            }
            u.complex.facets[f][i] = class_id[rep];
        }
    }
    u.complex.vertex_count = static_cast<int>(u.vertex_map.size());
    if (c.coords) {
        std::vector<Point> coords(u.complex.vertex_count);
        for (int v = 0; v < u.complex.vertex_count; ++v) coords[v] = (*c.coords)[u.vertex_map[v]];
        u.complex.coords = std::move(coords);
    }
    if (c.labels) {
        std::vector<std::string> labels(u.complex.vertex_count);
        for (int v = 0; v < u.complex.vertex_count; ++v) labels[v] = (*c.labels)[u.vertex_map[v]];
        u.complex.labels = std::move(labels);
    }

    // the gluing must reproduce exactly the tree, no more, no less
    const DualGraph check = build_dual(u.complex);
    if (static_cast<int>(check.arcs.size()) != nf - 1)
        throw InternalError("unfold: result dual is not the spanning tree");
    std::set<std::pair<int, int>> want;
    for (int arc : t.arc_ids) want.emplace(dual.arcs[arc].a, dual.arcs[arc].b);
    for (const DualArc& a : check.arcs)
        if (!want.count({a.a, a.b}))
            throw InternalError("unfold: unexpected ridge gluing in unfolded complex");
    return u;
}

inline UnfoldedComplex unfold(const SimplicialComplex& c, const UnfoldTree& t) {
    return unfold(c, build_dual(c), t);
}

/// Proper black/white 2-coloring of a tree-dual complex in which every
/// white facet has exactly three neighbors.
struct Checkering {
    std::vector<bool> white;  // per facet

    bool operator==(const Checkering&) const = default;
};

/// The proper 2-coloring of the dual tree is unique up to a color swap;
/// returns whichever orientation has a qualifying white class (every white
/// facet of dual-degree exactly 3; an empty white class qualifies
/// vacuously), or nullopt when neither does.
inline std::optional<Checkering> checkering_of(const UnfoldedComplex& u) {
    if (u.complex.dim != 2) throw InvalidInputError("checkering_of requires dim == 2");
    const DualGraph dual = build_dual(u.complex);
    const int nf = dual.node_count;
    if (static_cast<int>(dual.arcs.size()) != nf - 1)
        throw InvalidInputError("checkering_of: dual graph is not a tree");

    // 2-color by BFS parity from facet 0
    std::vector<int> parity(nf, -1);
    parity[0] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop_front();
        for (int arc : dual.adjacency[f]) {
            const int g = dual.other_end(arc, f);
            if (parity[g] >= 0) continue;
            parity[g] = 1 - parity[f];
            queue.push_back(g);
        }
    }

    for (int white_parity : {1, 0}) {  // facet 0 black first
        bool ok = true;
        for (int f = 0; f < nf && ok; ++f)
            if (parity[f] == white_parity && dual.adjacency[f].size() != 3) ok = false;
        if (ok) {
            Checkering ck;
            ck.white.resize(nf);
            for (int f = 0; f < nf; ++f) ck.white[f] = (parity[f] == white_parity);
            return ck;
        }
    }
    return std::nullopt;
}

/// Outcome of the search for a spanning tree with non-checkered unfolding.
struct NoncheckeredSearch {
    enum Kind {
        Found,             // tree's unfolding is non-checkered
        NotCheckered,      // input tree already qualified; returned unchanged
        CheckeredPolygon,  // dual is a tree: the complex itself is a checkered
                           // polygon triangulation, only a facet path exists
    };
    Kind kind = Found;
    UnfoldTree tree;

    bool operator==(const NoncheckeredSearch&) const = default;
};

/// Single-swap search over spanning trees: add one non-tree arc, remove one
/// tree arc from the created cycle, in index order, until the unfolding is
/// non-checkered.
inline NoncheckeredSearch find_noncheckered_tree(const SimplicialComplex& c, const UnfoldTree& t0) {
    if (c.dim != 2) throw InvalidInputError("find_noncheckered_tree requires dim == 2");
    const DualGraph dual = build_dual(c);
    if (!is_simplicial(dual))
        throw InvalidInputError("find_noncheckered_tree requires a simple dual graph");

    if (!checkering_of(unfold(c, dual, t0))) return {NoncheckeredSearch::NotCheckered, t0};
    if (static_cast<int>(dual.arcs.size()) == dual.node_count - 1)
        return {NoncheckeredSearch::CheckeredPolygon, t0};

    // tree adjacency for path lookups
    std::vector<std::vector<int>> tree_adj(dual.node_count);
    std::set<int> in_tree(t0.arc_ids.begin(), t0.arc_ids.end());
    for (int arc : t0.arc_ids) {
        tree_adj[dual.arcs[arc].a].push_back(arc);
        tree_adj[dual.arcs[arc].b].push_back(arc);
    }
    // arcs on the tree path between two facets
    auto tree_path = [&](int from, int to) {
        std::vector<int> parent_arc(dual.node_count, -1);
        std::vector<int> parent(dual.node_count, -1);
        std::deque<int> queue{from};
        parent[from] = from;
        while (!queue.empty()) {
            const int f = queue.front();
            queue.pop_front();
            if (f == to) break;
            for (int arc : tree_adj[f]) {
                const int g = dual.other_end(arc, f);
                if (parent[g] >= 0) continue;
                parent[g] = f;
                parent_arc[g] = arc;
                queue.push_back(g);
            }
        }
        std::vector<int> path;
        for (int f = to; f != from; f = parent[f]) path.push_back(parent_arc[f]);
        std::sort(path.begin(), path.end());
        return path;
    };

    for (int add = 0; add < static_cast<int>(dual.arcs.size()); ++add) {
        if (in_tree.count(add)) continue;
        for (int drop : tree_path(dual.arcs[add].a, dual.arcs[add].b)) {
            UnfoldTree cand;
            cand.root = t0.root;
            for (int arc : t0.arc_ids)
                if (arc != drop) cand.arc_ids.push_back(arc);
            cand.arc_ids.push_back(add);
            std::sort(cand.arc_ids.begin(), cand.arc_ids.end());
            if (!checkering_of(unfold(c, dual, cand))) return {NoncheckeredSearch::Found, cand};
        }
    }
    throw InternalError(
        "find_noncheckered_tree: swap search exhausted without a non-checkered unfolding "
        "(facets=" +
        std::to_string(c.facet_count()) + ", arcs=" + std::to_string(dual.arcs.size()) + ")");
}

}  // namespace vunfold
