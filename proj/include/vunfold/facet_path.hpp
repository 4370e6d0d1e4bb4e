#pragma once

#include <map>
#include <optional>
#include <set>

#include "vunfold/scaffold.hpp"

namespace vunfold {

/// Alternating trail v0, f1, v1, ..., fk, vk in the incidence graph that
/// includes each facet exactly once but may repeat vertex nodes.  Cyclic
/// when v0 == vk.
struct FacetPath {
    std::vector<int> vertices;  // k+1 entries
    std::vector<int> facets;    // k entries
    bool cyclic = false;

    bool operator==(const FacetPath&) const = default;

    int length() const { return static_cast<int>(facets.size()); }
};

/// Euler trail of a connected scaffold (Hierholzer).  Each facet has degree
/// two, so the scaffold is a multigraph on vertex nodes with one edge per
/// facet and any Euler trail alternates vertex, facet, vertex, ...
///
/// Starts at the lowest-index odd vertex if any, else at the lowest-index
/// vertex of the lowest-index facet; output is cyclic iff the scaffold is
/// even.
inline FacetPath euler_trail(const Scaffold& s, int vertex_count) {
    const int nf = s.facet_count();
    if (nf == 0) throw InvalidInputError("euler_trail: empty scaffold");

    std::vector<std::vector<int>> adj(vertex_count);  // facet ids, ascending
    for (int f = 0; f < nf; ++f) {
        adj[s.attachments[f][0]].push_back(f);
        adj[s.attachments[f][1]].push_back(f);
    }
    int start = -1;
    for (int v = 0; v < vertex_count && start < 0; ++v)
        if (adj[v].size() % 2 == 1) start = v;
    const bool cyclic = (start < 0);
    if (cyclic) start = s.attachments[0][0];

    std::vector<size_t> next(vertex_count, 0);
    std::vector<bool> used(nf, false);
    std::vector<std::pair<int, int>> stack{{start, -1}};  // (vertex, incoming facet)
    std::vector<std::pair<int, int>> trail;
    while (!stack.empty()) {
        auto [v, in] = stack.back();
        while (next[v] < adj[v].size() && used[adj[v][next[v]]]) ++next[v];
        if (next[v] == adj[v].size()) {
            trail.push_back(stack.back());
            stack.pop_back();
        } else {
            const int f = adj[v][next[v]];
            used[f] = true;
            const auto& at = s.attachments[f];
            stack.emplace_back(at[0] == v ? at[1] : at[0], f);
        }
    }
    if (static_cast<int>(trail.size()) != nf + 1)
        throw InvalidInputError("euler_trail: scaffold is disconnected");

    // popped entries are the trail reversed; the incoming facet sits with
    // the vertex it leads to
    FacetPath p;
    p.cyclic = cyclic;
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        p.vertices.push_back(it->first);
        if (it->second >= 0) p.facets.push_back(it->second);
    }
    return p;
}

/// Checks all FacetPath invariants against a complex: every facet appears
/// exactly once, transitions are non-degenerate and incident, no repeated
/// arcs, cyclic flag consistent.
inline ValidationReport verify_path(const SimplicialComplex& c, const FacetPath& p) {
    ValidationReport rep;
    if (p.facets.empty()) {
        rep.add("path-empty", "facet path has no facets");
        return rep;
    }
    if (p.vertices.size() != p.facets.size() + 1) {
        rep.add("length-mismatch", "vertex sequence must be one longer than facet sequence");
        return rep;
    }
    for (int v : p.vertices)
        if (v < 0 || v >= c.vertex_count) {
            rep.add("vertex-range", "path vertex " + std::to_string(v) + " out of range", {v});
            return rep;
        }
    std::vector<int> seen(c.facet_count(), 0);
    for (int f : p.facets) {
        if (f < 0 || f >= c.facet_count()) {
            rep.add("facet-range", "path facet " + std::to_string(f) + " out of range", {f});
            return rep;
        }
        if (++seen[f] == 2) rep.add("facet-repeated", "facet " + std::to_string(f) + " repeated", {f});
    }
    for (int f = 0; f < c.facet_count(); ++f)
        if (!seen[f]) rep.add("facet-missing", "facet " + std::to_string(f) + " not in path", {f});

    std::set<std::pair<int, int>> arcs;
    for (size_t i = 0; i < p.facets.size(); ++i) {
        const int f = p.facets[i];
        const int a = p.vertices[i], b = p.vertices[i + 1];
        if (a == b)
            rep.add("degenerate-transition",
                    "facet " + std::to_string(f) + " entered and left at vertex " + std::to_string(a),
                    {static_cast<int>(i), a});
        for (int v : {a, b}) {
            if (std::find(c.facets[f].begin(), c.facets[f].end(), v) == c.facets[f].end())
                rep.add("not-incident",
                        "vertex " + std::to_string(v) + " is not a vertex of facet " + std::to_string(f),
                        {v, f});
            if (!arcs.emplace(v, f).second)
                rep.add("arc-repeated", "arc (" + std::to_string(v) + ", " + std::to_string(f) +
                                            ") repeated",
                        {v, f});
        }
    }
    const bool closed = p.vertices.front() == p.vertices.back();
    if (p.cyclic != closed)
        rep.add("cyclic-flag", p.cyclic ? "flagged cyclic but endpoints differ"
                                        : "endpoints coincide but not flagged cyclic");
    return rep;
}

namespace detail {

inline FacetPath map_back(const UnfoldedComplex& u, FacetPath p) {
    for (int& v : p.vertices) v = u.vertex_map[v];
    for (int& f : p.facets) f = u.facet_map[f];
    return p;
}

inline Scaffold forced_scaffold(const SimplicialComplex& c) {
    // d = 1 facets are edges: both endpoints attached.  Also the trivial
    // 2-arc path for a lone facet of any dimension.
    Scaffold s;
    s.attachments.reserve(c.facet_count());
    for (const auto& fac : c.facets) {
        std::vector<int> vs = fac;
        std::sort(vs.begin(), vs.end());
        s.attachments.push_back({vs[0], vs[1]});
    }
    return s;
}

}  // namespace detail

/// Facet path of any connected pseudo-manifold: spanning tree, unfold,
/// scaffold, connect, Euler trail, map back through the folding map.
inline FacetPath facet_path(const SimplicialComplex& c, int seed_facet = 0) {
    const DualGraph dual = build_dual(c);
    const UnfoldTree t = spanning_tree(dual, seed_facet);
    const UnfoldedComplex u = unfold(c, dual, t);

    Scaffold s;
    if (c.dim == 1 || u.complex.facet_count() == 1)
        s = detail::forced_scaffold(u.complex);
    else if (c.dim == 2)
        s = build_scaffold_2d(u);
    else
        s = build_even_scaffold_d(u);
    s = connect(u.complex, s);
    return detail::map_back(u, euler_trail(s, u.complex.vertex_count));
}

/// Facet cycle (Theorems on cycles): for d = 2 requires a simplicial
/// complex and falls back to tree swaps when the first unfolding is
/// checkered; for d >= 3 any connected manifold except a single simplex.
/// The optional start facet rotates the cycle so that facet comes first.
inline FacetPath facet_cycle(const SimplicialComplex& c, std::optional<int> start_facet = {},
                             int seed_facet = 0) {
    if (c.dim < 2) throw InvalidInputError("facet_cycle requires dim >= 2");
    const DualGraph dual = build_dual(c);

    UnfoldedComplex u;
    Scaffold s;
    if (c.dim == 2) {
        if (!is_simplicial(dual))
            throw NonSimplicial2ManifoldError(
                "facet cycle not guaranteed: dual graph has multi-edges or loops "
                "(a facet path still exists)");
        UnfoldTree t = spanning_tree(dual, seed_facet);
        const NoncheckeredSearch search = find_noncheckered_tree(c, t);
        if (search.kind == NoncheckeredSearch::CheckeredPolygon)
            throw CheckeredPolygonError(
                "checkered polygon triangulation has no facet cycle (a facet path exists)");
        u = unfold(c, dual, search.tree);
        s = build_even_scaffold_2d(u);
    } else {
        if (c.facet_count() == 1)
            throw SingleSimplexError("a single simplex has no facet cycle (a facet path exists)");
        const UnfoldTree t = spanning_tree(dual, seed_facet);
        u = unfold(c, dual, t);
        s = build_even_scaffold_d(u);
    }
    s = connect(u.complex, s);
    FacetPath p = detail::map_back(u, euler_trail(s, u.complex.vertex_count));
    if (!p.cyclic) throw InternalError("facet_cycle: pipeline produced an open trail");

    if (start_facet) {
        const int k = p.length();
        if (*start_facet < 0 || *start_facet >= c.facet_count())
            throw InvalidInputError("facet_cycle: start facet out of range");
        int at = -1;
        for (int i = 0; i < k; ++i)
            if (p.facets[i] == *start_facet) at = i;
        if (at < 0) throw InternalError("facet_cycle: start facet missing from cycle");
        FacetPath q;
        q.cyclic = true;
        for (int i = 0; i < k; ++i) q.facets.push_back(p.facets[(at + i) % k]);
        for (int i = 0; i <= k; ++i) q.vertices.push_back(p.vertices[(at + i) % k]);
        q.vertices.back() = q.vertices.front();
        p = std::move(q);
    }
    return p;
}

namespace detail {

// Transition system of a facet path: per vertex, a partial pairing of the
// incident path facets.  Re-pairings at one vertex do not affect any other
// vertex, and the underlying scaffold (facet endpoints) never changes.
struct TransitionSystem {
    int k = 0;
    bool cyclic = false;
    std::vector<std::array<int, 2>> ends;        // per facet: its two path vertices
    std::map<int, std::map<int, int>> pairing;   // vertex -> facet -> partner facet (-1 open end)
    int start_vertex = 0, start_facet = 0;

    static TransitionSystem from_path(const FacetPath& p) {
        TransitionSystem ts;
        ts.k = p.length();
        ts.cyclic = p.cyclic;
        ts.start_vertex = p.vertices.front();
        ts.start_facet = p.facets.front();
        ts.ends.resize(ts.k == 0 ? 0 : 1 + *std::max_element(p.facets.begin(), p.facets.end()),
                       {-1, -1});
        for (int i = 0; i < ts.k; ++i)
            ts.ends[p.facets[i]] = {p.vertices[i], p.vertices[i + 1]};
        for (int i = 1; i < ts.k; ++i) {
            ts.pairing[p.vertices[i]][p.facets[i - 1]] = p.facets[i];
            ts.pairing[p.vertices[i]][p.facets[i]] = p.facets[i - 1];
        }
        if (ts.cyclic) {
            ts.pairing[p.vertices[0]][p.facets[ts.k - 1]] = p.facets[0];
            ts.pairing[p.vertices[0]][p.facets[0]] = p.facets[ts.k - 1];
        } else {
            ts.pairing[p.vertices[0]][p.facets[0]] = -1;
            ts.pairing[p.vertices[ts.k]][p.facets[ts.k - 1]] = -1;
        }
        return ts;
    }

    int other_end(int facet, int v) const { return ends[facet][0] == v ? ends[facet][1] : ends[facet][0]; }

    // Walks from the start arc; returns the trail if it covers all k facets.
    std::optional<FacetPath> extract() const {
        FacetPath p;
        p.cyclic = cyclic;
        int v = start_vertex, f = start_facet;
        p.vertices.push_back(v);
        for (int steps = 0; steps <= k; ++steps) {
            p.facets.push_back(f);
            const int w = other_end(f, v);
            p.vertices.push_back(w);
            const int partner = pairing.at(w).at(f);
            if (partner < 0) break;                          // open end
            if (w == start_vertex && partner == start_facet) break;  // closed loop
            v = w;
            f = partner;
        }
        if (p.length() != k) return std::nullopt;
        return p;
    }
};

// Chord-crossing test in a cyclic order of m positions: chords (a,b), (c,d)
// cross iff exactly one of c, d lies in the open interval (a, b).
inline bool chords_cross(int a, int b, int c, int d) {
    auto between = [&](int x) { return a < b ? (a < x && x < b) : (x > a || x < b); };
    return between(c) != between(d);
}

}  // namespace detail

/// Number of interleaved transition pairs of p, summed over all repeated
/// vertices, with respect to the vertex rotation orders of c.  Boundary
/// (linear) rotations are closed with a virtual sentinel position, which no
/// path facet occupies.
inline int interleaving_count(const SimplicialComplex& c, const FacetPath& p) {
    const auto ts = detail::TransitionSystem::from_path(p);
    int crossings = 0;
    for (const auto& [v, pmap] : ts.pairing) {
        // transitions at v as unordered facet pairs
        std::vector<std::pair<int, int>> trans;
        for (const auto& [f, g] : pmap)
            if (g >= 0 && f < g) trans.emplace_back(f, g);
        if (trans.size() < 2) continue;
        const VertexRotation rot = vertex_rotation(c, v);
        std::map<int, int> pos;
        for (int i = 0; i < static_cast<int>(rot.facets.size()); ++i) pos[rot.facets[i]] = i;
        for (size_t i = 0; i < trans.size(); ++i)
            for (size_t j = i + 1; j < trans.size(); ++j)
                if (detail::chords_cross(pos.at(trans[i].first), pos.at(trans[i].second),
                                         pos.at(trans[j].first), pos.at(trans[j].second)))
                    ++crossings;
    }
    return crossings;
}

/// Converts a facet path into a noncrossing one: while some vertex has an
/// interleaved pair of transitions, re-pair it the alternate way that keeps
/// the trail a single connected walk.  Each accepted swap strictly reduces
/// the interleaving count, so the loop terminates.
inline FacetPath make_noncrossing(const SimplicialComplex& c, const FacetPath& p) {
    if (c.dim != 2) throw InvalidInputError("make_noncrossing requires dim == 2");
    {
        const ValidationReport rep = verify_path(c, p);
        if (!rep.ok())
            throw InvalidInputError("make_noncrossing: invalid facet path: " +
                                    rep.violations.front().code);
    }
    if (p.length() < 2) return p;

    auto ts = detail::TransitionSystem::from_path(p);
    std::map<int, std::map<int, int>> positions;  // vertex -> facet -> rotation index
    for (const auto& [v, pmap] : ts.pairing) {
        int paired = 0;
        for (const auto& [f, g] : pmap) paired += (g >= 0);
        if (paired < 4) continue;  // fewer than two transitions cannot cross
        const VertexRotation rot = vertex_rotation(c, v);
        auto& pos = positions[v];
        for (int i = 0; i < static_cast<int>(rot.facets.size()); ++i) pos[rot.facets[i]] = i;
    }

    int guard = 2 * ts.k * ts.k + 16;
    for (auto& [v, pmap] : ts.pairing) {
        if (!positions.count(v)) continue;
        const auto& pos = positions.at(v);
        while (true) {
            if (--guard < 0) throw InternalError("make_noncrossing: uncrossing did not terminate");
            std::vector<std::pair<int, int>> trans;
            for (const auto& [f, g] : pmap)
                if (g >= 0 && f < g) trans.emplace_back(f, g);
            int t1 = -1, t2 = -1;
            for (size_t i = 0; i < trans.size() && t1 < 0; ++i)
                for (size_t j = i + 1; j < trans.size() && t1 < 0; ++j)
                    if (detail::chords_cross(pos.at(trans[i].first), pos.at(trans[i].second),
                                             pos.at(trans[j].first), pos.at(trans[j].second))) {
                        t1 = static_cast<int>(i);
                        t2 = static_cast<int>(j);
                    }
            if (t1 < 0) break;

            const auto [fa, fb] = trans[t1];
            const auto [fc, fd] = trans[t2];
            bool fixed = false;
            for (const auto& [x1, y1, x2, y2] :
                 {std::array<int, 4>{fa, fc, fb, fd}, std::array<int, 4>{fa, fd, fb, fc}}) {
                pmap[x1] = y1;
                pmap[y1] = x1;
                pmap[x2] = y2;
                pmap[y2] = x2;
                if (ts.extract()) {
                    fixed = true;
                    break;
                }
            }
            if (!fixed) {
                // restore and fail loudly; one alternate must reconnect
                pmap[fa] = fb;
                pmap[fb] = fa;
                pmap[fc] = fd;
                pmap[fd] = fc;
                throw InternalError("make_noncrossing: neither re-pairing kept the trail connected");
            }
        }
    }

    const std::optional<FacetPath> out = ts.extract();
    if (!out) throw InternalError("make_noncrossing: final trail extraction failed");
    return *out;
}

/// Exhaustive backtracking oracle over the incidence graph: all facet paths
/// from every start vertex, or all facet cycles deduplicated up to rotation
/// and reflection.  Only for small complexes (facet count <= cap).
inline std::vector<FacetPath> brute_force(const SimplicialComplex& c, bool want_cycle,
                                          int cap = 9) {
    if (c.facet_count() > cap)
        throw InvalidInputError("brute_force: facet count " + std::to_string(c.facet_count()) +
                                " exceeds cap " + std::to_string(cap));
    const IncidenceGraph inc = incidence_graph(c);
    const int nf = c.facet_count();

    std::vector<FacetPath> found;
    std::vector<int> vseq, fseq;
    std::vector<bool> used(nf, false);

    std::function<void(int, int)> go = [&](int v, int used_count) {
        if (used_count == nf) {
            if (want_cycle && v != vseq.front()) return;
            FacetPath p;
            p.vertices = vseq;
            p.facets = fseq;
            p.cyclic = (vseq.front() == vseq.back());
            found.push_back(std::move(p));
            return;
        }
        for (int f : inc.vertex_facets[v]) {
            if (used[f]) continue;
            used[f] = true;
            fseq.push_back(f);
            for (int w : c.facets[f]) {
                if (w == v) continue;
                vseq.push_back(w);
                go(w, used_count + 1);
                vseq.pop_back();
            }
            fseq.pop_back();
            used[f] = false;
        }
    };
    for (int v0 = 0; v0 < c.vertex_count; ++v0) {
        vseq.assign(1, v0);
        go(v0, 0);
    }

    if (!want_cycle) return found;

    // canonicalize cycles up to rotation and reflection
    auto flat = [](const std::vector<int>& fs, const std::vector<int>& vs) {
        // (facet, exit vertex) pairs around the cycle
        const int k = static_cast<int>(fs.size());
        std::vector<int> best;
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<int> F = fs, X(k);
            if (dir == 0)
                for (int i = 0; i < k; ++i) X[i] = vs[i + 1];
            else {
                std::reverse(F.begin(), F.end());
                for (int i = 0; i < k; ++i) X[i] = vs[k - 1 - i];
            }
            for (int rot = 0; rot < k; ++rot) {
                std::vector<int> cand;
                cand.reserve(2 * k);
                for (int i = 0; i < k; ++i) {
                    cand.push_back(F[(rot + i) % k]);
                    cand.push_back(X[(rot + i) % k]);
                }
                if (best.empty() || cand < best) best = std::move(cand);
            }
        }
        return best;
    };
    std::map<std::vector<int>, FacetPath> canon;
    for (FacetPath& p : found) {
        std::vector<int> key = flat(p.facets, p.vertices);
        p.cyclic = true;
        canon.emplace(std::move(key), std::move(p));
    }
    std::vector<FacetPath> out;
    out.reserve(canon.size());
    for (auto& [key, p] : canon) out.push_back(std::move(p));
    return out;
}

}  // namespace vunfold
