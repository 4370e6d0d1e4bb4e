#pragma once

#include <array>
#include <functional>
#include <set>

#include "vunfold/unfold.hpp"

namespace vunfold {

/// Subgraph of the incidence graph in which every facet has degree exactly
/// two.  At most two vertex nodes may have odd degree; an even scaffold has
/// none.  Attachments are stored sorted per facet.
struct Scaffold {
    std::vector<std::array<int, 2>> attachments;  // per facet, ascending pair

    bool operator==(const Scaffold&) const = default;

    int facet_count() const { return static_cast<int>(attachments.size()); }
};

inline std::vector<int> vertex_degrees(const Scaffold& s, int vertex_count) {
    std::vector<int> deg(vertex_count, 0);
    for (const auto& at : s.attachments) {
        ++deg[at[0]];
        ++deg[at[1]];
    }
    return deg;
}

inline int odd_vertex_count(const Scaffold& s, int vertex_count) {
    int odd = 0;
    for (int d : vertex_degrees(s, vertex_count)) odd += d % 2;
    return odd;
}

inline bool is_even(const Scaffold& s, int vertex_count) {
    return odd_vertex_count(s, vertex_count) == 0;
}

/// Disjoint-set partition of the scaffold's incident nodes (vertex nodes
/// and facet nodes) into connected components.
struct ComponentStructure {
    int count = 0;
    std::vector<int> facet_component;   // per facet: component id
    std::vector<int> vertex_component;  // per vertex: component id, -1 if unattached

    bool operator==(const ComponentStructure&) const = default;
};

inline ComponentStructure scaffold_components(const Scaffold& s, int vertex_count) {
    const int nf = s.facet_count();
    detail::UnionFind uf(vertex_count + nf);
    for (int f = 0; f < nf; ++f) {
        uf.unite(s.attachments[f][0], vertex_count + f);
        uf.unite(s.attachments[f][1], vertex_count + f);
    }
    ComponentStructure cs;
    cs.facet_component.assign(nf, -1);
    cs.vertex_component.assign(vertex_count, -1);
    std::map<int, int> ids;
    std::vector<bool> attached(vertex_count, false);
    for (const auto& at : s.attachments) attached[at[0]] = attached[at[1]] = true;
    auto id_of = [&](int rep) {
        auto [it, fresh] = ids.emplace(rep, cs.count);
        if (fresh) ++cs.count;
        return it->second;
    };
    for (int f = 0; f < nf; ++f) cs.facet_component[f] = id_of(uf.find(vertex_count + f));
    for (int v = 0; v < vertex_count; ++v)
        if (attached[v]) cs.vertex_component[v] = id_of(uf.find(v));
    return cs;
}

/// Checks the Scaffold type invariants against a complex.
inline ValidationReport scaffold_report(const SimplicialComplex& c, const Scaffold& s,
                                        bool require_even = false) {
    ValidationReport rep;
    if (s.facet_count() != c.facet_count())
        rep.add("scaffold-size", "scaffold does not cover every facet");
    for (int f = 0; f < std::min(s.facet_count(), c.facet_count()); ++f) {
        const auto& at = s.attachments[f];
        if (at[0] == at[1])
            rep.add("attachments-equal", "facet " + std::to_string(f) + " attached twice to vertex " +
                                             std::to_string(at[0]),
                    {f, at[0]});
        for (int v : at)
            if (std::find(c.facets[f].begin(), c.facets[f].end(), v) == c.facets[f].end())
                rep.add("attachment-not-incident",
                        "facet " + std::to_string(f) + " attached to non-incident vertex " +
                            std::to_string(v),
                        {f, v});
    }
    if (rep.ok()) {
        const int odd = odd_vertex_count(s, c.vertex_count);
        if (odd > (require_even ? 0 : 2))
            rep.add("odd-vertices", std::to_string(odd) + " vertex nodes have odd degree");
    }
    return rep;
}

namespace detail {

// Incremental ear/hat bookkeeping over the alive sub-forest of a dual tree.
// Degrees only decrease, so a facet turns into an ear at most once.
class EarHatTracker {
public:
    EarHatTracker(const DualGraph& dual) : dual_(&dual) {
        const int nf = dual.node_count;
        alive_.assign(nf, true);
        deg_.assign(nf, 0);
        ear_nbrs_.assign(nf, 0);
        alive_count_ = nf;
        for (int f = 0; f < nf; ++f) deg_[f] = static_cast<int>(dual.adjacency[f].size());
        for (int f = 0; f < nf; ++f)
            if (is_ear(f))
                for (int arc : dual.adjacency[f]) ++ear_nbrs_[dual.other_end(arc, f)];
        for (int f = 0; f < nf; ++f) refresh(f);
    }

    int alive_count() const { return alive_count_; }
    bool alive(int f) const { return alive_[f]; }
    bool is_ear(int f) const { return alive_[f] && deg_[f] <= 1; }
    bool is_hat(int f) const {
        return alive_[f] && ear_nbrs_[f] >= 1 && deg_[f] - ear_nbrs_[f] <= 1;
    }

    /// Lowest-index hat, -1 if none.
    int lowest_hat() const { return hats_.empty() ? -1 : *hats_.begin(); }
    /// Lowest-index hat with >= 2 adjacent ears, -1 if none.
    int lowest_mickey_mouse_hat() const { return mm_hats_.empty() ? -1 : *mm_hats_.begin(); }
    /// Lowest-index hat with exactly one adjacent ear, -1 if none.
    int lowest_single_ear_hat() const {
        for (int h : hats_)
            if (ear_nbrs_[h] == 1) return h;
        return -1;
    }
    /// Lowest-index isolated alive facet, -1 if none.
    int lowest_lone() const { return lone_.empty() ? -1 : *lone_.begin(); }
    /// Any alive facet of lowest index (used for the 3-facet case).
    int lowest_alive() const {
        for (int f = 0; f < static_cast<int>(alive_.size()); ++f)
            if (alive_[f]) return f;
        return -1;
    }

    std::vector<int> alive_ears_of(int f) const {
        std::vector<int> ears;
        for (int arc : dual_->adjacency[f]) {
            const int g = dual_->other_end(arc, f);
            if (is_ear(g)) ears.push_back(g);
        }
        std::sort(ears.begin(), ears.end());
        return ears;
    }

    std::vector<int> alive_neighbors_of(int f) const {
        std::vector<int> ns;
        for (int arc : dual_->adjacency[f]) {
            const int g = dual_->other_end(arc, f);
            if (alive_[g]) ns.push_back(g);
        }
        std::sort(ns.begin(), ns.end());
        return ns;
    }

    /// Ridge glued between two adjacent alive facets.
    const Ridge& ridge_between(int f, int g) const {
        for (int arc : dual_->adjacency[f]) {
            const DualArc& a = dual_->arcs[arc];
            if (a.a + a.b - f == g) return a.ridge;
        }
        throw InternalError("ridge_between: facets are not adjacent");
    }

    void remove(int f) {
        if (!alive_[f]) throw InternalError("EarHatTracker: facet removed twice");
        const bool was_ear = is_ear(f);
        alive_[f] = false;
        --alive_count_;
        hats_.erase(f);
        mm_hats_.erase(f);
        lone_.erase(f);
        for (int arc : dual_->adjacency[f]) {
            const int g = dual_->other_end(arc, f);
            if (!alive_[g]) continue;
            const bool g_was_ear = is_ear(g);
            --deg_[g];
            if (was_ear) --ear_nbrs_[g];
            if (!g_was_ear && is_ear(g)) {
                // g just became an ear; its neighbors gain an ear
                for (int arc2 : dual_->adjacency[g]) {
                    const int h = dual_->other_end(arc2, g);
                    if (!alive_[h]) continue;
                    ++ear_nbrs_[h];
                    refresh(h);
                }
            }
            refresh(g);
        }
    }

private:
    void refresh(int f) {
        if (!alive_[f]) return;
        if (is_hat(f)) {
            hats_.insert(f);
            if (ear_nbrs_[f] >= 2)
                mm_hats_.insert(f);
            else
                mm_hats_.erase(f);
        } else {
            hats_.erase(f);
            mm_hats_.erase(f);
        }
        if (deg_[f] == 0)
            lone_.insert(f);
        else
            lone_.erase(f);
    }

    const DualGraph* dual_;
    std::vector<bool> alive_;
    std::vector<int> deg_;
    std::vector<int> ear_nbrs_;
    std::set<int> hats_;
    std::set<int> mm_hats_;
    std::set<int> lone_;
    int alive_count_ = 0;
};

inline std::array<int, 2> sorted_pair(int a, int b) {
    return a < b ? std::array<int, 2>{a, b} : std::array<int, 2>{b, a};
}

// Shared 2D recursion.  In even mode Mickey Mouse hats are removed whenever
// one exists and reaching a lone triangle is an error.
inline Scaffold scaffold_2d(const UnfoldedComplex& u, bool even_mode) {
    if (u.complex.dim != 2) throw InvalidInputError("scaffold construction requires dim == 2");
    const DualGraph dual = build_dual(u.complex);
    if (static_cast<int>(dual.arcs.size()) != dual.node_count - 1)
        throw InvalidInputError("scaffold construction requires a tree dual (unfolded complex)");

    Scaffold s;
    s.attachments.assign(u.complex.facet_count(), {-1, -1});
    EarHatTracker tracker(dual);

    while (tracker.alive_count() > 0) {
        int h = even_mode ? tracker.lowest_mickey_mouse_hat() : -1;
        if (h < 0) h = tracker.lowest_hat();
        if (h < 0) {
            // only isolated facets remain
            const int f = tracker.lowest_lone();
            if (f < 0) throw InternalError("scaffold_2d: no hat and no lone facet");
            if (even_mode)
                throw InvalidInputError(
                    "even scaffold impossible: recursion reached a single triangle "
                    "(checkered input, facet " +
                    std::to_string(f) + ")");
            // base case: a path between the facet's two lowest vertices
            std::vector<int> vs = u.complex.facets[f];
            std::sort(vs.begin(), vs.end());
            s.attachments[f] = {vs[0], vs[1]};
            tracker.remove(f);
            continue;
        }

        const std::vector<int> ears = tracker.alive_ears_of(h);
        if (ears.empty()) throw InternalError("scaffold_2d: hat without ears");
        if (ears.size() >= 2) {
            // Mickey Mouse hat: cycle (r, E, q, H, s, F, r) over the two
            // lowest-index ears, r the vertex shared by all three triangles
            const int e = ears[0], f = ears[1];
            const Ridge& eh = tracker.ridge_between(e, h);
            const Ridge& hf = tracker.ridge_between(h, f);
            int r = -1;
            for (int v : eh)
                if (std::find(hf.begin(), hf.end(), v) != hf.end()) r = v;
            if (r < 0) throw InternalError("scaffold_2d: ear ridges share no vertex");
            const int q = eh[0] == r ? eh[1] : eh[0];
            const int sv = hf[0] == r ? hf[1] : hf[0];
            s.attachments[e] = sorted_pair(r, q);
            s.attachments[h] = sorted_pair(q, sv);
            s.attachments[f] = sorted_pair(sv, r);
            tracker.remove(e);
            tracker.remove(f);
            tracker.remove(h);
        } else {
            // dunce cap: cycle (q, H, r, E, q) over the shared edge
            const int e = ears[0];
            const Ridge& eh = tracker.ridge_between(e, h);
            s.attachments[e] = sorted_pair(eh[0], eh[1]);
            s.attachments[h] = sorted_pair(eh[0], eh[1]);
            tracker.remove(e);
            tracker.remove(h);
        }
    }
    return s;
}

}  // namespace detail

/// Scaffold of a triangulated polygon with no interior vertices, by ear/hat
/// recursion on its dual tree.  May be disconnected and may have up to two
/// odd vertex nodes (one lone-triangle base case at most).
inline Scaffold build_scaffold_2d(const UnfoldedComplex& u) {
    return detail::scaffold_2d(u, /*even_mode=*/false);
}

/// Even scaffold of a non-checkered triangulated polygon: the same
/// recursion with Mickey Mouse removal preferred at every step.  Raises
/// InvalidInputError when the recursion strands a lone triangle, which
/// happens exactly for checkered input.
inline Scaffold build_even_scaffold_2d(const UnfoldedComplex& u) {
    return detail::scaffold_2d(u, /*even_mode=*/true);
}

/// Even scaffold of an unfolded simplicial d-manifold, d >= 3, by the
/// four-case hat/ear recursion.  A single d-simplex is the one exception.
inline Scaffold build_even_scaffold_d(const UnfoldedComplex& u) {
    if (u.complex.dim < 3) throw InvalidInputError("build_even_scaffold_d requires dim >= 3");
    if (u.complex.facet_count() == 1)
        throw SingleSimplexError("a single simplex has no even scaffold");
    const DualGraph dual = build_dual(u.complex);
    if (static_cast<int>(dual.arcs.size()) != dual.node_count - 1)
        throw InvalidInputError("build_even_scaffold_d requires a tree dual (unfolded complex)");

    Scaffold s;
    s.attachments.assign(u.complex.facet_count(), {-1, -1});
    detail::EarHatTracker tracker(dual);

    auto shared_vertices = [&](int a, int b) {
        std::vector<int> sa = u.complex.facets[a], sb = u.complex.facets[b], out;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
        return out;
    };
    auto lowest_excluding = [](const std::vector<int>& pool, std::initializer_list<int> taken) {
        for (int v : pool)
            if (std::find(taken.begin(), taken.end(), v) == taken.end()) return v;
        throw InternalError("build_even_scaffold_d: vertex pool exhausted");
    };

    while (tracker.alive_count() > 0) {
        if (tracker.alive_count() == 3) {
            // exactly a hat and two ears; the hat is the middle node
            int h = -1;
            std::vector<int> alive;
            for (int f = 0; f < dual.node_count; ++f)
                if (tracker.alive(f)) alive.push_back(f);
            for (int f : alive)
                if (tracker.alive_neighbors_of(f).size() == 2) h = f;
            if (h < 0) throw InternalError("build_even_scaffold_d: no middle facet among three");
            std::vector<int> ears;
            for (int f : alive)
                if (f != h) ears.push_back(f);
            const int e = ears[0], f = ears[1];
            const std::vector<int> ef = shared_vertices(e, f);
            if (ef.empty()) throw InternalError("build_even_scaffold_d: ears share no vertex");
            const int p = ef[0];
            Ridge eh = tracker.ridge_between(e, h);
            Ridge hf = tracker.ridge_between(h, f);
            std::sort(eh.begin(), eh.end());
            std::sort(hf.begin(), hf.end());
            const int q = lowest_excluding(eh, {p});
            const int r = lowest_excluding(hf, {p, q});
            s.attachments[e] = detail::sorted_pair(p, q);
            s.attachments[h] = detail::sorted_pair(q, r);
            s.attachments[f] = detail::sorted_pair(r, p);
            tracker.remove(e);
            tracker.remove(f);
            tracker.remove(h);
            continue;
        }

        int h = tracker.lowest_single_ear_hat();
        if (h >= 0) {
            // hat adjacent to just one ear: cycle (p, H, q, E, p)
            const int e = tracker.alive_ears_of(h)[0];
            Ridge ridge = tracker.ridge_between(h, e);
            std::sort(ridge.begin(), ridge.end());
            s.attachments[h] = {ridge[0], ridge[1]};
            s.attachments[e] = {ridge[0], ridge[1]};
            tracker.remove(e);
            tracker.remove(h);
            continue;
        }

        h = tracker.lowest_hat();
        if (h < 0)
            throw InternalError("build_even_scaffold_d: no hat in a complex with " +
                                std::to_string(tracker.alive_count()) + " facets");
        // hat with two or more ears, more than three facets: cycle
        // (p, E, q, F, p) over the ears' shared (d-2)-face; the hat stays
        const std::vector<int> ears = tracker.alive_ears_of(h);
        const int e = ears[0], f = ears[1];
        Ridge eh = tracker.ridge_between(e, h);
        Ridge fh = tracker.ridge_between(f, h);
        std::sort(eh.begin(), eh.end());
        std::sort(fh.begin(), fh.end());
        std::vector<int> shared;
        std::set_intersection(eh.begin(), eh.end(), fh.begin(), fh.end(),
                              std::back_inserter(shared));
        if (shared.size() < 2)
            throw InternalError("build_even_scaffold_d: ears share fewer than two vertices");
        s.attachments[e] = {shared[0], shared[1]};
        s.attachments[f] = {shared[0], shared[1]};
        tracker.remove(e);
        tracker.remove(f);
    }
    return s;
}

/// Called after each flip with the scaffold state and the dual arc flipped.
using FlipObserver = std::function<void(const Scaffold&, const DualArc&)>;

/// Connects a scaffold by flips across shared ridges: for a dual arc (A, B)
/// joining two components, swap one attachment of A inside the ridge with
/// one of B.  Facet degrees and vertex parities are preserved, and each
/// flip merges exactly the two components.  Already-connected scaffolds are
/// returned unchanged.
inline Scaffold connect(const SimplicialComplex& c, const DualGraph& dual, Scaffold s,
                        const FlipObserver& observer = {}) {
    if (s.facet_count() != c.facet_count())
        throw InvalidInputError("connect: scaffold does not match complex");
    const int V = c.vertex_count;
    detail::UnionFind uf(V + c.facet_count());
    for (int f = 0; f < s.facet_count(); ++f) {
        uf.unite(s.attachments[f][0], V + f);
        uf.unite(s.attachments[f][1], V + f);
    }
    for (int arc = 0; arc < static_cast<int>(dual.arcs.size()); ++arc) {
        const DualArc& da = dual.arcs[arc];
        if (da.a == da.b) continue;
        if (uf.find(V + da.a) == uf.find(V + da.b)) continue;

        auto in_ridge = [&](int v) {
            return std::find(da.ridge.begin(), da.ridge.end(), v) != da.ridge.end();
        };
        // lowest attachment of each side lying in the shared ridge; the two
        // are distinct because a shared attached vertex would already have
        // merged the components
        int q = -1, r = -1;
        for (int v : s.attachments[da.a])
            if (in_ridge(v) && (q < 0 || v < q)) q = v;
        for (int v : s.attachments[da.b])
            if (in_ridge(v) && (r < 0 || v < r)) r = v;
        if (q < 0 || r < 0 || q == r)
            throw InternalError("connect: no valid flip vertices across ridge");

        auto& at_a = s.attachments[da.a];
        auto& at_b = s.attachments[da.b];
        at_a[at_a[0] == q ? 0 : 1] = r;
        at_b[at_b[0] == r ? 0 : 1] = q;
        std::sort(at_a.begin(), at_a.end());
        std::sort(at_b.begin(), at_b.end());
        // the flip merges the two components' node sets exactly
        uf.unite(V + da.a, V + da.b);
        if (observer) observer(s, da);
    }
    return s;
}

inline Scaffold connect(const SimplicialComplex& c, const Scaffold& s,
                        const FlipObserver& observer = {}) {
    return connect(c, build_dual(c), s, observer);
}

}  // namespace vunfold
