#include <catch2/catch_amalgamated.hpp>

#include <deque>

#include "corpus.hpp"
#include "vunfold/facet_path.hpp"
#include "vunfold/io.hpp"
#include "vunfold/strip_layout.hpp"

using namespace vunfold;

namespace {

std::vector<SimplicialComplex> mixed_corpus() {
    std::vector<SimplicialComplex> out = {
        corpus::single_triangle(), corpus::triforce(),   corpus::checkered7(),
        corpus::tetrahedron(),     corpus::octahedron(), corpus::icosahedron(),
        corpus::cube_triangulated(), corpus::klein_bottle(), corpus::double_triangle(),
        corpus::simplex_boundary(3), corpus::simplex_boundary(4)};
    for (int k : {1, 3, 6}) out.push_back(corpus::fan(k));
    for (int k : {2, 5, 9}) out.push_back(corpus::snake(k));
    for (int k : {1, 4, 7}) out.push_back(corpus::simplex_path(k));
    for (std::uint64_t s : {10u, 20u, 30u, 40u})
        out.push_back(corpus::random_polygon_triangulation(4 + static_cast<int>(s % 9), s));
    for (int n : {4, 8, 16, 33}) out.push_back(gen_hull(n, 100 + n));
    return out;
}

int recount_components(const Scaffold& s, int vertex_count) {
    const int nf = s.facet_count();
    std::vector<std::vector<int>> facets_at(vertex_count);
    for (int f = 0; f < nf; ++f) {
        facets_at[s.attachments[f][0]].push_back(f);
        facets_at[s.attachments[f][1]].push_back(f);
    }
    std::vector<bool> seen(nf, false);
    int comps = 0;
    for (int f0 = 0; f0 < nf; ++f0) {
        if (seen[f0]) continue;
        ++comps;
        std::deque<int> queue{f0};
        seen[f0] = true;
        while (!queue.empty()) {
            const int f = queue.front();
            queue.pop_front();
            for (int v : s.attachments[f])
                for (int g : facets_at[v])
                    if (!seen[g]) {
                        seen[g] = true;
                        queue.push_back(g);
                    }
        }
    }
    return comps;
}

}  // namespace

TEST_CASE("property: the full pipeline yields verified paths on the whole corpus") {
    for (const SimplicialComplex& c : mixed_corpus()) {
        INFO("dim=" << c.dim << " facets=" << c.facet_count());
        const FacetPath p = facet_path(c);
        CHECK(verify_path(c, p).ok());
        CHECK(facet_path(c) == p);  // deterministic
    }
}

TEST_CASE("property: ridge accounting and incidence degrees") {
    for (const SimplicialComplex& c : mixed_corpus()) {
        const DualGraph dual = build_dual(c);
        CHECK((c.dim + 1) * c.facet_count() ==
              static_cast<int>(2 * dual.arcs.size() + dual.boundary.size()));
        const IncidenceGraph inc = incidence_graph(c);
        size_t sum = 0;
        for (const auto& fs : inc.vertex_facets) sum += fs.size();
        CHECK(sum == static_cast<size_t>((c.dim + 1) * c.facet_count()));
    }
}

TEST_CASE("property: unfolding preserves facets and accounts for every ridge") {
    for (const SimplicialComplex& c : mixed_corpus()) {
        const DualGraph dual = build_dual(c);
        const UnfoldTree t = spanning_tree(dual, 0);
        const UnfoldedComplex u = unfold(c, dual, t);
        REQUIRE(u.complex.facet_count() == c.facet_count());

        const DualGraph udual = build_dual(u.complex);
        CHECK(udual.arcs.size() == t.arc_ids.size());
        CHECK(udual.boundary.size() ==
              dual.boundary.size() + 2 * (dual.arcs.size() - t.arc_ids.size()));

        for (int f = 0; f < c.facet_count(); ++f) {
            std::multiset<int> src(c.facets[f].begin(), c.facets[f].end());
            std::multiset<int> img;
            for (int v : u.complex.facets[f]) img.insert(u.vertex_map[v]);
            CHECK(src == img);
        }
    }
}

TEST_CASE("property: scaffold invariants and flip bookkeeping") {
    for (const SimplicialComplex& c : mixed_corpus()) {
        const DualGraph dual = build_dual(c);
        const UnfoldedComplex u = unfold(c, dual, spanning_tree(dual, 0));
        const int V = u.complex.vertex_count;

        Scaffold s;
        bool even_expected = false;
        if (c.dim == 1 || u.complex.facet_count() == 1) {
            s = detail::forced_scaffold(u.complex);
        } else if (c.dim == 2) {
            s = build_scaffold_2d(u);
        } else {
            s = build_even_scaffold_d(u);
            even_expected = true;
        }
        INFO("dim=" << c.dim << " facets=" << c.facet_count());
        CHECK(scaffold_report(u.complex, s, even_expected).ok());
        if (even_expected) CHECK(is_even(s, V));

        const std::vector<int> deg_before = vertex_degrees(s, V);
        int prev = recount_components(s, V);
        const Scaffold sc = connect(u.complex, s, [&](const Scaffold& after, const DualArc&) {
            const int now = recount_components(after, V);
            CHECK(now == prev - 1);  // each flip merges exactly two components
            prev = now;
        });
        CHECK(prev == 1);
        CHECK(recount_components(sc, V) == 1);
        // parity of every vertex and degree of every facet preserved
        const std::vector<int> deg_after = vertex_degrees(sc, V);
        for (int v = 0; v < V; ++v) CHECK(deg_before[v] % 2 == deg_after[v] % 2);

        const FacetPath trail = euler_trail(sc, V);
        CHECK(verify_path(u.complex, trail).ok());
        CHECK(trail.cyclic == is_even(sc, V));
    }
}

TEST_CASE("property: checkered polygon triangulations have no facet cycle, others do") {
    // cycle-existence equivalence, exhaustively verified at small scale
    std::vector<SimplicialComplex> polys = {corpus::single_triangle(), corpus::triforce(),
                                            corpus::checkered7()};
    for (int k : {2, 3, 4, 5, 6, 7}) polys.push_back(corpus::snake(k));
    for (int k : {2, 3, 5}) polys.push_back(corpus::fan(k));
    for (std::uint64_t s : {5u, 6u, 7u, 8u, 9u})
        polys.push_back(corpus::random_polygon_triangulation(3 + static_cast<int>(s % 7), s));

    for (const SimplicialComplex& c : polys) {
        const DualGraph dual = build_dual(c);
        REQUIRE(dual.arcs.size() == static_cast<size_t>(c.facet_count() - 1));  // tree dual
        const UnfoldedComplex u = unfold(c, dual, spanning_tree(dual, 0));
        const bool checkered = checkering_of(u).has_value();
        const bool has_cycle = !brute_force(c, true).empty();
        INFO("facets=" << c.facet_count());
        CHECK(checkered == !has_cycle);
    }
}

TEST_CASE("property: noncrossing conversion zeroes interleavings on manifold meshes") {
    std::vector<SimplicialComplex> meshes = {corpus::single_triangle(), corpus::triforce(),
                                             corpus::tetrahedron(), corpus::octahedron()};
    for (int k : {2, 4, 6}) meshes.push_back(corpus::snake(k));
    for (int k : {2, 5}) meshes.push_back(corpus::fan(k));
    for (int n : {4, 6}) meshes.push_back(gen_hull(n, 55 + n));

    for (const SimplicialComplex& c : meshes) {
        const FacetPath p = facet_path(c);
        const FacetPath q = make_noncrossing(c, p);
        CHECK(interleaving_count(c, q) == 0);
        CHECK(verify_path(c, q).ok());
        CHECK(make_noncrossing(c, q) == q);  // idempotent once crossing-free
    }
}

TEST_CASE("property: layouts certify on the whole corpus, gap 0 and positive") {
    for (const SimplicialComplex& c : mixed_corpus()) {
        const FacetPath p = facet_path(c);
        for (double gap : {0.0, 0.37}) {
            const StripLayout lay = layout(c, p, gap);
            INFO("dim=" << c.dim << " facets=" << c.facet_count() << " gap=" << gap);
            CHECK(verify_layout(lay, c, 1e-9).ok());

            double total = 0;
            for (const Placement& pl : lay.placements) total += pl.width();
            total += gap * (static_cast<double>(lay.placements.size()) - 1);
            const double span = lay.placements.back().x_right - lay.placements.front().x_left;
            CHECK(std::abs(span - total) <= 1e-9 * std::max(1.0, std::abs(total)));
        }
    }
}

TEST_CASE("property: layout documents round trip bit-identically") {
    for (const SimplicialComplex& c :
         {corpus::octahedron(), corpus::klein_bottle(), corpus::simplex_boundary(3)}) {
        const StripLayout lay = layout(c, facet_path(c), 0.125);
        CHECK(layout_from_json(layout_to_json(lay, c)) == lay);
    }
}
