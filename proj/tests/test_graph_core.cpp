#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "wd/gen.hpp"
#include "wd/plane_graph.hpp"
#include "wd/rng.hpp"

using namespace wd;

namespace {

PlaneGraph two_triangles_sharing(VertexId c) {
    // triangles {0,1,c} and {c,3,4} glued at c = 2
    REQUIRE(c == 2);
    PlaneGraph g;
    g.graph = SimpleGraph(5);
    for (auto [a, b] : {std::pair<int, int>{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}})
        g.graph.add_edge(a, b);
    g.rotation = {{1, 2}, {2, 0}, {0, 1, 3, 4}, {4, 2}, {2, 3}};
    g.outer = {{0, 1, 2, 3, 4, 2}};
    validate(g);
    return g;
}

size_t total_face_length(const PlaneGraph& g) {
    size_t s = 0;
    for (const auto& w : faces(g))
        if (w.size() > 1) s += w.size();
    return s;
}

std::vector<VertexId> inner_face(const PlaneGraph& g) {
    std::set<std::vector<VertexId>> oc;
    for (const auto& w : g.outer) oc.insert(canonical_walk(w));
    for (const auto& w : faces(g))
        if (!oc.count(canonical_walk(w))) return w;
    return {};
}

} // namespace

TEST_CASE("faces: triangle, K4, hexagon") {
    auto tri = gen_cycle(3);
    auto f = faces(tri);
    CHECK(f.size() == 2);
    for (const auto& w : f) CHECK(w.size() == 3);

    auto k4 = gen_wheel(3); // K4 with outer triangle
    f = faces(k4);
    CHECK(f.size() == 4);
    for (const auto& w : f) CHECK(w.size() == 3);

    auto c6 = gen_cycle(6);
    f = faces(c6);
    CHECK(f.size() == 2);
    for (const auto& w : f) CHECK(w.size() == 6);
}

TEST_CASE("boundary: wheel, triangle, P2") {
    auto w5 = gen_wheel(5);
    auto bd = boundary(w5);
    for (int v = 0; v < 5; ++v) CHECK(bd.has(v));
    CHECK(!bd.has(5)); // hub
    CHECK(bd.cycle.size() == 5);

    auto tri = gen_cycle(3);
    bd = boundary(tri);
    for (int v = 0; v < 3; ++v) CHECK(bd.has(v));

    auto p2 = gen_path(2);
    bd = boundary(p2);
    CHECK(bd.has(0));
    CHECK(bd.has(1));
    CHECK(p2.outer[0].size() == 2); // both directions of the single edge
}

TEST_CASE("find_chords: no chords on C5") {
    auto c5 = gen_cycle(5);
    for (int ell = 0; ell <= 2; ++ell) CHECK(find_chords(c5, {}, ell).empty());
}

TEST_CASE("find_chords: shared vertex is a 0-chord") {
    auto g = two_triangles_sharing(2);
    auto chords = find_chords(g, {}, 0);
    REQUIRE(chords.size() == 1);
    CHECK(chords[0].path == std::vector<VertexId>{2});
    std::vector<VertexId> a = chords[0].side1, b = chords[0].side2;
    CHECK(a.size() == 3);
    CHECK(b.size() == 3);
}

TEST_CASE("find_chords: 2-chord through an inner vertex") {
    // pentagon 0..4 with inner vertex 5 adjacent to 1 and 3
    PlaneGraph g;
    g.graph = SimpleGraph(6);
    for (auto [a, b] :
         {std::pair<int, int>{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 5}, {3, 5}})
        g.graph.add_edge(a, b);
    g.rotation = {{1, 4}, {2, 5, 0}, {3, 1}, {4, 5, 2}, {0, 3}, {1, 3}};
    g.outer = {{0, 1, 2, 3, 4}};
    validate(g);

    auto chords = find_chords(g, {}, 2);
    REQUIRE(chords.size() == 1);
    CHECK(chords[0].path == std::vector<VertexId>{1, 5, 3});
    // both sides contain the path; the small side is {1,2,3,5}
    std::vector<VertexId> small{1, 2, 3, 5};
    CHECK((chords[0].side1 == small || chords[0].side2 == small));

    auto [g1, g2] = split(g, chords[0]);
    CHECK(g1.graph.vertex_count() + g2.graph.vertex_count() == 6 + 3);
}

TEST_CASE("split: two triangles at the cut vertex") {
    auto g = two_triangles_sharing(2);
    auto chords = find_chords(g, {}, 0);
    auto [g1, g2] = split(g, chords[0]);
    CHECK(g1.graph.vertex_count() == 3);
    CHECK(g2.graph.vertex_count() == 3);
    CHECK(g1.graph.edge_count() == 3);
    CHECK(g2.graph.edge_count() == 3);
}

TEST_CASE("split: 4-cycle with a chord") {
    auto c4 = gen_cycle(4);
    auto g = add_edge_in_face(c4, 0, 2, inner_face(c4));
    auto chords = find_chords(g, {}, 1);
    REQUIRE(chords.size() == 1);
    CHECK(chords[0].path == std::vector<VertexId>{0, 2});
    CHECK(chords[0].max_side1);
    auto [g1, g2] = split(g, chords[0]);
    CHECK(g1.graph.vertex_count() == 3);
    CHECK(g2.graph.vertex_count() == 3);
}

TEST_CASE("split reconstructs the vertex and edge sets") {
    auto g = gen_apollonian(9, 17);
    for (int ell = 1; ell <= 2; ++ell) {
        for (const auto& sp : find_chords(g, {}, ell)) {
            auto [a, b] = split_with_maps(g, sp);
            std::set<VertexId> vs;
            for (VertexId v : a.to_parent) vs.insert(v);
            for (VertexId v : b.to_parent) vs.insert(v);
            CHECK(vs.size() == static_cast<size_t>(g.graph.vertex_count()));
            std::set<std::pair<VertexId, VertexId>> es;
            for (auto [u, v] : a.g.graph.edges())
                es.insert({std::min(a.to_parent[u], a.to_parent[v]),
                           std::max(a.to_parent[u], a.to_parent[v])});
            for (auto [u, v] : b.g.graph.edges())
                es.insert({std::min(b.to_parent[u], b.to_parent[v]),
                           std::max(b.to_parent[u], b.to_parent[v])});
            CHECK(es.size() == static_cast<size_t>(g.graph.edge_count()));
        }
    }
}

TEST_CASE("add_edge_in_face: square and pentagon") {
    auto c4 = gen_cycle(4);
    auto g = add_edge_in_face(c4, 0, 2, inner_face(c4));
    auto f = faces(g);
    CHECK(f.size() == 3);
    int tri = 0;
    for (const auto& w : f)
        if (w.size() == 3) ++tri;
    CHECK(tri == 2);

    auto c5 = gen_cycle(5);
    auto g2 = add_edge_in_face(c5, 0, 2, inner_face(c5));
    std::multiset<size_t> lens;
    for (const auto& w : faces(g2)) lens.insert(w.size());
    CHECK(lens == std::multiset<size_t>{3, 4, 5});

    CHECK_THROWS_AS(add_edge_in_face(g, 0, 2, inner_face(g)), Error); // already adjacent
}

TEST_CASE("repeatedly triangulating a k-face yields k-2 triangles") {
    for (int k = 4; k <= 8; ++k) {
        auto g = gen_cycle(k);
        for (;;) {
            std::vector<VertexId> face;
            std::set<std::vector<VertexId>> outer_canon;
            for (const auto& w : g.outer) outer_canon.insert(canonical_walk(w));
            for (const auto& w : faces(g))
                if (w.size() >= 4 && !outer_canon.count(canonical_walk(w))) face = w;
            if (face.empty()) break;
            g = add_edge_in_face(g, face[0], face[2], face);
        }
        int tris = 0;
        for (const auto& w : faces(g))
            if (w.size() == 3) ++tris;
        CHECK(tris == k - 2);
        CHECK(g.graph.edge_count() == 2 * k - 3);
    }
}

TEST_CASE("delete_vertex: wheel hub, triangle, K4") {
    auto w5 = gen_wheel(5);
    auto g = delete_vertex(w5, 5);
    CHECK(g.graph.vertex_count() == 5);
    CHECK(g.graph.edge_count() == 5);
    CHECK(canonical_walk(g.outer[0]) == canonical_walk(w5.outer[0]));

    auto tri = gen_cycle(3);
    auto e = delete_vertex(tri, 2);
    CHECK(e.graph.vertex_count() == 2);
    CHECK(e.graph.edge_count() == 1);

    auto k4 = gen_wheel(3);
    auto t = delete_vertex(k4, 0); // an outer vertex
    CHECK(t.graph.vertex_count() == 3);
    CHECK(t.graph.edge_count() == 3);
}

TEST_CASE("face walk length sum equals 2m across generators") {
    for (const PlaneGraph& g :
         {gen_cycle(7), gen_wheel(9), gen_grid(4, 5), gen_apollonian(20, 5), gen_icosahedron(),
          gen_path(6)}) {
        CHECK(total_face_length(g) == 2 * static_cast<size_t>(g.graph.edge_count()));
    }
}

TEST_CASE("edits preserve the PlaneGraph invariants") {
    SplitMix64 rng(99);
    auto g = gen_apollonian(12, 3);
    for (int step = 0; step < 8; ++step) {
        VertexId u = static_cast<VertexId>(rng.below(g.graph.vertex_count()));
        g = delete_vertex(g, u); // validate() runs inside
        if (g.graph.vertex_count() <= 4) break;
    }
    CHECK(g.graph.vertex_count() >= 4);
}

TEST_CASE("boundary-to-boundary edges off dG are exactly the 1-chords") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int k = 5 + static_cast<int>(rng.below(4)); // 5..8
        auto g = gen_cycle(k);
        int extra = 1 + static_cast<int>(rng.below(3));
        for (int e = 0; e < extra; ++e) {
            std::vector<std::vector<VertexId>> inner;
            std::set<std::vector<VertexId>> outer_canon;
            for (const auto& w : g.outer) outer_canon.insert(canonical_walk(w));
            for (const auto& w : faces(g))
                if (w.size() >= 4 && !outer_canon.count(canonical_walk(w))) inner.push_back(w);
            if (inner.empty()) break;
            const auto& face = inner[rng.below(inner.size())];
            size_t i = rng.below(face.size());
            size_t j = (i + 2) % face.size();
            if (g.graph.has_edge(face[i], face[j])) continue;
            g = add_edge_in_face(g, face[i], face[j], face);
        }
        Boundary bd = boundary(g);
        std::set<std::vector<VertexId>> expected;
        for (auto [u, v] : g.graph.edges())
            if (bd.has(u) && bd.has(v) && !bd.has_edge(u, v))
                expected.insert({u, v});
        std::set<std::vector<VertexId>> got;
        for (const auto& sp : find_chords(g, {}, 1)) got.insert(sp.path);
        CHECK(got == expected);
    }
}

TEST_CASE("cycle_interior identifies enclosed vertices") {
    auto w6 = gen_wheel(6);
    // triangle rim0-rim1-hub bounds a face: empty interior
    CHECK(cycle_interior(w6, {0, 1, 6}).empty());
    // the rim encloses the hub
    auto inner = cycle_interior(w6, {0, 1, 2, 3, 4, 5});
    CHECK(inner == std::vector<VertexId>{6});
    CHECK(find_enclosing_triangle(w6) == std::nullopt);

    auto k4 = gen_wheel(3);
    auto t = find_enclosing_triangle(k4); // outer triangle encloses the hub
    REQUIRE(t.has_value());
    CHECK(*t == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("enclosing quad detection skips diagonal splits") {
    // wheel W6: 4-cycles through the hub are diagonal-split, no interior
    CHECK(find_enclosing_quad(gen_wheel(6)) == std::nullopt);

    // W4 built by hand: the outer 4-cycle encloses the hub
    PlaneGraph g;
    g.graph = SimpleGraph(5);
    for (auto [a, b] :
         {std::pair<int, int>{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}})
        g.graph.add_edge(a, b);
    g.rotation = {{1, 4, 3}, {2, 4, 0}, {3, 4, 1}, {0, 4, 2}, {0, 1, 2, 3}};
    g.outer = {{0, 1, 2, 3}};
    validate(g);
    auto q = find_enclosing_quad(g);
    REQUIRE(q.has_value());
    CHECK(*q == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("parity: Euler holds per component after arbitrary deletions") {
    SplitMix64 rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = gen_grid(3, 4);
        for (int d = 0; d < 5 && g.graph.vertex_count() > 1; ++d) {
            VertexId u = static_cast<VertexId>(rng.below(g.graph.vertex_count()));
            g = delete_vertex(g, u); // throws if any invariant breaks
        }
    }
}
