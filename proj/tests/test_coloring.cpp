#include <algorithm>

#include "doctest.h"
#include "wd/coloring.hpp"
#include "wd/exact.hpp"
#include "wd/gen.hpp"
#include "wd/planar_witness.hpp"
#include "wd/rng.hpp"

using namespace wd;

TEST_CASE("greedy_color: trees, cycles, and a too-small palette") {
    auto star = SimpleGraph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    std::vector<VertexId> order;
    degeneracy(star, &order);
    std::reverse(order.begin(), order.end());
    auto col = greedy_color(star, 1, order);
    REQUIRE(col.has_value());
    CHECK(validate_coloring(star, *col));
    int maxc = *std::max_element(col->color.begin(), col->color.end());
    CHECK(maxc <= 1);

    auto c5 = gen_cycle(5).graph;
    degeneracy(c5, &order);
    std::reverse(order.begin(), order.end());
    auto col5 = greedy_color(c5, 2, order);
    REQUIRE(col5.has_value());
    CHECK(validate_coloring(c5, *col5));

    auto k4 = gen_clique(4);
    std::vector<VertexId> any{0, 1, 2, 3};
    size_t fail_step = 0;
    CHECK(!greedy_color(k4, 2, any, &fail_step).has_value());
    CHECK(fail_step == 3); // the fourth vertex runs out of 3 colors
}

TEST_CASE("greedy never fails along a reversed peeling order") {
    SplitMix64 rng(808);
    for (int t = 0; t < 40; ++t) {
        auto g = gen_random_graph(8, rng.next(), 50);
        std::vector<VertexId> order;
        int d = degeneracy(g, &order);
        std::reverse(order.begin(), order.end());
        auto col = greedy_color(g, d, order);
        REQUIRE(col.has_value());
        CHECK(validate_coloring(g, *col));
    }
}

TEST_CASE("color_from_witness: the forced K2 pick") {
    auto k2 = SimpleGraph::from_edges(2, {{0, 1}});
    Witness w{{0, 1}, {1, kBlank}};
    ListAssignment la;
    la.lists = {{1, 2}, {1}};
    auto col = color_from_witness(k2, {1, 0}, w, la);
    CHECK(col.color[0] == 2); // must come from L(u) \ L(w)
    CHECK(col.color[1] == 1);
    CHECK(validate_coloring(k2, col, &la));
}

TEST_CASE("color_from_witness: wd + 1 colors suffice") {
    SplitMix64 rng(112);
    for (int t = 0; t < 25; ++t) {
        int n = 3 + static_cast<int>(rng.below(5));
        auto g = gen_random_graph(n, rng.next(), 50);
        Witness w;
        int d = weak_degeneracy(g, &w);
        auto la = ListAssignment::palette(n, d + 1);
        auto col = color_from_witness(g, constant_charge(n, d), w, la);
        CHECK(validate_coloring(g, col, &la));
    }
}

TEST_CASE("color_from_witness: random 5-lists from 10 colors on planar graphs") {
    SplitMix64 rng(3141);
    auto g = gen_apollonian(30, 9);
    auto wit = witness_planar_4(g);
    const int n = g.graph.vertex_count();
    for (int round = 0; round < 20; ++round) {
        ListAssignment la;
        la.lists.assign(static_cast<size_t>(n), {});
        for (auto& l : la.lists)
            while (l.size() < 5) {
                int c = static_cast<int>(rng.below(10));
                if (std::find(l.begin(), l.end(), c) == l.end()) l.push_back(c);
            }
        auto chooser = random_chooser(rng.next());
        auto col = color_from_witness(g.graph, constant_charge(n, 4), wit, la, chooser);
        CHECK(validate_coloring(g.graph, col, &la));
    }
}

TEST_CASE("chooser independence: min, max and random all succeed") {
    auto g = gen_wheel(7);
    auto wit = witness_planar_4(g);
    const int n = g.graph.vertex_count();
    auto la = ListAssignment::palette(n, 5);
    for (const auto& ch : {min_chooser(), max_chooser(), random_chooser(5)}) {
        auto col = color_from_witness(g.graph, constant_charge(n, 4), wit, la, ch);
        CHECK(validate_coloring(g.graph, col, &la));
    }
}

TEST_CASE("validate_coloring rejects bad colorings") {
    auto c4 = gen_cycle(4).graph;
    Coloring ok{{0, 1, 0, 1}};
    CHECK(validate_coloring(c4, ok));
    Coloring clash{{0, 0, 1, 1}};
    CHECK(!validate_coloring(c4, clash));
    ListAssignment la = ListAssignment::palette(4, 2);
    Coloring outside{{0, 1, 0, 5}};
    CHECK(!validate_coloring(c4, outside, &la));
    Coloring partial{{0, 1, 0, -1}};
    CHECK(!validate_coloring(c4, partial));
}

TEST_CASE("list-size precondition is enforced") {
    auto k2 = SimpleGraph::from_edges(2, {{0, 1}});
    Witness w{{0, 1}, {1, kBlank}};
    ListAssignment tiny;
    tiny.lists = {{1}, {1}};
    CHECK_THROWS_AS(color_from_witness(k2, {1, 0}, w, tiny), Error);
}
