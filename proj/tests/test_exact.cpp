#include "doctest.h"
#include "wd/exact.hpp"
#include "wd/gen.hpp"
#include "wd/rng.hpp"

using namespace wd;

TEST_CASE("degeneracy: trees, cycles, icosahedron") {
    auto star = SimpleGraph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(degeneracy(star) == 1);
    auto path = gen_path(6).graph;
    CHECK(degeneracy(path) == 1);
    for (int n = 3; n <= 9; ++n) CHECK(degeneracy(gen_cycle(n).graph) == 2);
    CHECK(degeneracy(gen_icosahedron().graph) == 5);

    std::vector<VertexId> order;
    degeneracy(gen_icosahedron().graph, &order);
    CHECK(order.size() == 12);
}

TEST_CASE("weak search: spec examples") {
    auto k2 = SimpleGraph::from_edges(2, {{0, 1}});
    auto w = find_weak_witness(k2, {1, 0});
    REQUIRE(w.has_value());
    CHECK(verify(k2, {1, 0}, *w));

    auto c5 = gen_cycle(5).graph;
    CHECK(!is_weakly_degenerate(c5, constant_charge(5, 1)));
    CHECK(is_weakly_degenerate(c5, constant_charge(5, 2)));

    CHECK(is_weakly_degenerate(SimpleGraph(1), {0}));
}

TEST_CASE("strong search: spec examples") {
    auto p3 = gen_path(3).graph;
    CHECK(is_strongly_degenerate(p3, constant_charge(3, 1)));
    CHECK(!is_strongly_degenerate(gen_cycle(4).graph, constant_charge(4, 1)));
    SplitMix64 rng(5);
    for (int t = 0; t < 20; ++t) {
        auto g = gen_random_graph(6, rng.next(), 50);
        auto w = find_strong_witness(g, constant_charge(6, degeneracy(g)));
        REQUIRE(w.has_value());
        CHECK(verify(g, constant_charge(6, degeneracy(g)), *w));
    }
}

TEST_CASE("weak_degeneracy: cycles, cliques, Petersen") {
    for (int n = 3; n <= 10; ++n) CHECK(weak_degeneracy(gen_cycle(n).graph) == 2);
    for (int n = 2; n <= 6; ++n) CHECK(weak_degeneracy(gen_clique(n)) == n - 1);
    Witness w;
    auto pet = gen_petersen();
    CHECK(weak_degeneracy(pet, &w) == 2);
    CHECK(verify(pet, constant_charge(10, 2), w));
}

TEST_CASE("chromatic_number: C5, K4, Petersen") {
    CHECK(chromatic_number(gen_cycle(5).graph) == 3);
    CHECK(chromatic_number(gen_clique(4)) == 4);
    CHECK(chromatic_number(gen_petersen()) == 3);
}

TEST_CASE("random properties: wd <= d and chi <= wd + 1 and monotonicity") {
    SplitMix64 rng(424242);
    for (int t = 0; t < 120; ++t) {
        int n = 2 + static_cast<int>(rng.below(7));
        auto g = gen_random_graph(n, rng.next(), 30 + static_cast<int>(rng.below(50)));
        Witness w;
        int wd_val = weak_degeneracy(g, &w);
        CHECK(wd_val <= degeneracy(g));
        CHECK(chromatic_number(g) <= wd_val + 1);
        CHECK(verify(g, constant_charge(n, wd_val), w));
        if (wd_val > 0) CHECK(!is_weakly_degenerate(g, constant_charge(n, wd_val - 1)));
        CHECK(is_weakly_degenerate(g, constant_charge(n, wd_val + 1))); // Lemma 2.1
    }
}

TEST_CASE("differential: memoization and save pruning do not change verdicts") {
    SplitMix64 rng(909);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(rng.below(6));
        auto g = gen_random_graph(n, rng.next(), 50);
        ChargeFn f(static_cast<size_t>(n));
        for (auto& x : f) x = static_cast<int>(rng.below(4));
        bool base = is_weakly_degenerate(g, f, {true, true});
        CHECK(is_weakly_degenerate(g, f, {false, true}) == base);
        CHECK(is_weakly_degenerate(g, f, {true, false}) == base);
        CHECK(is_weakly_degenerate(g, f, {false, false}) == base);
    }
}

TEST_CASE("search size guard") {
    CHECK_THROWS_AS(find_weak_witness(SimpleGraph(65), constant_charge(65, 1)), SizeError);
}
