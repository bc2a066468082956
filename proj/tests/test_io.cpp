#include <sstream>

#include "doctest.h"
#include "wd/gen.hpp"
#include "wd/io.hpp"

using namespace wd;

TEST_CASE("sg round trip and line-numbered rejection") {
    auto g = gen_petersen();
    std::ostringstream out;
    write_sg(out, g, "# petersen");
    std::istringstream in(out.str());
    CHECK(read_sg(in) == g);

    auto fails = [](const std::string& text) {
        std::istringstream is(text);
        try {
            read_sg(is);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(fails("2 1\n1 0\n") == 2);       // u >= v
    CHECK(fails("2 2\n0 1\n0 1\n") == 3);  // duplicate edge
    CHECK(fails("2 1\n0 2\n") == 2);       // out of range
    CHECK(fails("junk\n") == 1);
    CHECK(fails("1 0\n0 0\n") == 2);       // trailing content
}

TEST_CASE("pg round trip preserves the embedding bit for bit") {
    for (const PlaneGraph& g : {gen_wheel(6), gen_apollonian(12, 4), gen_icosahedron()}) {
        std::ostringstream out;
        write_pg(out, g);
        std::istringstream in(out.str());
        auto h = read_pg(in);
        CHECK(h.graph == g.graph);
        CHECK(h.rotation == g.rotation);
        CHECK(h.outer == g.outer);
        std::ostringstream out2;
        write_pg(out2, h);
        CHECK(out.str() == out2.str());
    }
}

TEST_CASE("pg: invariant violations are rejected with line numbers") {
    auto fails = [](const std::string& text) {
        std::istringstream is(text);
        try {
            read_pg(is);
        } catch (const ParseError&) {
            return true;
        }
        return false;
    };
    // asymmetric rotation
    CHECK(fails("2\n0: 1\n1:\nouter: 0 1\n"));
    // outer walk is not a face of the embedding
    CHECK(fails("3\n0: 1 2\n1: 2 0\n2: 0 1\nouter: 0 2 1 0 1 2\n"));
    // non-planar rotation system: K5 has none
    std::string k5 = "5\n";
    for (int v = 0; v < 5; ++v) {
        k5 += std::to_string(v) + ":";
        for (int w = 0; w < 5; ++w)
            if (w != v) k5 += " " + std::to_string(w);
        k5 += "\n";
    }
    k5 += "outer: 0 1 2 3 4\n";
    CHECK(fails(k5));
    // missing outer
    CHECK(fails("2\n0: 1\n1: 0\n"));
}

TEST_CASE("wit round trip") {
    Witness w{{0, 3}, {1, kBlank}, {2, kBlank}, {3, kBlank}};
    std::ostringstream out;
    write_wit(out, w, "# test");
    CHECK(out.str() == "# test\nsave 0 3\ndel 1\ndel 2\ndel 3\n");
    std::istringstream in(out.str());
    CHECK(read_wit(in) == w);
}

TEST_CASE("lst round trip and missing vertex") {
    ListAssignment la;
    la.lists = {{0, 2, 5}, {1}, {3, 4}};
    std::ostringstream out;
    write_lst(out, la);
    std::istringstream in(out.str());
    auto back = read_lst(in, 3);
    CHECK(back.lists == la.lists);
    std::istringstream bad("0: 1\n1: 2\n");
    CHECK_THROWS_AS(read_lst(bad, 3), ParseError);
}

TEST_CASE("dot export mentions shapes and deletion order") {
    auto g = gen_cycle(4).graph;
    Witness w{{2, kBlank}, {3, kBlank}, {0, kBlank}, {1, kBlank}};
    std::ostringstream out;
    write_dot(out, g, {0}, {2}, &w);
    auto s = out.str();
    CHECK(s.find("shape=box") != std::string::npos);
    CHECK(s.find("fillcolor=black") != std::string::npos);
    CHECK(s.find("0 -- 1") != std::string::npos);
    CHECK(s.find("#0") != std::string::npos);
}
