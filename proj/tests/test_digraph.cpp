#include <stdexcept>

#include "digdef/digraph.hpp"
#include "doctest.h"

using digdef::Digraph;

TEST_CASE("construction and edge bookkeeping") {
    Digraph g(3, {{0, 1}, {1, 2}, {2, 2}});
    CHECK(g.n() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.loop_count() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(1, 0));
    CHECK(g.has_loop(2));
    CHECK(g.out_degree(1) == 1);
    CHECK(g.in_degree(2) == 2);

    g.remove_edge(2, 2);
    CHECK(g.loop_count() == 0);
    CHECK(g.edge_count() == 2);

    CHECK_THROWS_AS(Digraph(0), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("edges are sorted pairs") {
    Digraph g(3, {{2, 0}, {0, 2}, {1, 1}});
    auto e = g.edges();
    REQUIRE(e.size() == 3);
    CHECK(e[0] == std::pair<int, int>(0, 2));
    CHECK(e[1] == std::pair<int, int>(1, 1));
    CHECK(e[2] == std::pair<int, int>(2, 0));
}

TEST_CASE("parse/format round trip") {
    std::string text = "# a comment\n3\n1 2\n3 3\n";
    Digraph g = digdef::parse_digraph(text);
    CHECK(g.n() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_loop(2));
    Digraph again = digdef::parse_digraph(digdef::format_digraph(g));
    CHECK(again == g);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        digdef::parse_digraph("2\n1 2\n5 1\n");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
    CHECK_THROWS_AS(digdef::parse_digraph(""), std::invalid_argument);
    CHECK_THROWS_AS(digdef::parse_digraph("x\n"), std::invalid_argument);
}

TEST_CASE("transpose, union, loop closure") {
    Digraph g(2, {{0, 1}, {0, 0}});
    Digraph t = digdef::transpose(g);
    CHECK(t.has_edge(1, 0));
    CHECK(t.has_loop(0));
    CHECK(digdef::transpose(t) == g);

    Digraph h(1, {{0, 0}});
    Digraph u = digdef::disjoint_union(g, h);
    CHECK(u.n() == 3);
    CHECK(u.has_edge(0, 1));
    CHECK(u.has_loop(2));
    CHECK(u.edge_count() == g.edge_count() + h.edge_count());

    Digraph sat = digdef::saturate_loops(g);
    CHECK(sat.loop_count() == 2);
    Digraph stripped = digdef::strip_loops(sat);
    CHECK(stripped.loop_count() == 0);
    CHECK(stripped.has_edge(0, 1));
}

TEST_CASE("induced and relabeled") {
    Digraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 3}});
    Digraph sub = g.induced({1, 2, 3});
    CHECK(sub.n() == 3);
    CHECK(sub.has_edge(0, 1));  // old (1,2)
    CHECK(sub.has_loop(2));
    CHECK(!sub.has_edge(2, 0));

    Digraph r = g.relabeled({3, 2, 1, 0});
    CHECK(r.has_edge(3, 2));  // old (0,1)
    CHECK(r.has_loop(0));     // old (3,3)
}

TEST_CASE("DOT output marks loops") {
    Digraph g(2, {{0, 1}, {1, 1}});
    std::string dot = digdef::to_dot(g, "X");
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("X") != std::string::npos);
    // the loop edge is rendered differently from the plain edge
    CHECK(dot.find("color") != std::string::npos);
}
