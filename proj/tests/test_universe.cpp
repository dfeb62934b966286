#include <cstdio>
#include <stdexcept>

#include "digdef/embed.hpp"
#include "digdef/gadgets.hpp"
#include "digdef/universe.hpp"
#include "doctest.h"
#include "oracles.hpp"

using digdef::Digraph;
using digdef::Universe;
namespace gadgets = digdef::gadgets;

namespace {
const Universe& u3() {
    static Universe u = digdef::enumerate_universe(3);
    return u;
}
}  // namespace

TEST_CASE("type counts match the counting oracle") {
    const Universe& u = u3();
    CHECK(u.bound == 3);
    CHECK(u.type_count_for(1) == 2);
    CHECK(u.type_count_for(2) == 10);
    CHECK(u.type_count_for(3) == 104);
    CHECK(static_cast<int>(u.types.size()) == 116);
    for (int n = 1; n <= 3; ++n)
        CHECK(u.type_count_for(n) == static_cast<int>(oracles::burnside_type_count(n)));
}

TEST_CASE("per-type bookkeeping is consistent") {
    const Universe& u = u3();
    for (std::size_t i = 0; i < u.types.size(); ++i) {
        const Digraph& g = u.types[i].canonical;
        CHECK(u.vertex_count[i] == g.n());
        CHECK(u.loops[i] == g.loop_count());
        int s = u.strip_index[i];
        CHECK(digdef::isomorphic(u.types[s].canonical, digdef::strip_loops(g)));
        CHECK(u.index_by_key.at(u.types[i].key) == static_cast<int>(i));
    }
    // types are ordered by vertex count
    for (std::size_t i = 1; i < u.types.size(); ++i)
        CHECK(u.vertex_count[i - 1] <= u.vertex_count[i]);
}

TEST_CASE("the order is a partial order with exact covers") {
    const Universe& u = u3();
    int m = static_cast<int>(u.types.size());
    for (int i = 0; i < m; ++i) {
        CHECK(u.leq_at(i, i));
        for (int j = 0; j < m; ++j) {
            if (i != j)
                CHECK(!(u.leq_at(i, j) && u.leq_at(j, i)));
            if (u.covers_at(i, j)) {
                CHECK(u.lt(i, j));
                for (int k = 0; k < m; ++k)
                    CHECK(!(u.lt(i, k) && u.lt(k, j)));
            }
        }
    }
    // transitivity on a sample: every (i,j),(j,k) chain with small indices
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (u.leq_at(i, j))
                for (int k = 0; k < m; ++k)
                    if (u.leq_at(j, k))
                        CHECK(u.leq_at(i, k));
}

TEST_CASE("order entries agree with the embedding search") {
    const Universe& u = u3();
    // sample: every pair where either side has at most 2 vertices
    for (std::size_t i = 0; i < u.types.size(); ++i)
        for (std::size_t j = 0; j < u.types.size(); ++j) {
            if (u.vertex_count[i] > 2 && u.vertex_count[j] > 2)
                continue;
            CHECK(u.leq_at(static_cast<int>(i), static_cast<int>(j)) ==
                  digdef::is_embeddable(u.types[i].canonical, u.types[j].canonical));
        }
}

TEST_CASE("find / require / named indices") {
    const Universe& u = u3();
    auto idx = u.find(gadgets::cycle_graph(3));
    REQUIRE(idx.has_value());
    CHECK(digdef::isomorphic(u.types[*idx].canonical, gadgets::cycle_graph(3)));
    CHECK(!u.find(gadgets::cycle_graph(4)).has_value());
    CHECK_THROWS_AS(u.require(gadgets::cycle_graph(4)), std::invalid_argument);

    for (int n = 1; n <= 3; ++n) {
        CHECK(u.types[u.empty_index(n)].canonical == gadgets::empty_graph(n));
        CHECK(u.types[u.all_loops_index(n)].canonical == gadgets::loops_graph(n));
        CHECK(u.vertex_count_pair(u.all_loops_index(n), u.empty_index(n)));
        CHECK(u.loop_count_pair(u.empty_index(n), u.all_loops_index(n)) == (n == 0));
    }
    int l2 = u.all_loops_index(2);
    CHECK(u.loop_count_pair(l2, l2));
}

TEST_CASE("transpose is an order automorphism") {
    const Universe& u = u3();
    std::vector<int> tr(u.types.size());
    for (std::size_t i = 0; i < u.types.size(); ++i)
        tr[i] = u.require(digdef::transpose(u.types[i].canonical));
    for (std::size_t i = 0; i < u.types.size(); ++i) {
        CHECK(tr[tr[i]] == static_cast<int>(i));
        for (std::size_t j = 0; j < u.types.size(); ++j)
            CHECK(u.leq_at(static_cast<int>(i), static_cast<int>(j)) ==
                  u.leq_at(tr[i], tr[j]));
    }
}

TEST_CASE("save/load round trip") {
    Universe u = digdef::enumerate_universe(2);
    std::string path = "u_roundtrip_test.bin";
    digdef::save_universe(u, path);
    Universe back = digdef::load_universe(path);
    CHECK(back.bound == u.bound);
    REQUIRE(back.types.size() == u.types.size());
    for (std::size_t i = 0; i < u.types.size(); ++i) {
        CHECK(back.types[i].key == u.types[i].key);
        CHECK(back.types[i].canonical == u.types[i].canonical);
        for (std::size_t j = 0; j < u.types.size(); ++j) {
            CHECK(back.leq_at(static_cast<int>(i), static_cast<int>(j)) ==
                  u.leq_at(static_cast<int>(i), static_cast<int>(j)));
            CHECK(back.covers_at(static_cast<int>(i), static_cast<int>(j)) ==
                  u.covers_at(static_cast<int>(i), static_cast<int>(j)));
        }
    }
    std::remove(path.c_str());
    CHECK_THROWS(digdef::load_universe("no_such_file.bin"));
}

TEST_CASE("thread count does not change the result") {
    Universe a = digdef::enumerate_universe(3, 1);
    Universe b = digdef::enumerate_universe(3, 2);
    REQUIRE(a.types.size() == b.types.size());
    CHECK(a.leq.words() == b.leq.words());
    CHECK(a.covers.words() == b.covers.words());
}

TEST_CASE("extremal_with and the bound caveat") {
    const Universe& u = u3();
    // maximal loop-free types: exactly the loop-free 3-vertex maxima, and the
    // caveat fires because they touch the bound
    auto res = digdef::extremal_with(
        u, [&](int t) { return u.loops[t] == 0; }, digdef::ExtremalMode::maximal);
    CHECK(!res.elems.empty());
    CHECK(res.bound_caveat);
    for (int t : res.elems)
        CHECK(u.vertex_count[t] == 3);

    // E_1 embeds into everything (no edges to carry), so it is the unique
    // minimum of the whole order
    auto mins = digdef::extremal_with(
        u, [&](int t) { return true; }, digdef::ExtremalMode::minimal);
    REQUIRE(mins.elems.size() == 1);
    CHECK(mins.elems[0] == u.empty_index(1));
    CHECK(!mins.bound_caveat);
}

TEST_CASE("derived index relations") {
    const Universe& u = u3();
    auto plus = digdef::frak_e_plus(u);
    // (1,1,2), (1,2,3), (2,1,3)
    CHECK(plus.size() == 3);
    for (const auto& t : plus)
        CHECK(u.vertex_count[t[0]] + u.vertex_count[t[1]] == u.vertex_count[t[2]]);
    auto interval = digdef::interval_relation(u);
    // (1,2), (2,3)
    CHECK(interval.size() == 2);
    for (const auto& p : interval) {
        CHECK(u.vertex_count[p[0]] < u.vertex_count[p[1]]);
        CHECK(u.vertex_count[p[1]] <= 2 * u.vertex_count[p[0]]);
    }
}

TEST_CASE("hasse_dot renders the selected sub-poset") {
    const Universe& u = u3();
    std::string dot =
        digdef::hasse_dot(u, [&](int t) { return u.vertex_count[t] <= 2; });
    CHECK(dot.find("digraph") != std::string::npos);
    // 12 nodes; at least one cover edge (E_1 below E_2)
    CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("invalid bounds are rejected") {
    CHECK_THROWS_AS(digdef::enumerate_universe(0), std::invalid_argument);
    CHECK_THROWS_AS(digdef::enumerate_universe(6), std::invalid_argument);
}
