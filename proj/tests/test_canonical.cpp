#include <random>
#include <set>

#include "digdef/canonical.hpp"
#include "digdef/digraph.hpp"
#include "doctest.h"
#include "oracles.hpp"

using digdef::Digraph;

TEST_CASE("keys agree with brute-force minimization up to 3 vertices") {
    for (int n = 1; n <= 3; ++n) {
        std::set<std::string> keys, minstrings;
        oracles::for_each_labeled(n, [&](const Digraph& g) {
            digdef::IsoClass cls = digdef::canonicalize(g);
            // same partition: two labeled graphs share a key iff they share
            // the oracle's minimal bit string
            keys.insert(cls.key);
            minstrings.insert(oracles::min_bit_string(g));
            CHECK(digdef::canonicalize(cls.canonical).key == cls.key);
        });
        CHECK(keys.size() == minstrings.size());
    }
}

TEST_CASE("key equality is isomorphism on 3-vertex pairs") {
    auto types = oracles::all_types(3);
    for (const auto& a : types)
        for (const auto& b : types) {
            bool same_key =
                digdef::canonicalize(a).key == digdef::canonicalize(b).key;
            bool iso = a.n() == b.n() && a.edge_count() == b.edge_count() &&
                       oracles::embeddable(a, b) && oracles::embeddable(b, a);
            CHECK(same_key == iso);
        }
}

TEST_CASE("partition cross-validation on 6 and 7 vertices") {
    // random labeled digraphs relabeled by random permutations must keep
    // their key; this exercises the same code path as the small sizes but on
    // inputs where the permutation count is large
    std::mt19937 rng(12345);
    for (int n : {6, 7}) {
        for (int trial = 0; trial < 25; ++trial) {
            Digraph g(n);
            std::uniform_int_distribution<int> bit(0, 3);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (bit(rng) == 0)
                        g.add_edge(a, b);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(digdef::canonicalize(g).key ==
                  digdef::canonicalize(g.relabeled(perm)).key);
            CHECK(oracles::min_bit_string(g) ==
                  oracles::min_bit_string(g.relabeled(perm)));
        }
    }
}

TEST_CASE("refinement path above 8 vertices is a total invariant") {
    std::mt19937 rng(777);
    for (int n : {9, 10}) {
        for (int trial = 0; trial < 15; ++trial) {
            Digraph g(n);
            std::uniform_int_distribution<int> bit(0, 4);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (bit(rng) == 0)
                        g.add_edge(a, b);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            digdef::IsoClass cls = digdef::canonicalize(g);
            CHECK(cls.key == digdef::canonicalize(g.relabeled(perm)).key);
            CHECK(digdef::canonicalize(cls.canonical).key == cls.key);
            // different edge counts can never collide
            Digraph h = g;
            bool changed = false;
            for (int a = 0; a < n && !changed; ++a)
                for (int b = 0; b < n && !changed; ++b)
                    if (!h.has_edge(a, b)) {
                        h.add_edge(a, b);
                        changed = true;
                    }
            if (changed)
                CHECK(digdef::canonicalize(h).key != cls.key);
        }
    }
}

TEST_CASE("isomorphic() and key_hex") {
    Digraph a(3, {{0, 1}, {1, 2}});
    Digraph b(3, {{2, 0}, {0, 1}});
    CHECK(digdef::isomorphic(a, b));
    CHECK(!digdef::isomorphic(a, Digraph(3, {{0, 1}, {2, 1}})));
    std::string hex = digdef::key_hex(digdef::canonicalize(a));
    CHECK(hex.substr(0, 2) == "3:");
    CHECK(hex.find_first_not_of("0123456789abcdef", 2) == std::string::npos);
}
