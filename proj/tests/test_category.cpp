#include <stdexcept>

#include "digdef/canonical.hpp"
#include "digdef/category.hpp"
#include "digdef/components.hpp"
#include "digdef/gadgets.hpp"
#include "doctest.h"
#include "oracles.hpp"

using digdef::Digraph;
namespace cat = digdef::category;
namespace gadgets = digdef::gadgets;

TEST_CASE("hom counts and validity") {
    Digraph e1 = cat::const_e1();
    Digraph i2 = cat::const_i2();
    CHECK(cat::hom(e1, e1).size() == 1);
    CHECK(cat::hom(e1, i2).size() == 2);
    CHECK(cat::hom(i2, i2).size() == 1);
    CHECK(cat::hom(i2, gadgets::full_graph(2)).size() == 4);
    CHECK(cat::hom(gadgets::loops_graph(1), i2).empty());
    for (const auto& f : cat::hom(gadgets::cycle_graph(3), gadgets::cycle_graph(3)))
        CHECK(cat::is_valid_morphism(f));
    // lexicographic order of the map vectors
    auto fs = cat::hom(e1, gadgets::empty_graph(3));
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].map == std::vector<int>{0});
    CHECK(fs[2].map == std::vector<int>{2});
}

TEST_CASE("identity and composition laws") {
    Digraph a = gadgets::path_graph(2);
    Digraph b = gadgets::full_graph(2);
    Digraph c = gadgets::loops_graph(2);
    for (const auto& f : cat::hom(a, b)) {
        CHECK(cat::compose(cat::identity(a), f) == f);
        CHECK(cat::compose(f, cat::identity(b)) == f);
        for (const auto& g : cat::hom(b, c)) {
            auto fg = cat::compose(f, g);
            CHECK(cat::is_valid_morphism(fg));
            for (const auto& h : cat::hom(c, c))
                CHECK(cat::compose(cat::compose(f, g), h) ==
                      cat::compose(f, cat::compose(g, h)));
        }
    }
    CHECK_THROWS_AS(cat::compose(cat::identity(a), cat::identity(c)),
                    std::invalid_argument);
}

TEST_CASE("constants f1, f2 pick the arrow endpoints") {
    auto f1 = cat::const_f1();
    auto f2 = cat::const_f2();
    CHECK(cat::is_valid_morphism(f1));
    CHECK(cat::is_valid_morphism(f2));
    CHECK(f1.source == cat::const_e1());
    CHECK(f1.target == cat::const_i2());
    CHECK(f1.map != f2.map);
}

TEST_CASE("mono/epi: direct and categorical agree on small objects") {
    std::vector<Digraph> objs = {cat::const_e1(), cat::const_i2(),
                                 gadgets::empty_graph(2), gadgets::loops_graph(1),
                                 gadgets::full_graph(2)};
    for (const auto& a : objs)
        for (const auto& b : objs)
            for (const auto& f : cat::hom(a, b)) {
                CHECK(cat::is_mono_direct(f) == cat::is_mono_categorical(f));
                CHECK(cat::is_epi_direct(f) == cat::is_epi_categorical(f));
            }
}

TEST_CASE("reconstruct recovers the object up to isomorphism") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& g : oracles::all_types(n))
            CHECK(digdef::isomorphic(cat::reconstruct(g), g));
}

TEST_CASE("object encode/decode round trip on every order") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& g : oracles::all_types(n)) {
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            do {
                auto enc = cat::encode_object(g, order);
                CHECK(enc.plain == g);
                auto dec = cat::decode_object(enc.encoded);
                CHECK(dec.plain == g);
                CHECK(dec.order == order);
                CHECK(dec.encoded == enc.encoded);
            } while (std::next_permutation(order.begin(), order.end()));
        }
    CHECK_THROWS_AS(cat::decode_object(gadgets::cycle_graph(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(cat::encode_object(gadgets::cycle_graph(3), {0, 0, 1}),
                    std::invalid_argument);
}

TEST_CASE("morphism encoding satisfies the membership conditions") {
    Digraph a = gadgets::path_graph(2);
    Digraph b = gadgets::full_graph(2);
    auto src = cat::encode_object(a, {0, 1});
    auto dst = cat::encode_object(b, {1, 0});
    for (const auto& f : cat::hom(a, b)) {
        Digraph gadget = cat::encode_morphism(src, f.map, dst);
        CHECK(cat::morphism_conditions_hold(src.encoded, gadget, dst.encoded,
                                            a.n(), b.n()));
    }
    // a non-homomorphism must be rejected by the encoder
    CHECK_THROWS_AS(
        cat::encode_morphism(cat::encode_object(gadgets::loops_graph(1), {0}),
                             {0}, cat::encode_object(gadgets::empty_graph(1), {0})),
        std::invalid_argument);
}

TEST_CASE("subset representation") {
    Digraph g = gadgets::path_graph(3);
    auto rep = cat::represent_subset(g, {0, 2});
    CHECK(cat::subset_contains(rep, 0));
    CHECK(!cat::subset_contains(rep, 1));
    CHECK(cat::subset_contains(rep, 2));
    auto empty = cat::represent_subset(g, {});
    for (int v = 0; v < 3; ++v)
        CHECK(!cat::subset_contains(empty, v));
}

TEST_CASE("relation representation") {
    Digraph g = gadgets::path_graph(2);
    Digraph h = gadgets::empty_graph(3);
    auto rep = cat::represent_relation({g, h}, {{0, 1}, {1, 2}});
    CHECK(cat::relation_contains(rep, {0, 1}));
    CHECK(cat::relation_contains(rep, {1, 2}));
    CHECK(!cat::relation_contains(rep, {0, 2}));
    CHECK(!cat::relation_contains(rep, {1, 0}));
    auto empty = cat::represent_relation({g, h}, {});
    CHECK(!cat::relation_contains(empty, {0, 0}));
    CHECK_THROWS_AS(cat::represent_relation({g, h}, {{0, 1}, {0, 1}}),
                    std::invalid_argument);
}

TEST_CASE("second-order disconnectedness matches the component count") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& g : oracles::all_types(n))
            CHECK(cat::so_not_weakly_connected(g) ==
                  (digdef::wccs(g).components.size() > 1));
}

TEST_CASE("morphism JSON shape") {
    auto f = cat::const_f1();
    std::string j = cat::morphism_to_json(f);
    CHECK(j.find("\"src\"") != std::string::npos);
    CHECK(j.find("\"map\"") != std::string::npos);
    CHECK(j.find("\"dst\"") != std::string::npos);
}
