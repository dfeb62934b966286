#ifndef DIGDEF_CATEGORY_HPP
#define DIGDEF_CATEGORY_HPP

#include <optional>
#include <string>
#include <vector>

#include "digdef/digraph.hpp"

namespace digdef {
namespace category {

/// A morphism (A, alpha, B): alpha is a total map on vertex labels that
/// carries every edge of A to an edge of B. Equality is componentwise and
/// labeled, not up to isomorphism.
struct MorphismTriple {
    Digraph source;
    std::vector<int> map;  // map[x] = image of vertex x, 0-based
    Digraph target;

    bool operator==(const MorphismTriple& other) const {
        return source == other.source && map == other.map && target == other.target;
    }
    bool operator!=(const MorphismTriple& other) const { return !(*this == other); }
};

/// True when map is total into the target and carries edges to edges.
bool is_valid_morphism(const MorphismTriple& f);

MorphismTriple identity(const Digraph& a);

/// fg = (A, beta . alpha, C); throws std::invalid_argument unless
/// target(f) == source(g) as labeled digraphs.
MorphismTriple compose(const MorphismTriple& f, const MorphismTriple& g);

/// Every morphism A -> B, ordered lexicographically by the map vector.
std::vector<MorphismTriple> hom(const Digraph& a, const Digraph& b);

// The four constants: the one-vertex empty digraph, the single arrow, and
// the two ways to pick an endpoint of the arrow.
Digraph const_e1();
Digraph const_i2();
MorphismTriple const_f1();
MorphismTriple const_f2();

// Direct map properties.
bool is_mono_direct(const MorphismTriple& f);
bool is_epi_direct(const MorphismTriple& f);

// Cancellation properties quantified over every labeled digraph with at
// most max(n(source), n(target)) + 1 vertices. One extra vertex is enough:
// two maps that differ somewhere can already be told apart by test objects
// no larger than the participating objects, with E_1 and the two-element
// digraphs doing the real work in the cancellation argument.
bool is_mono_categorical(const MorphismTriple& f);
bool is_epi_categorical(const MorphismTriple& f);

/// Rebuilds a digraph from hom(E_1, X) with an edge (f, g) exactly when
/// some h in hom(I_2, X) has f_1 h = f and f_2 h = g. Isomorphic to X.
Digraph reconstruct(const Digraph& x);

/// A digraph object together with its anchored form: the plain digraph G on
/// [n], a permutation assigning each of the n attached cycles to a vertex,
/// and the digraph G with the cycle bundle attached.
struct ObjectEncoding {
    Digraph plain;
    std::vector<int> order;  // order[i] receives the anchor of the (n+i+1)-cycle
    Digraph encoded;
};

/// Attaches the cycle bundle to g; order must be a permutation of [n(g)].
ObjectEncoding encode_object(const Digraph& g, const std::vector<int>& order);

/// Inverts encode_object. Accepts any labeling of the anchored shape; the
/// recovered plain part lists its vertices in increasing original label, so
/// decode is exact on encode_object's output. Throws std::invalid_argument
/// with a shape diagnosis otherwise.
ObjectEncoding decode_object(const Digraph& x);

/// The function gadget joining two anchored objects along alpha. Checks
/// that alpha is a homomorphism between the plain parts as relabeled by the
/// chosen orders; throws std::invalid_argument if not.
Digraph encode_morphism(const ObjectEncoding& src, const std::vector<int>& alpha,
                        const ObjectEncoding& dst);

/// The three membership conditions a triple (X, F, Y) of anchored objects
/// and a function gadget has to satisfy to count as a morphism between the
/// digraphs the anchored objects stand for. n and m are the plain sizes.
bool morphism_conditions_hold(const Digraph& x, const Digraph& f, const Digraph& y,
                              int n, int m);

/// A subset S of V(A) as the pair (E_|S|, p) where p injects the carrier
/// onto S. The empty subset has no carrier and fails every membership test.
struct SubsetRep {
    Digraph host;
    std::optional<MorphismTriple> p;
};

SubsetRep represent_subset(const Digraph& a, const std::vector<int>& s);
bool subset_contains(const SubsetRep& rep, int v);

/// A k-ary relation R over hosts A_1..A_k as (E_|R|, p_1..p_k) with p_i the
/// i-th projection. Tuples must be distinct. Empty R has no carrier.
struct RelationRep {
    std::vector<Digraph> hosts;
    std::optional<Digraph> carrier;
    std::vector<MorphismTriple> projections;
};

RelationRep represent_relation(const std::vector<Digraph>& hosts,
                               const std::vector<std::vector<int>>& tuples);
bool relation_contains(const RelationRep& rep, const std::vector<int>& tuple);

/// Evaluates "some subset H of G contains one vertex, misses another, and
/// no edge of G crosses the boundary of H", with H ranging over subset
/// representations. True exactly for digraphs with several weak components.
bool so_not_weakly_connected(const Digraph& g);

/// {"src": <text format>, "map": [1-based images], "dst": <text format>}
std::string morphism_to_json(const MorphismTriple& f);

}  // namespace category
}  // namespace digdef

#endif
