#ifndef DIGDEF_COMPONENTS_HPP
#define DIGDEF_COMPONENTS_HPP

#include <vector>

#include "digdef/canonical.hpp"
#include "digdef/digraph.hpp"

namespace digdef {

/// One weakly connected component: its vertex subset of the parent graph and
/// the isomorphism type of the induced subgraph.
struct WccComponent {
    std::vector<int> vertices;  // sorted, parent labels
    IsoClass iso;
};

struct WccDecomposition {
    std::vector<WccComponent> components;

    /// Component types as a sorted multiset of canonical keys.
    std::vector<std::string> key_multiset() const;
};

WccDecomposition wccs(const Digraph& g);

/// G == G' after stripping loops (the relation written with a triple bar in
/// the source material's notation family: equality of loop-stripped types).
bool equiv_m(const Digraph& g, const Digraph& h);

/// Embeddability of the loop-stripped digraphs.
bool sqsubseteq(const Digraph& g, const Digraph& h);
bool sqsubset(const Digraph& g, const Digraph& h);

/// The components of g whose loop-stripped type equals that of c.
std::vector<WccComponent> equiv_components(const Digraph& g, const Digraph& c);

/// Largest common sub-multiset of whole components, and what remains of each
/// side. Empty remainders are legal here even though the empty digraph is not
/// a value: remainders are multisets of component types.
struct ReducedSubgraphs {
    std::vector<IsoClass> common;
    std::vector<IsoClass> g_rest;
    std::vector<IsoClass> h_rest;
};

ReducedSubgraphs reduced_subgraphs(const Digraph& g, const Digraph& h);

/// Disjoint union of the given component types, in order. Rejects an empty
/// list (no empty digraph).
Digraph assemble(const std::vector<IsoClass>& parts);

}  // namespace digdef

#endif
