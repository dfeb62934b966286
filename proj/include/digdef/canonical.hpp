#ifndef DIGDEF_CANONICAL_HPP
#define DIGDEF_CANONICAL_HPP

#include <string>
#include <vector>

#include "digdef/digraph.hpp"

namespace digdef {

/// Canonical representative of an isomorphism type. Two digraphs have equal
/// keys iff they are isomorphic; the canonical form of a canonical form is
/// itself.
struct IsoClass {
    Digraph canonical;
    std::string key;  // vertex count + packed canonical adjacency bits

    bool operator==(const IsoClass& other) const { return key == other.key; }
    bool operator!=(const IsoClass& other) const { return key != other.key; }
    bool operator<(const IsoClass& other) const { return key < other.key; }
};

/// Canonical labeling. Up to 8 vertices this is the exact lexicographic
/// minimum of the row-major adjacency bit string over all vertex
/// permutations; above that a degree-partition refinement search is used
/// (still a total canonical form, selected per vertex count, so keys stay
/// comparable).
IsoClass canonicalize(const Digraph& g);

/// Canonical key as "n:<lowercase hex of padded bit string>".
std::string key_hex(const IsoClass& cls);

bool isomorphic(const Digraph& g, const Digraph& h);

}  // namespace digdef

#endif
