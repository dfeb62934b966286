#ifndef DIGDEF_EMBED_HPP
#define DIGDEF_EMBED_HPP

#include <functional>
#include <optional>
#include <vector>

#include "digdef/digraph.hpp"

namespace digdef {

/// Witness of G <= H: an injective edge-preserving map from the vertices of
/// the source into the target.
struct Embedding {
    Digraph source;
    Digraph target;
    std::vector<int> map;  // map[u] is the image of source vertex u
};

/// Backtracking search for an injective homomorphism g -> h, pruning on
/// out/in-degree and loop compatibility. Total; returns the first witness in
/// a deterministic order or nothing.
std::optional<Embedding> find_embedding(const Digraph& g, const Digraph& h);

bool is_embeddable(const Digraph& g, const Digraph& h);

/// Visits every injective homomorphism g -> h. The callback returns false to
/// stop early.
void for_each_embedding(const Digraph& g, const Digraph& h,
                        const std::function<bool(const std::vector<int>&)>& visit);

/// Validates that map is an injective homomorphism g -> h.
bool is_valid_embedding(const Digraph& g, const Digraph& h, const std::vector<int>& map);

}  // namespace digdef

#endif
