#ifndef DIGDEF_GADGETS_HPP
#define DIGDEF_GADGETS_HPP

#include <string>
#include <vector>

#include "digdef/canonical.hpp"
#include "digdef/digraph.hpp"

namespace digdef {
namespace gadgets {

// Basic families. All constructors are deterministic labeled digraphs;
// vertex 0 is the distinguished vertex of each family (cycle start, loop
// carrier, first path vertex).

Digraph empty_graph(int n);              // E_n
Digraph full_graph(int n);               // F_n, all n^2 edges
Digraph path_graph(int n);               // I_n, edges i -> i+1
Digraph cycle_graph(int n);              // O_n, n >= 2
Digraph loops_graph(int n);              // L_n, loop on every vertex
Digraph cycle_loop(int n);               // O_{n,L}: O_n plus loop at vertex 0

/// All non-isomorphic results of adding one new non-loop edge to O_n.
std::vector<IsoClass> cycle_extensions(int n);

Digraph cycle_to_cycle(int i, int j);    // O_i and O_j joined by one edge
Digraph cycle_pair(int i);               // O_i disjoint O_i

Digraph flag(int n);                     // cycle with a pendant tip, n >= 2
Digraph flag_loop(int n);                // same plus loop on the tip
Digraph flag_pair_loop(int i, int j);    // two cycles feeding one looped vertex
Digraph flag_to_flag(int i, int j);      // flag(i) tip -> flag(j) tip
Digraph flag_loop_to_flag_loop(int i, int j);
Digraph flag_loop_arrow(int i);          // flag_loop(i) with an extra looped sink

Digraph o_star(int n);                   // cycles of lengths n+1 .. 2n
Digraph o_l_star(int n);                 // the same with a loop on each anchor

/// Global vertex index of the anchor (first vertex) of the cycle of length
/// n + block (block is 1-based) inside o_star(n) / o_l_star(n).
int star_anchor(int n, int block);

/// Total vertex count of o_star(n): n^2 + n(n+1)/2.
int star_size(int n);

/// The function gadget: o_star(n), o_l_star(m), plus one edge from each
/// plain anchor to the looped anchor selected by alpha (0-based, size n,
/// values in [0, m)).
Digraph f_alpha(int n, int m, const std::vector<int>& alpha);

/// G with o_star(n(G)) attached: one edge from each cycle anchor to the
/// vertex order[i]. order must be a permutation of the vertices of g.
Digraph anchored(const Digraph& g, const std::vector<int>& order);

Digraph const_a();          // 3 vertices, edges (1,3),(2,3) in 1-based terms
Digraph const_a_transpose();
Digraph const_i_double();   // 2 vertices, edge plus both loops
Digraph const_i_star();     // 3 vertices, chain with loops on the last two
Digraph f_star(int j);      // loopless full digraph plus one loop

/// Parses the compact CLI gadget grammar, e.g. "O:5", "Ostar:3", "male_L:4",
/// "Falpha:2,3:[1,2]". Returns one or more labeled digraphs ("Oarrow:n"
/// yields the whole deduplicated set). Throws std::invalid_argument with a
/// description on bad specs.
std::vector<Digraph> make_from_spec(const std::string& spec);

/// Names accepted by make_from_spec, for help output.
std::vector<std::string> spec_names();

}  // namespace gadgets
}  // namespace digdef

#endif
