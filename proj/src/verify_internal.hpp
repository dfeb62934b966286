// Shared declarations for the verifier's two independent halves. The
// "formulas" half transcribes each first-order defining condition and may
// only look at the order data of a Universe (leq, covers, the counting
// relations) plus constructed constant digraphs. The "oracles" half decides
// the same properties structurally, straight from adjacency, with its own
// embedding and isomorphism routines. Neither half may call the other.
#ifndef DIGDEF_VERIFY_INTERNAL_HPP
#define DIGDEF_VERIFY_INTERNAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "digdef/digraph.hpp"
#include "digdef/universe.hpp"

namespace digdef {
namespace verify {

namespace formulas {

// --- universe mode: sets/relations of type indices -----------------------

std::vector<char> e_set(const Universe& u);
std::vector<char> l_set(const Universe& u, std::uint64_t& caveats);
std::vector<std::pair<int, int>> le_rel(const Universe& u, std::uint64_t& caveats);

std::vector<char> h_set(const Universe& u);  // cycles plus optional point
std::vector<char> o_set(const Universe& u);
std::vector<char> o_union_set(const Universe& u);
std::vector<std::pair<int, int>> on_en_rel(const Universe& u, std::uint64_t& caveats);

std::vector<char> f_set(const Universe& u);
std::vector<std::pair<int, int>> fn_en_rel(const Universe& u, std::uint64_t& caveats);
std::vector<std::pair<int, int>> m_rel(const Universe& u);
BitMatrix frak_m_formula(const Universe& u);
std::vector<std::pair<int, int>> l_of_rel(const Universe& u);

std::vector<std::array<int, 3>> eplus_formula(const Universe& u,
                                              std::uint64_t& caveats);
std::vector<std::pair<int, int>> interval_formula(const Universe& u,
                                                  std::uint64_t& caveats);
std::vector<std::pair<int, int>> ostar_formula(const Universe& u,
                                               std::uint64_t& caveats);
std::vector<std::pair<int, int>> oarrow_formula(const Universe& u);
std::vector<std::pair<int, int>> male_rel(const Universe& u, std::uint64_t& caveats);
std::vector<std::pair<int, int>> onl_rel(const Universe& u, std::uint64_t& caveats);
std::vector<std::pair<int, int>> male_l_rel(const Universe& u,
                                            std::uint64_t& caveats);
std::vector<std::pair<int, int>> onlstar_rel(const Universe& u,
                                             std::uint64_t& caveats);
std::vector<std::array<int, 3>> oij_rel(const Universe& u, std::uint64_t& caveats);
std::vector<std::pair<int, int>> oii_rel(const Universe& u);

// --- explicit mode: conditions evaluated on constructed digraphs ---------

/// Loop-addition condition (the right-hand side of the biconditional): some
/// loop-extension of g admits no matching loop-extension of gp ⊔ O_n^*.
bool loop_addition_rhs(const Digraph& g, const Digraph& gp, int n);

/// Accepted candidates for "g ⊔ O_n^*": canonical keys of every Y in the
/// loop-placement family around M(g) ⊔ O_n^* that passes all conditions.
std::vector<std::string> gplus_ostar_accepted(const Digraph& g,
                                              std::uint64_t& caveats);

/// Accepted candidates for the anchored family of g: canonical keys of
/// every Y passing the two-stage conditions.
std::vector<std::string> anchored_accepted(const Digraph& g, std::uint64_t& caveats);

/// The five bullet conditions on a candidate for F_alpha(n,m).
bool falpha_bullets(const Digraph& x, int n, int m, std::string* failed_clause);

/// Identity condition: O_{i->j} embeddable only with i = j.
bool identity_condition(const Digraph& f, int n);

/// Composition transport condition on a triple of function gadgets.
bool compose_condition(const Digraph& f1, const Digraph& f2, const Digraph& f3,
                       int n, int m, int l);

/// The morphism membership bullets for anchored objects x (size n) and y
/// (size m) joined by the function gadget f (assumed shaped F_alpha(n,m)).
bool hom_bullets(const Digraph& x, const Digraph& f, const Digraph& y, int n, int m);

}  // namespace formulas

namespace oracles {

// Structural decisions straight from adjacency; private embedding search.
bool embeddable(const Digraph& g, const Digraph& h);
bool iso(const Digraph& a, const Digraph& b);

bool no_edges(const Digraph& d);
bool all_loops_only(const Digraph& d);
bool cycles_only(const Digraph& d);        // every wcc a plain cycle
bool single_cycle(const Digraph& d);
bool is_full(const Digraph& d);
Digraph strip(const Digraph& d);
Digraph saturate(const Digraph& d);
bool strip_is_path(const Digraph& d);      // loop-stripped digraph is some I_m
int wcc_count(const Digraph& d);
std::vector<std::vector<int>> wcc_vertices(const Digraph& d);

/// The language constants, built from hand-written edge lists.
std::vector<std::pair<std::string, Digraph>> expected_constants();

/// Is alpha (0-based) a homomorphism g -> h once the vertices of g and h
/// are relabeled by the orders v and w (label i stands for vertex v[i])?
bool relabeled_hom(const Digraph& g, const std::vector<int>& v,
                   const std::vector<int>& alpha, const Digraph& h,
                   const std::vector<int>& w);

}  // namespace oracles

}  // namespace verify
}  // namespace digdef

#endif
