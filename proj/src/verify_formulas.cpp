#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "digdef/canonical.hpp"
#include "digdef/embed.hpp"
#include "digdef/gadgets.hpp"
#include "verify_internal.hpp"

// First-order defining conditions, transcribed clause by clause. Universe
// mode works on type indices and consults only the order data (leq, covers,
// the counting relations); explicit mode evaluates on constructed digraphs
// with each quantifier ranged over the structurally complete family noted
// at its site. Nothing here may call into verify_oracles.cpp.

namespace digdef {
namespace verify {
namespace formulas {

namespace {

int idx(const Universe& u, const Digraph& g) {
    auto found = u.find(g);
    return found ? *found : -1;
}

std::vector<int> members(const std::vector<char>& set) {
    std::vector<int> out;
    for (std::size_t i = 0; i < set.size(); ++i)
        if (set[i])
            out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> maximal_among(const Universe& u, const std::vector<int>& xs) {
    std::vector<int> out;
    for (int x : xs) {
        bool top = true;
        for (int y : xs)
            if (u.lt(x, y)) {
                top = false;
                break;
            }
        if (top)
            out.push_back(x);
    }
    return out;
}

std::vector<int> minimal_among(const Universe& u, const std::vector<int>& xs) {
    std::vector<int> out;
    for (int x : xs) {
        bool bottom = true;
        for (int y : xs)
            if (u.lt(y, x)) {
                bottom = false;
                break;
            }
        if (bottom)
            out.push_back(x);
    }
    return out;
}

// Pairs each x with the E_i satisfying E_i <= x and E_{i+1} <= x failing;
// at i = N the second clause refers to a type outside the universe and is
// taken as true, with a caveat.
std::vector<std::pair<int, int>> pair_by_count(const Universe& u,
                                               const std::vector<int>& xs,
                                               std::uint64_t& caveats) {
    std::vector<std::pair<int, int>> out;
    for (int x : xs) {
        for (int i = 1; i <= u.bound; ++i) {
            int ei = u.empty_index(i);
            if (!u.leq_at(ei, x))
                continue;
            bool next_fails;
            if (i + 1 <= u.bound) {
                next_fails = !u.leq_at(u.empty_index(i + 1), x);
            } else {
                next_fails = true;
                ++caveats;
            }
            if (next_fails)
                out.emplace_back(x, ei);
        }
    }
    return out;
}

// All results of adding one edge (loops included) to g, one per type.
std::vector<Digraph> one_edge_additions(const Digraph& g, bool allow_loops) {
    std::set<std::string> seen;
    std::vector<Digraph> out;
    for (int a = 0; a < g.n(); ++a) {
        for (int b = 0; b < g.n(); ++b) {
            if (g.has_edge(a, b) || (a == b && !allow_loops))
                continue;
            Digraph h = g;
            h.add_edge(a, b);
            if (seen.insert(canonicalize(h).key).second)
                out.push_back(std::move(h));
        }
    }
    return out;
}

std::vector<int> loop_free_vertices(const Digraph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (!g.has_edge(v, v))
            out.push_back(v);
    return out;
}

// Every placement of extra loops on g raising the loop total to `target`,
// one candidate per subset. Complete for digraphs Z with g <= Z, Z has the
// same loop-stripped type as g, and `target` loops: such a Z is g plus
// loops up to isomorphism.
template <typename Fn>
void for_each_loop_placement(const Digraph& g, int target, Fn&& fn) {
    std::vector<int> free = loop_free_vertices(g);
    int need = target - g.loop_count();
    if (need < 0 || need > static_cast<int>(free.size()))
        return;
    std::vector<int> pick(need);
    std::function<bool(int, int)> rec = [&](int from, int got) -> bool {
        if (got == need) {
            Digraph h = g;
            for (int i = 0; i < need; ++i)
                h.add_edge(pick[i], pick[i]);
            return fn(h);
        }
        for (int i = from; i < static_cast<int>(free.size()); ++i) {
            pick[got] = free[i];
            if (!rec(i + 1, got + 1))
                return false;
        }
        return true;
    };
    rec(0, 0);
}

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// The loop-addition condition shared by the Lemma-4.15-shaped clauses:
// true iff some loop-extension of g (same loop-stripped type) admits no Z
// in the loop-placement family over y with bar <= Z, Z <= cap and matching
// loop count. Without the bar <= Z requirement no distinct pair would ever
// be separated: Z could ignore where the extension put its loops.
bool barred_extension_exists(const Digraph& g, const Digraph& y, const Digraph& cap) {
    std::vector<int> free = loop_free_vertices(g);
    const int k = static_cast<int>(free.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Digraph bar = g;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1)
                bar.add_edge(free[i], free[i]);
        bool z_found = false;
        for_each_loop_placement(y, bar.loop_count(), [&](const Digraph& z) {
            if (is_embeddable(bar, z) && is_embeddable(z, cap)) {
                z_found = true;
                return false;
            }
            return true;
        });
        if (!z_found)
            return true;
    }
    return false;
}

}  // namespace

std::vector<char> e_set(const Universe& u) {
    int i2 = idx(u, gadgets::path_graph(2));
    int l1 = idx(u, gadgets::loops_graph(1));
    std::vector<char> out(u.types.size(), 0);
    for (std::size_t x = 0; x < u.types.size(); ++x)
        out[x] = !u.leq_at(i2, static_cast<int>(x)) && !u.leq_at(l1, static_cast<int>(x));
    return out;
}

std::vector<char> l_set(const Universe& u, std::uint64_t& caveats) {
    int i2 = idx(u, gadgets::path_graph(2));
    std::vector<char> out(u.types.size(), 0);
    for (int i = 1; i <= u.bound; ++i) {
        int ei = u.empty_index(i);
        int next = i + 1 <= u.bound ? u.empty_index(i + 1) : -1;
        if (next < 0)
            ++caveats;  // E_{i+1} lies outside the universe
        auto pred = [&](int x) {
            if (!u.leq_at(ei, x) || u.leq_at(i2, x))
                return false;
            return next < 0 || !u.leq_at(next, x);
        };
        // candidates carry exactly i vertices, so maximality inside the
        // universe is exact even at the bound
        for (int x : extremal_with(u, pred, ExtremalMode::maximal).elems)
            out[x] = 1;
    }
    return out;
}

std::vector<std::pair<int, int>> le_rel(const Universe& u, std::uint64_t& caveats) {
    std::vector<char> es = e_set(u);
    std::vector<std::pair<int, int>> out;
    for (int x : members(l_set(u, caveats))) {
        std::vector<int> below;
        for (int y : members(es))
            if (u.leq_at(y, x))
                below.push_back(y);
        for (int y : maximal_among(u, below))
            out.emplace_back(x, y);
    }
    return out;
}

std::vector<char> h_set(const Universe& u) {
    int e2 = u.empty_index(2);
    int a = idx(u, gadgets::const_a());
    int at = idx(u, gadgets::const_a_transpose());
    int l1 = idx(u, gadgets::loops_graph(1));
    std::vector<char> out(u.types.size(), 0);
    for (int n = 1; n <= u.bound; ++n) {
        int en = u.empty_index(n);
        auto pred = [&](int x) {
            return u.leq_at(e2, x) && !u.leq_at(a, x) && !u.leq_at(at, x) &&
                   !u.leq_at(l1, x) && u.frak_e(x, en);
        };
        // the vertex count is pinned by the last clause, so maximality is
        // exact inside the universe
        for (int x : extremal_with(u, pred, ExtremalMode::maximal).elems)
            out[x] = 1;
    }
    return out;
}

std::vector<char> o_set(const Universe& u) {
    std::vector<char> hs = h_set(u);
    std::vector<char> out(u.types.size(), 0);
    for (int x : members(hs)) {
        bool covered = false;
        for (int y : members(hs))
            if (u.covers_at(y, x)) {
                covered = true;
                break;
            }
        out[x] = !covered;
    }
    return out;
}

std::vector<char> o_union_set(const Universe& u) {
    std::vector<char> os = o_set(u);
    std::vector<char> out(u.types.size(), 0);
    for (int x : members(os)) {
        bool reducible = false;
        for (int y : members(os))
            if (u.lt(y, x)) {
                reducible = true;
                break;
            }
        out[x] = !reducible;
    }
    return out;
}

std::vector<std::pair<int, int>> on_en_rel(const Universe& u, std::uint64_t& caveats) {
    return pair_by_count(u, members(o_union_set(u)), caveats);
}

std::vector<char> f_set(const Universe& u) {
    std::vector<char> out(u.types.size(), 0);
    for (int x = 0; x < static_cast<int>(u.types.size()); ++x) {
        bool ok = true;
        for (int y = 0; y < static_cast<int>(u.types.size()); ++y)
            if (u.lt(x, y) && u.frak_e(x, y)) {
                ok = false;
                break;
            }
        out[x] = ok;
    }
    return out;
}

std::vector<std::pair<int, int>> fn_en_rel(const Universe& u, std::uint64_t& caveats) {
    return pair_by_count(u, members(f_set(u)), caveats);
}

std::vector<std::pair<int, int>> m_rel(const Universe& u) {
    int l1 = idx(u, gadgets::loops_graph(1));
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < static_cast<int>(u.types.size()); ++x) {
        std::vector<int> below;
        for (int y = 0; y < static_cast<int>(u.types.size()); ++y)
            if (u.leq_at(y, x) && !u.leq_at(l1, y))
                below.push_back(y);
        for (int y : maximal_among(u, below))
            out.emplace_back(x, y);
    }
    return out;
}

BitMatrix frak_m_formula(const Universe& u) {
    auto mr = m_rel(u);
    std::vector<std::vector<int>> strips(u.types.size());
    for (auto [x, y] : mr)
        strips[x].push_back(y);
    BitMatrix out(u.types.size());
    for (std::size_t x = 0; x < u.types.size(); ++x)
        for (std::size_t y = 0; y < u.types.size(); ++y)
            for (int z : strips[x]) {
                if (std::find(strips[y].begin(), strips[y].end(), z) !=
                    strips[y].end()) {
                    out.set(x, y, true);
                    break;
                }
            }
    return out;
}

std::vector<std::pair<int, int>> l_of_rel(const Universe& u) {
    BitMatrix fm = frak_m_formula(u);
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < static_cast<int>(u.types.size()); ++x) {
        std::vector<int> related;
        for (int y = 0; y < static_cast<int>(u.types.size()); ++y)
            if (fm.get(x, y))
                related.push_back(y);
        for (int y : maximal_among(u, related))
            out.emplace_back(x, y);
    }
    return out;
}

std::vector<std::array<int, 3>> eplus_formula(const Universe& u,
                                              std::uint64_t& caveats) {
    std::vector<char> es = e_set(u);
    std::vector<int> full_of(u.types.size(), -1);   // E_j -> F_j
    for (auto [f, e] : fn_en_rel(u, caveats))
        full_of[e] = f;
    std::vector<int> loops_of(u.types.size(), -1);  // E_i -> L_i
    for (auto [l, e] : le_rel(u, caveats))
        loops_of[e] = l;
    std::vector<int> strip_of(u.types.size(), -1);
    for (auto [x, y] : m_rel(u))
        strip_of[x] = y;
    int l1 = idx(u, gadgets::loops_graph(1));

    std::vector<std::array<int, 3>> out;
    for (int x : members(es)) {
        for (int y : members(es)) {
            if (y == u.empty_index(1)) {
                // the loop-blocking construction degenerates at E_1, where
                // M(F_1) is a point and F_1^* is L_1 itself; the successor
                // is the unique cover of x inside the formula's E-set
                for (int z : members(es))
                    if (u.covers_at(x, z))
                        out.push_back({x, y, z});
                continue;
            }
            int fj = full_of[y];
            if (fj < 0)
                continue;
            int mfj = strip_of[fj];
            int fstar = -1;
            for (int w = 0; w < static_cast<int>(u.types.size()); ++w)
                if (u.covers_at(mfj, w) && u.leq_at(l1, w)) {
                    fstar = w;
                    break;
                }
            int li = loops_of[x];
            if (li < 0 || fstar < 0)
                continue;
            std::vector<int> candidates;
            for (int q = 0; q < static_cast<int>(u.types.size()); ++q)
                if (u.leq_at(li, q) && u.leq_at(mfj, q) && !u.leq_at(fstar, q))
                    candidates.push_back(q);
            std::set<int> zs;
            for (int q : minimal_among(u, candidates))
                for (int z : members(es))
                    if (u.frak_e(z, q))
                        zs.insert(z);
            for (int z : zs)
                out.push_back({x, y, z});
        }
    }
    return out;
}

std::vector<std::pair<int, int>> interval_formula(const Universe& u,
                                                  std::uint64_t& caveats) {
    std::vector<char> es = e_set(u);
    auto eplus = eplus_formula(u, caveats);
    std::vector<std::pair<int, int>> out;
    for (int x : members(es)) {
        int twice = -1;
        for (const auto& t : eplus)
            if (t[0] == x && t[1] == x) {
                twice = t[2];
                break;
            }
        if (twice < 0)
            ++caveats;  // E_{2n} lies outside the universe
        for (int y : members(es)) {
            if (!u.lt(x, y))
                continue;
            // with E_{2n} missing, every present E_m is below it anyway
            if (twice < 0 || u.leq_at(y, twice))
                out.emplace_back(x, y);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> ostar_formula(const Universe& u,
                                               std::uint64_t& caveats) {
    std::vector<char> os = o_set(u);
    std::vector<int> ou = members(o_union_set(u));
    auto interval = interval_formula(u, caveats);
    std::uint64_t scratch = 0;
    auto onen = pair_by_count(u, ou, scratch);
    std::vector<std::pair<int, int>> out;
    for (int n = 1; n <= u.bound; ++n) {
        int en = u.empty_index(n);
        if (2 * n > u.bound) {
            ++caveats;  // the constraint set of circles is truncated
            continue;
        }
        std::vector<int> required;
        for (auto [o, eo] : onen)
            if (std::find(interval.begin(), interval.end(),
                          std::make_pair(en, eo)) != interval.end())
                required.push_back(o);
        std::vector<int> candidates;
        for (int x : members(os)) {
            bool all = true;
            for (int o : required)
                if (!u.leq_at(o, x)) {
                    all = false;
                    break;
                }
            if (all)
                candidates.push_back(x);
        }
        if (candidates.empty()) {
            ++caveats;
            continue;
        }
        for (int x : minimal_among(u, candidates))
            out.emplace_back(x, en);
    }
    return out;
}

std::vector<std::pair<int, int>> oarrow_formula(const Universe& u) {
    int l1 = idx(u, gadgets::loops_graph(1));
    std::uint64_t scratch = 0;
    auto onen = on_en_rel(u, scratch);
    std::vector<std::pair<int, int>> out;
    for (auto [on, en] : onen) {
        for (int x = 0; x < static_cast<int>(u.types.size()); ++x)
            if (u.covers_at(on, x) && !u.leq_at(l1, x) && u.frak_e(x, on))
                out.emplace_back(x, en);
    }
    return out;
}

std::vector<std::pair<int, int>> male_rel(const Universe& u, std::uint64_t& caveats) {
    int l1 = idx(u, gadgets::loops_graph(1));
    int at = idx(u, gadgets::const_a_transpose());
    std::uint64_t scratch = 0;
    auto onen = on_en_rel(u, scratch);
    auto oarrow = oarrow_formula(u);
    std::vector<std::pair<int, int>> out;
    ++caveats;  // the n = N instance needs n+1 vertices and cannot run
    for (auto [on, en] : onen) {
        if (u.vertex_count[on] + 1 > u.bound)
            continue;
        int enext = u.empty_index(u.vertex_count[on] + 1);
        for (int x = 0; x < static_cast<int>(u.types.size()); ++x) {
            if (!u.frak_e(x, enext) || u.leq_at(l1, x) || !u.leq_at(at, x))
                continue;
            bool chain = false;
            for (int z = 0; z < static_cast<int>(u.types.size()) && !chain; ++z)
                if (u.covers_at(on, z) && u.covers_at(z, x))
                    chain = true;
            if (!chain)
                continue;
            bool extension = false;
            for (auto [z, ez] : oarrow)
                if (ez == en && u.leq_at(z, x)) {
                    extension = true;
                    break;
                }
            if (!extension)
                out.emplace_back(x, en);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> onl_rel(const Universe& u, std::uint64_t& caveats) {
    int l1 = idx(u, gadgets::loops_graph(1));
    std::vector<int> ou = members(o_union_set(u));
    std::vector<int> xs;
    for (int x = 0; x < static_cast<int>(u.types.size()); ++x) {
        bool hit = false;
        for (int o : ou)
            if (u.covers_at(o, x) && u.leq_at(l1, x)) {
                hit = true;
                break;
            }
        if (hit)
            xs.push_back(x);
    }
    return pair_by_count(u, xs, caveats);
}

std::vector<std::pair<int, int>> male_l_rel(const Universe& u,
                                            std::uint64_t& caveats) {
    int l1 = idx(u, gadgets::loops_graph(1));
    std::uint64_t scratch = 0;
    auto males = male_rel(u, scratch);
    auto onls = onl_rel(u, scratch);
    std::vector<std::pair<int, int>> out;
    ++caveats;  // instances beyond the vertex bound cannot run
    for (auto [male, en] : males) {
        int onl = -1;
        for (auto [c, ec] : onls)
            if (ec == en) {
                onl = c;
                break;
            }
        if (onl < 0)
            continue;
        for (int x = 0; x < static_cast<int>(u.types.size()); ++x)
            if (u.covers_at(male, x) && u.leq_at(l1, x) && !u.leq_at(onl, x))
                out.emplace_back(x, en);
    }
    return out;
}

std::vector<std::pair<int, int>> onlstar_rel(const Universe& u,
                                             std::uint64_t& caveats) {
    // only n = 1 fits any practical bound: O_{1,L}^* = O_{2,L}
    ++caveats;
    std::uint64_t scratch = 0;
    auto ostar = ostar_formula(u, scratch);
    auto males = male_rel(u, scratch);
    auto onls = onl_rel(u, scratch);
    auto oarrow = oarrow_formula(u);
    std::vector<std::pair<int, int>> out;
    int e1 = u.empty_index(1);
    int o1star = -1;
    for (auto [x, e] : ostar)
        if (e == e1)
            o1star = x;
    if (o1star < 0)
        return out;
    int e2 = u.empty_index(2);
    int l2 = idx(u, gadgets::loops_graph(2));
    int male2 = -1, onl2 = -1;
    for (auto [m, e] : males)
        if (e == e2)
            male2 = m;
    for (auto [c, e] : onls)
        if (e == e2)
            onl2 = c;
    if (onl2 < 0)
        return out;
    for (int x = 0; x < static_cast<int>(u.types.size()); ++x) {
        if (!u.leq_at(o1star, x) || !u.frak_e(x, o1star))
            continue;
        bool bad = false;
        for (auto [z, e] : oarrow)  // one-edge circle extensions, O_2 here
            if (e == e2 && u.leq_at(z, x))
                bad = true;
        if (male2 >= 0 && u.leq_at(male2, x))
            bad = true;
        if (!u.leq_at(onl2, x))
            bad = true;
        if (l2 >= 0 && u.leq_at(l2, x))
            bad = true;
        if (!bad)
            out.emplace_back(x, e1);
    }
    return out;
}

std::vector<std::array<int, 3>> oij_rel(const Universe& u, std::uint64_t& caveats) {
    std::vector<char> os = o_set(u);
    std::vector<int> ou = members(o_union_set(u));
    std::uint64_t scratch = 0;
    auto onen = on_en_rel(u, scratch);
    auto males = male_rel(u, scratch);
    std::vector<std::array<int, 3>> out;
    ++caveats;  // pairs with i + j beyond the bound cannot run
    for (auto [oi, ei] : onen) {
        for (auto [oj, ej] : onen) {
            int total = u.vertex_count[oi] + u.vertex_count[oj];
            if (total > u.bound)
                continue;
            int etotal = u.empty_index(total);
            int malei = -1;
            for (auto [m, e] : males)
                if (e == ei)
                    malei = m;
            if (malei < 0)
                continue;
            for (int x = 0; x < static_cast<int>(u.types.size()); ++x) {
                if (!u.frak_e(x, etotal) || !u.leq_at(malei, x))
                    continue;
                bool witness = false;
                for (int w : members(os)) {
                    if (!u.covers_at(w, x) || !u.frak_e(w, x))
                        continue;
                    std::set<int> inside;
                    for (int o : ou)
                        if (u.leq_at(o, w))
                            inside.insert(o);
                    if (inside == std::set<int>{oi, oj}) {
                        witness = true;
                        break;
                    }
                }
                if (witness)
                    out.push_back({x, ei, ej});
            }
        }
    }
    return out;
}

std::vector<std::pair<int, int>> oii_rel(const Universe& u) {
    std::vector<char> os = o_set(u);
    std::vector<int> ou = members(o_union_set(u));
    std::uint64_t scratch = 0;
    auto onen = on_en_rel(u, scratch);
    std::vector<std::pair<int, int>> out;
    for (auto [oi, ei] : onen) {
        int total = 2 * u.vertex_count[oi];
        if (total > u.bound)
            continue;
        int etotal = u.empty_index(total);
        for (int x : members(os)) {
            if (!u.frak_e(x, etotal))
                continue;
            std::set<int> inside;
            for (int o : ou)
                if (u.leq_at(o, x))
                    inside.insert(o);
            if (inside == std::set<int>{oi})
                out.emplace_back(x, ei);
        }
    }
    return out;
}

// ---------------------------------------------------------------- explicit

bool loop_addition_rhs(const Digraph& g, const Digraph& gp, int n) {
    Digraph star = gadgets::o_star(n);
    return barred_extension_exists(g, disjoint_union(gp, star),
                                   disjoint_union(saturate_loops(g), star));
}

std::vector<std::string> gplus_ostar_accepted(const Digraph& g,
                                              std::uint64_t& caveats) {
    const int n = g.n();
    Digraph star = gadgets::o_star(n);
    Digraph cap = disjoint_union(saturate_loops(g), star);  // L(X) u O_n^*

    // the defining conditions of cap itself: contains L(X) and O_n^*, and
    // no looped one-edge circle extension fits
    std::vector<std::string> failure{"cap-conditions"};
    if (!is_embeddable(saturate_loops(g), cap) || !is_embeddable(star, cap))
        return failure;
    for (const Digraph& z : one_edge_additions(star, true))
        if (z.loop_count() >= 1 && is_embeddable(z, cap))
            return failure;
    ++caveats;  // cap minimality argued by edge counting, not searched

    std::set<std::string> accepted;
    Digraph base = disjoint_union(strip_loops(g), star);
    std::string cap_strip = canonicalize(strip_loops(cap)).key;
    for_each_loop_placement(base, g.loop_count(), [&](const Digraph& y) {
        if (canonicalize(strip_loops(y)).key != cap_strip)
            return true;  // Y == L(X) u O_n^* fails
        if (!is_embeddable(g, y))
            return true;  // X <= Y fails
        // loop counts already match by construction
        if (barred_extension_exists(g, y, cap))
            return true;  // the Lemma-4.15-shaped clause rejects Y
        accepted.insert(canonicalize(y).key);
        return true;
    });
    return {accepted.begin(), accepted.end()};
}

std::vector<std::string> anchored_accepted(const Digraph& g, std::uint64_t& caveats) {
    const int n = g.n();
    Digraph star = gadgets::o_star(n);
    Digraph lg = saturate_loops(g);
    auto perms = permutations_of(n);

    // stage one: every anchored loop-saturated object must satisfy the five
    // bullet conditions
    std::vector<Digraph> stage_one;
    for (const auto& p : perms) {
        Digraph y0 = gadgets::anchored(lg, p);
        if (!is_embeddable(disjoint_union(lg, star), y0) ||
            y0.n() != lg.n() + star.n())
            return {"stage-one-base"};
        for (const Digraph& z : one_edge_additions(lg, false))
            if (is_embeddable(z, y0))
                return {"stage-one-lx-extension"};
        for (const Digraph& z : one_edge_additions(star, true))
            if (is_embeddable(z, y0))
                return {"stage-one-star-extension"};
        for (int i = n + 1; i <= 2 * n; ++i)
            if (!is_embeddable(gadgets::flag_loop(i), y0))
                return {"stage-one-flag-loop"};
        for (int i = n + 1; i <= 2 * n; ++i)
            for (int j = n + 1; j <= 2 * n; ++j)
                if (i != j && is_embeddable(gadgets::flag_pair_loop(i, j), y0))
                    return {"stage-one-shared-anchor"};
        stage_one.push_back(std::move(y0));
    }
    ++caveats;  // stage-one minimality argued by edge counting, not searched

    std::set<std::string> stage_one_strips;
    for (const Digraph& y0 : stage_one)
        stage_one_strips.insert(canonicalize(strip_loops(y0)).key);

    // stage two: Y must strip to some stage-one object, sandwich X u O_n^*
    // below and a stage-one object above, and carry X's loop count
    std::set<std::string> accepted;
    Digraph lower = disjoint_union(g, star);
    for (const auto& p : perms) {
        Digraph base = gadgets::anchored(strip_loops(g), p);
        for_each_loop_placement(base, g.loop_count(), [&](const Digraph& y) {
            if (!stage_one_strips.count(canonicalize(strip_loops(y)).key))
                return true;
            if (!is_embeddable(lower, y))
                return true;
            bool above = false;
            for (const Digraph& y0 : stage_one)
                if (is_embeddable(y, y0)) {
                    above = true;
                    break;
                }
            if (above)
                accepted.insert(canonicalize(y).key);
            return true;
        });
    }
    return {accepted.begin(), accepted.end()};
}

bool falpha_bullets(const Digraph& x, int n, int m, std::string* failed_clause) {
    auto fail = [&](const char* what) {
        if (failed_clause)
            *failed_clause = what;
        return false;
    };
    Digraph base = disjoint_union(gadgets::o_star(n), gadgets::o_l_star(m));
    if (!is_embeddable(base, x) || x.n() != base.n() ||
        x.loop_count() != base.loop_count())
        return fail("base-and-counts");
    for (int i = n + 1; i <= 2 * n; ++i)
        if (!is_embeddable(gadgets::flag_loop(i), x))
            return fail("flag-loop");
    for (int i = n + 1; i <= 2 * std::max(n, m); ++i) {
        bool in_parts = (i >= n + 1 && i <= 2 * n) || (i >= m + 1 && i <= 2 * m);
        if (!in_parts)
            continue;
        for (const IsoClass& w : gadgets::cycle_extensions(i))
            if (is_embeddable(w.canonical, x))
                return fail("circle-extension");
    }
    for (int i = 2; i <= 2 * std::max(n, m); ++i) {
        Digraph male = gadgets::flag(i);
        if (!is_embeddable(male, x))
            continue;
        // one-edge extensions of the flag must already contain the looped
        // flag whenever they fit
        for (const Digraph& v : one_edge_additions(male, true)) {
            if (is_embeddable(v, x) && !is_embeddable(gadgets::flag_loop(i), v))
                return fail("flag-extension");
        }
        for (const Digraph& v : one_edge_additions(gadgets::flag_loop(i), true)) {
            if (v.loop_count() >= 2 && is_embeddable(v, x))
                return fail("double-loop-extension");
        }
    }
    return true;
}

bool identity_condition(const Digraph& f, int n) {
    for (int i = 2; i <= 2 * n + 1; ++i)
        for (int j = 2; j <= 2 * n + 1; ++j)
            if (i != j && is_embeddable(gadgets::cycle_to_cycle(i, j), f))
                return false;
    return true;
}

bool compose_condition(const Digraph& f1, const Digraph& f2, const Digraph& f3,
                       int n, int m, int l) {
    for (int i = n + 1; i <= 2 * n; ++i)
        for (int j = m + 1; j <= 2 * m; ++j)
            for (int k = l + 1; k <= 2 * l; ++k) {
                if (is_embeddable(gadgets::cycle_to_cycle(i, j), f1) &&
                    is_embeddable(gadgets::cycle_to_cycle(j, k), f2) &&
                    !is_embeddable(gadgets::cycle_to_cycle(i, k), f3))
                    return false;
            }
    return true;
}

bool hom_bullets(const Digraph& x, const Digraph& f, const Digraph& y, int n,
                 int m) {
    auto arrow = [&](int i, int k) {
        return is_embeddable(gadgets::cycle_to_cycle(i, k), f);
    };
    for (int i = n + 1; i <= 2 * n; ++i) {
        for (int j = n + 1; j <= 2 * n; ++j) {
            if (i == j || !is_embeddable(gadgets::flag_to_flag(i, j), x))
                continue;
            for (int k = m + 1; k <= 2 * m; ++k)
                for (int l = m + 1; l <= 2 * m; ++l) {
                    if (!arrow(i, k) || !arrow(j, l))
                        continue;
                    bool ok = k != l ? is_embeddable(gadgets::flag_to_flag(k, l), y)
                                     : is_embeddable(gadgets::flag_loop(k), y);
                    if (!ok)
                        return false;
                }
        }
    }
    for (int i = n + 1; i <= 2 * n; ++i) {
        if (!is_embeddable(gadgets::flag_loop(i), x))
            continue;
        for (int k = m + 1; k <= 2 * m; ++k)
            if (arrow(i, k) && !is_embeddable(gadgets::flag_loop(k), y))
                return false;
    }
    return true;
}

}  // namespace formulas
}  // namespace verify
}  // namespace digdef
