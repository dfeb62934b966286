// Independent brute-force oracles used only by tests. Nothing here may call
// into the implementation paths it is checking: embeddability is decided by
// raw injective-map enumeration, type counting by the cycle-index formula,
// and canonical keys by direct minimization over all permutations.
#ifndef DIGDEF_TEST_ORACLES_HPP
#define DIGDEF_TEST_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "digdef/canonical.hpp"
#include "digdef/digraph.hpp"

namespace oracles {

// G <= H by trying every injective map of vertices, no pruning.
inline bool embeddable(const digdef::Digraph& g, const digdef::Digraph& h) {
    if (g.n() > h.n())
        return false;
    std::vector<int> targets(h.n());
    std::iota(targets.begin(), targets.end(), 0);
    // every ordered selection of g.n() targets
    std::vector<int> map(g.n());
    std::vector<bool> used(h.n(), false);
    std::function<bool(int)> place = [&](int u) -> bool {
        if (u == g.n()) {
            for (int a = 0; a < g.n(); ++a)
                for (int b = 0; b < g.n(); ++b)
                    if (g.has_edge(a, b) && !h.has_edge(map[a], map[b]))
                        return false;
            return true;
        }
        for (int w = 0; w < h.n(); ++w) {
            if (used[w])
                continue;
            used[w] = true;
            map[u] = w;
            if (place(u + 1))
                return true;
            used[w] = false;
        }
        return false;
    };
    return place(0);
}

// Minimal row-major adjacency bit string over all permutations, as a string
// of '0'/'1' characters. Only for small n.
inline std::string min_bit_string(const digdef::Digraph& g) {
    const int n = g.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string bits;
        bits.reserve(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                bits.push_back(g.has_edge(perm[i], perm[j]) ? '1' : '0');
        if (best.empty() || bits < best)
            best = bits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Number of isomorphism types of digraphs (loops allowed) on n vertices:
// Burnside over S_n acting on ordered pairs, 2^(cycles of the pair action)
// averaged over the group.
inline std::uint64_t burnside_type_count(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t total = 0;
    std::uint64_t group = 0;
    do {
        // count cycles of the induced action on [n] x [n]
        std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
        int cycles = 0;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                std::size_t start = static_cast<std::size_t>(u) * n + v;
                if (seen[start])
                    continue;
                ++cycles;
                int a = u, b = v;
                while (true) {
                    std::size_t idx = static_cast<std::size_t>(a) * n + b;
                    if (seen[idx])
                        break;
                    seen[idx] = true;
                    a = perm[a];
                    b = perm[b];
                }
            }
        }
        total += std::uint64_t{1} << cycles;
        ++group;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / group;
}

// Every labeled digraph on n vertices, via the n^2-bit adjacency counter.
template <typename Fn>
inline void for_each_labeled(int n, Fn&& fn) {
    const int bits = n * n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        digdef::Digraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if ((mask >> (u * n + v)) & 1)
                    g.add_edge(u, v);
        fn(g);
    }
}

// One representative per isomorphism type on exactly n vertices.
inline std::vector<digdef::Digraph> all_types(int n) {
    std::set<std::string> seen;
    std::vector<digdef::Digraph> out;
    for_each_labeled(n, [&](const digdef::Digraph& g) {
        digdef::IsoClass cls = digdef::canonicalize(g);
        if (seen.insert(cls.key).second)
            out.push_back(cls.canonical);
    });
    return out;
}

}  // namespace oracles

#endif
