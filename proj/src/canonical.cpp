#include "digdef/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace digdef {

namespace {

constexpr int kBruteForceMax = 8;

std::vector<std::uint8_t> bits_in_order(const Digraph& g, const std::vector<int>& order) {
    const int n = g.n();
    std::vector<std::uint8_t> out((static_cast<std::size_t>(n) * n + 7) / 8, 0);
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, ++bit)
            if (g.has_edge(order[i], order[j]))
                out[bit >> 3] |= static_cast<std::uint8_t>(0x80u >> (bit & 7));
    return out;
}

std::vector<int> brute_force_order(const Digraph& g) {
    const int n = g.n();
    std::vector<int> order(n), best(n);
    std::iota(order.begin(), order.end(), 0);
    best = order;
    std::vector<std::uint8_t> best_bits = bits_in_order(g, order);
    while (std::next_permutation(order.begin(), order.end())) {
        std::vector<std::uint8_t> bits = bits_in_order(g, order);
        if (bits < best_bits) {
            best_bits = std::move(bits);
            best = order;
        }
    }
    return best;
}

// ---- degree-partition refinement search (n > kBruteForceMax) ----

using Colors = std::vector<int>;

// Re-rank colors so that vertices compare by (current color, edge counts into
// every color class). Iterates to a fixed point. Invariant under relabeling.
void refine(const Digraph& g, Colors& colors) {
    const int n = g.n();
    for (;;) {
        std::vector<int> palette(colors.begin(), colors.end());
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(colors[v]);
            sig[v].push_back(g.has_loop(v) ? 1 : 0);
            for (int c : palette) {
                int outc = 0, inc = 0;
                for (int w = 0; w < n; ++w) {
                    if (colors[w] != c)
                        continue;
                    outc += g.has_edge(v, w) ? 1 : 0;
                    inc += g.has_edge(w, v) ? 1 : 0;
                }
                sig[v].push_back(outc);
                sig[v].push_back(inc);
            }
        }
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        Colors next(n);
        int rank = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[idx[i]] != sig[idx[i - 1]])
                ++rank;
            next[idx[i]] = rank;
        }
        if (next == colors)
            return;
        colors = std::move(next);
    }
}

// True when swapping u and v is an automorphism; lets the search branch on one
// representative of each twin class inside a cell.
bool twins(const Digraph& g, int u, int v) {
    if (g.has_loop(u) != g.has_loop(v) || g.has_edge(u, v) != g.has_edge(v, u))
        return false;
    for (int w = 0; w < g.n(); ++w) {
        if (w == u || w == v)
            continue;
        if (g.has_edge(u, w) != g.has_edge(v, w) || g.has_edge(w, u) != g.has_edge(w, v))
            return false;
    }
    return true;
}

struct RefinementSearch {
    const Digraph& g;
    std::vector<std::uint8_t> best_bits;
    std::vector<int> best_order;
    bool have_best = false;

    void run() {
        Colors colors(g.n(), 0);
        descend(std::move(colors));
    }

    void descend(Colors colors) {
        refine(g, colors);
        const int n = g.n();
        // smallest-colored non-singleton cell
        int target = -1;
        std::vector<int> count(n, 0);
        for (int v = 0; v < n; ++v)
            ++count[colors[v]];
        for (int c = 0; c < n; ++c) {
            if (count[c] > 1) {
                target = c;
                break;
            }
        }
        if (target < 0) {
            std::vector<int> order(n);
            for (int v = 0; v < n; ++v)
                order[colors[v]] = v;
            std::vector<std::uint8_t> bits = bits_in_order(g, order);
            if (!have_best || bits < best_bits) {
                best_bits = std::move(bits);
                best_order = std::move(order);
                have_best = true;
            }
            return;
        }
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (colors[v] == target)
                cell.push_back(v);
        std::vector<int> reps;
        for (int v : cell) {
            bool dup = false;
            for (int r : reps)
                if (twins(g, r, v)) {
                    dup = true;
                    break;
                }
            if (!dup)
                reps.push_back(v);
        }
        for (int rep : reps) {
            Colors branch(colors.size());
            for (int v = 0; v < n; ++v)
                branch[v] = colors[v] * 2 + 1;
            branch[rep] -= 1;
            descend(std::move(branch));
        }
    }
};

std::vector<int> canonical_order(const Digraph& g) {
    if (g.n() <= kBruteForceMax)
        return brute_force_order(g);
    RefinementSearch search{g};
    search.run();
    return search.best_order;
}

}  // namespace

IsoClass canonicalize(const Digraph& g) {
    if (g.n() > 255)
        throw std::invalid_argument("canonicalize supports at most 255 vertices");
    std::vector<int> order = canonical_order(g);
    std::vector<int> perm(g.n());
    for (int i = 0; i < g.n(); ++i)
        perm[order[i]] = i;
    Digraph canon = g.relabeled(perm);
    std::string key;
    key.push_back(static_cast<char>(g.n()));
    for (std::uint8_t b : canon.packed_bits())
        key.push_back(static_cast<char>(b));
    return IsoClass{std::move(canon), std::move(key)};
}

std::string key_hex(const IsoClass& cls) {
    static const char* digits = "0123456789abcdef";
    std::string out = std::to_string(cls.canonical.n()) + ":";
    for (std::uint8_t b : cls.canonical.packed_bits()) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

bool isomorphic(const Digraph& g, const Digraph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count() ||
        g.loop_count() != h.loop_count())
        return false;
    return canonicalize(g).key == canonicalize(h).key;
}

}  // namespace digdef
