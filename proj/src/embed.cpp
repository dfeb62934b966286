#include "digdef/embed.hpp"

#include <algorithm>
#include <numeric>

namespace digdef {

namespace {

struct Matcher {
    const Digraph& g;
    const Digraph& h;
    std::vector<int> order;            // pattern vertices, most constrained first
    std::vector<std::vector<int>> cand;  // degree/loop-compatible targets per pattern vertex
    std::vector<int> assignment;       // pattern vertex -> target, -1 while unassigned
    std::vector<bool> used;
    bool enumerate_all = false;
    const std::function<bool(const std::vector<int>&)>* visit = nullptr;
    std::optional<std::vector<int>> witness;

    Matcher(const Digraph& g_, const Digraph& h_) : g(g_), h(h_) {
        const int n = g.n();
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        auto weight = [&](int v) {
            return g.out_degree(v) + g.in_degree(v) + (g.has_loop(v) ? 2 : 0);
        };
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return weight(a) > weight(b); });
        cand.resize(n);
        for (int u = 0; u < n; ++u) {
            for (int w = 0; w < h.n(); ++w) {
                if (h.out_degree(w) < g.out_degree(u) || h.in_degree(w) < g.in_degree(u))
                    continue;
                if (g.has_loop(u) && !h.has_loop(w))
                    continue;
                cand[u].push_back(w);
            }
        }
        assignment.assign(n, -1);
        used.assign(h.n(), false);
    }

    bool consistent(int u, int w) const {
        for (int v = 0; v < g.n(); ++v) {
            int x = assignment[v];
            if (x < 0)
                continue;
            if (g.has_edge(u, v) && !h.has_edge(w, x))
                return false;
            if (g.has_edge(v, u) && !h.has_edge(x, w))
                return false;
        }
        return true;
    }

    // Returns false to abort the whole search.
    bool extend(std::size_t depth) {
        if (depth == order.size()) {
            if (enumerate_all)
                return (*visit)(assignment);
            witness = assignment;
            return false;
        }
        int u = order[depth];
        for (int w : cand[u]) {
            if (used[w] || !consistent(u, w))
                continue;
            assignment[u] = w;
            used[w] = true;
            bool keep = extend(depth + 1);
            used[w] = false;
            assignment[u] = -1;
            if (!keep)
                return false;
        }
        return true;
    }
};

}  // namespace

std::optional<Embedding> find_embedding(const Digraph& g, const Digraph& h) {
    if (g.n() > h.n() || g.edge_count() > h.edge_count())
        return std::nullopt;
    Matcher matcher(g, h);
    matcher.extend(0);
    if (!matcher.witness)
        return std::nullopt;
    return Embedding{g, h, std::move(*matcher.witness)};
}

bool is_embeddable(const Digraph& g, const Digraph& h) {
    return find_embedding(g, h).has_value();
}

void for_each_embedding(const Digraph& g, const Digraph& h,
                        const std::function<bool(const std::vector<int>&)>& visit) {
    if (g.n() > h.n())
        return;
    Matcher matcher(g, h);
    matcher.enumerate_all = true;
    matcher.visit = &visit;
    matcher.extend(0);
}

bool is_valid_embedding(const Digraph& g, const Digraph& h, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != g.n())
        return false;
    std::vector<bool> used(h.n(), false);
    for (int image : map) {
        if (image < 0 || image >= h.n() || used[image])
            return false;
        used[image] = true;
    }
    for (auto [u, v] : g.edges())
        if (!h.has_edge(map[u], map[v]))
            return false;
    return true;
}

}  // namespace digdef
