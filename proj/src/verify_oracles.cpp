#include <functional>
#include <numeric>

#include "verify_internal.hpp"

namespace digdef {
namespace verify {
namespace oracles {

// Plain recursive injective-map search, deliberately separate from the
// library's embedding engine so the two halves of the verifier cannot share
// a bug.
bool embeddable(const Digraph& g, const Digraph& h) {
    if (g.n() > h.n())
        return false;
    std::vector<int> map(g.n(), -1);
    std::vector<bool> used(h.n(), false);
    std::function<bool(int)> place = [&](int u) -> bool {
        if (u == g.n())
            return true;
        for (int w = 0; w < h.n(); ++w) {
            if (used[w])
                continue;
            bool ok = true;
            for (int x = 0; x <= u && ok; ++x) {
                int im = x == u ? w : map[x];
                if (im < 0)
                    continue;
                if (g.has_edge(u, x) && !h.has_edge(w, im))
                    ok = false;
                if (x != u && g.has_edge(x, u) && !h.has_edge(im, w))
                    ok = false;
            }
            if (!ok)
                continue;
            used[w] = true;
            map[u] = w;
            if (place(u + 1))
                return true;
            used[w] = false;
            map[u] = -1;
        }
        return false;
    };
    return place(0);
}

bool iso(const Digraph& a, const Digraph& b) {
    return a.n() == b.n() && a.edge_count() == b.edge_count() && embeddable(a, b);
}

bool no_edges(const Digraph& d) {
    return d.edge_count() == 0;
}

bool all_loops_only(const Digraph& d) {
    return d.edge_count() == d.n() && d.loop_count() == d.n();
}

std::vector<std::vector<int>> wcc_vertices(const Digraph& d) {
    std::vector<int> parent(d.n());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [a, b] : d.edges())
        parent[find(a)] = find(b);
    std::vector<std::vector<int>> byroot(d.n());
    for (int v = 0; v < d.n(); ++v)
        byroot[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& group : byroot)
        if (!group.empty())
            out.push_back(std::move(group));
    return out;
}

int wcc_count(const Digraph& d) {
    return static_cast<int>(wcc_vertices(d).size());
}

bool cycles_only(const Digraph& d) {
    for (const auto& comp : wcc_vertices(d)) {
        if (comp.size() < 2)
            return false;
        for (int v : comp)
            if (d.out_degree(v) != 1 || d.in_degree(v) != 1 || d.has_edge(v, v))
                return false;
    }
    return true;
}

bool single_cycle(const Digraph& d) {
    return cycles_only(d) && wcc_count(d) == 1;
}

bool is_full(const Digraph& d) {
    return d.edge_count() == d.n() * d.n();
}

Digraph strip(const Digraph& d) {
    Digraph out(d.n());
    for (auto [a, b] : d.edges())
        if (a != b)
            out.add_edge(a, b);
    return out;
}

Digraph saturate(const Digraph& d) {
    Digraph out = d;
    for (int v = 0; v < d.n(); ++v)
        out.add_edge(v, v);
    return out;
}

bool strip_is_path(const Digraph& d) {
    Digraph m = strip(d);
    // a path v_1 -> ... -> v_k: k-1 edges, one source, one sink, connected
    if (m.edge_count() != m.n() - 1 || wcc_count(m) != 1)
        return false;
    for (int v = 0; v < m.n(); ++v)
        if (m.out_degree(v) > 1 || m.in_degree(v) > 1)
            return false;
    return true;
}

std::vector<std::pair<std::string, Digraph>> expected_constants() {
    auto build = [](int n, std::vector<std::pair<int, int>> edges) {
        Digraph g(n);
        for (auto [a, b] : edges)
            g.add_edge(a - 1, b - 1);  // 1-based lists below
        return g;
    };
    std::vector<std::pair<std::string, Digraph>> out;
    out.emplace_back("I2", build(2, {{1, 2}}));
    out.emplace_back("L1", build(1, {{1, 1}}));
    out.emplace_back("E2", build(2, {}));
    out.emplace_back("A", build(3, {{1, 3}, {2, 3}}));
    out.emplace_back("AT", build(3, {{3, 1}, {3, 2}}));
    out.emplace_back("I", build(2, {{1, 2}, {1, 1}, {2, 2}}));
    out.emplace_back("Istar", build(3, {{2, 2}, {3, 3}, {1, 2}, {2, 3}}));
    // anchored one- and two-vertex objects: E_1 with O_2 attached, and the
    // single arrow with O_3 and O_4 attached in identity order
    out.emplace_back("C1", build(3, {{2, 3}, {3, 2}, {2, 1}}));
    out.emplace_back("C2", build(9, {{1, 2},
                                     {3, 4}, {4, 5}, {5, 3},
                                     {6, 7}, {7, 8}, {8, 9}, {9, 6},
                                     {3, 1}, {6, 2}}));
    // the two function gadgets between a 1-object and a 2-object:
    // O_1^* = O_2 on {1,2} anchored at 1, O_{2,L}^* = O_{3,L} + O_{4,L} on
    // {3..9} with loops on the anchors 3 and 6, plus one connecting edge.
    auto fbase = std::vector<std::pair<int, int>>{
        {1, 2}, {2, 1},                          // O_2
        {3, 4}, {4, 5}, {5, 3}, {3, 3},          // O_{3,L}
        {6, 7}, {7, 8}, {8, 9}, {9, 6}, {6, 6},  // O_{4,L}
    };
    auto c3 = fbase;
    c3.push_back({1, 3});
    auto c4 = fbase;
    c4.push_back({1, 6});
    out.emplace_back("C3", build(9, c3));
    out.emplace_back("C4", build(9, c4));
    return out;
}

bool relabeled_hom(const Digraph& g, const std::vector<int>& v,
                   const std::vector<int>& alpha, const Digraph& h,
                   const std::vector<int>& w) {
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (g.has_edge(v[i], v[j]) && !h.has_edge(w[alpha[i]], w[alpha[j]]))
                return false;
    return true;
}

}  // namespace oracles
}  // namespace verify
}  // namespace digdef
