#include "digdef/components.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "digdef/embed.hpp"

namespace digdef {

std::vector<std::string> WccDecomposition::key_multiset() const {
    std::vector<std::string> keys;
    keys.reserve(components.size());
    for (const auto& c : components)
        keys.push_back(c.iso.key);
    std::sort(keys.begin(), keys.end());
    return keys;
}

WccDecomposition wccs(const Digraph& g) {
    const int n = g.n();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : g.edges())
        parent[find(u)] = find(v);

    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v)
        groups[find(v)].push_back(v);

    WccDecomposition out;
    for (auto& [root, vertices] : groups) {
        std::sort(vertices.begin(), vertices.end());
        IsoClass iso = canonicalize(g.induced(vertices));
        out.components.push_back(WccComponent{vertices, std::move(iso)});
    }
    return out;
}

bool equiv_m(const Digraph& g, const Digraph& h) {
    return canonicalize(strip_loops(g)).key == canonicalize(strip_loops(h)).key;
}

bool sqsubseteq(const Digraph& g, const Digraph& h) {
    return is_embeddable(strip_loops(g), strip_loops(h));
}

bool sqsubset(const Digraph& g, const Digraph& h) {
    return sqsubseteq(g, h) && !equiv_m(g, h);
}

std::vector<WccComponent> equiv_components(const Digraph& g, const Digraph& c) {
    std::string target = canonicalize(strip_loops(c)).key;
    std::vector<WccComponent> out;
    for (auto& comp : wccs(g).components)
        if (canonicalize(strip_loops(comp.iso.canonical)).key == target)
            out.push_back(comp);
    return out;
}

ReducedSubgraphs reduced_subgraphs(const Digraph& g, const Digraph& h) {
    auto collect = [](const Digraph& x) {
        std::vector<IsoClass> parts;
        for (auto& comp : wccs(x).components)
            parts.push_back(comp.iso);
        std::sort(parts.begin(), parts.end());
        return parts;
    };
    std::vector<IsoClass> gp = collect(g), hp = collect(h);

    ReducedSubgraphs out;
    std::size_t i = 0, j = 0;
    while (i < gp.size() && j < hp.size()) {
        if (gp[i].key == hp[j].key) {
            out.common.push_back(gp[i]);
            ++i;
            ++j;
        } else if (gp[i].key < hp[j].key) {
            out.g_rest.push_back(gp[i++]);
        } else {
            out.h_rest.push_back(hp[j++]);
        }
    }
    for (; i < gp.size(); ++i)
        out.g_rest.push_back(gp[i]);
    for (; j < hp.size(); ++j)
        out.h_rest.push_back(hp[j]);
    return out;
}

Digraph assemble(const std::vector<IsoClass>& parts) {
    if (parts.empty())
        throw std::invalid_argument("cannot assemble an empty digraph");
    Digraph out = parts.front().canonical;
    for (std::size_t i = 1; i < parts.size(); ++i)
        out = disjoint_union(out, parts[i].canonical);
    return out;
}

}  // namespace digdef
