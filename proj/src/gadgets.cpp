#include "digdef/gadgets.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace digdef {
namespace gadgets {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok)
        throw std::invalid_argument(what);
}

}  // namespace

Digraph empty_graph(int n) {
    require(n >= 1, "empty_graph needs n >= 1");
    return Digraph(n);
}

Digraph full_graph(int n) {
    require(n >= 1, "full_graph needs n >= 1");
    Digraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Digraph path_graph(int n) {
    require(n >= 1, "path_graph needs n >= 1");
    Digraph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Digraph cycle_graph(int n) {
    require(n >= 2, "cycle_graph needs n >= 2");
    Digraph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Digraph loops_graph(int n) {
    require(n >= 1, "loops_graph needs n >= 1");
    Digraph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, v);
    return g;
}

Digraph cycle_loop(int n) {
    Digraph g = cycle_graph(n);
    g.add_edge(0, 0);
    return g;
}

std::vector<IsoClass> cycle_extensions(int n) {
    Digraph base = cycle_graph(n);
    std::set<std::string> seen;
    std::vector<IsoClass> out;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v || base.has_edge(u, v))
                continue;
            Digraph ext = base;
            ext.add_edge(u, v);
            IsoClass cls = canonicalize(ext);
            if (seen.insert(cls.key).second)
                out.push_back(std::move(cls));
        }
    }
    return out;
}

Digraph cycle_to_cycle(int i, int j) {
    Digraph g = disjoint_union(cycle_graph(i), cycle_graph(j));
    g.add_edge(0, i);
    return g;
}

Digraph cycle_pair(int i) {
    return disjoint_union(cycle_graph(i), cycle_graph(i));
}

Digraph flag(int n) {
    require(n >= 2, "flag needs n >= 2");
    Digraph g(n + 1);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    g.add_edge(n - 1, n);
    return g;
}

Digraph flag_loop(int n) {
    Digraph g = flag(n);
    g.add_edge(n, n);
    return g;
}

Digraph flag_pair_loop(int i, int j) {
    require(i > 1 && j > 1 && i != j, "flag_pair_loop needs distinct i, j > 1");
    Digraph g = disjoint_union(cycle_graph(i), cycle_graph(j));
    Digraph out(i + j + 1);
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    int sink = i + j;
    out.add_edge(0, sink);
    out.add_edge(i, sink);
    out.add_edge(sink, sink);
    return out;
}

Digraph flag_to_flag(int i, int j) {
    require(i > 1 && j > 1 && i != j, "flag_to_flag needs distinct i, j > 1");
    Digraph g = disjoint_union(flag(i), flag(j));
    // tips are the only degree-1 vertices
    g.add_edge(i, (i + 1) + j);
    return g;
}

Digraph flag_loop_to_flag_loop(int i, int j) {
    require(i > 1 && j > 1 && i != j,
            "flag_loop_to_flag_loop needs distinct i, j > 1");
    Digraph g = disjoint_union(flag_loop(i), flag_loop(j));
    g.add_edge(i, (i + 1) + j);
    return g;
}

Digraph flag_loop_arrow(int i) {
    require(i >= 2, "flag_loop_arrow needs i >= 2");
    Digraph g = disjoint_union(flag_loop(i), loops_graph(1));
    g.add_edge(i, i + 1);
    return g;
}

int star_size(int n) {
    return n * n + n * (n + 1) / 2;
}

int star_anchor(int n, int block) {
    require(block >= 1 && block <= n, "star block out of range");
    int offset = 0;
    for (int b = 1; b < block; ++b)
        offset += n + b;
    return offset;
}

Digraph o_star(int n) {
    require(n >= 1, "o_star needs n >= 1");
    Digraph g(star_size(n));
    int offset = 0;
    for (int b = 1; b <= n; ++b) {
        int len = n + b;
        for (int v = 0; v < len; ++v)
            g.add_edge(offset + v, offset + (v + 1) % len);
        offset += len;
    }
    return g;
}

Digraph o_l_star(int n) {
    Digraph g = o_star(n);
    for (int b = 1; b <= n; ++b)
        g.add_edge(star_anchor(n, b), star_anchor(n, b));
    return g;
}

Digraph f_alpha(int n, int m, const std::vector<int>& alpha) {
    require(n >= 1 && m >= 1, "f_alpha needs n, m >= 1");
    require(static_cast<int>(alpha.size()) == n, "alpha must be total on [n]");
    for (int a : alpha)
        require(a >= 0 && a < m, "alpha value out of range");
    Digraph g = disjoint_union(o_star(n), o_l_star(m));
    int shift = star_size(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(star_anchor(n, i + 1), shift + star_anchor(m, alpha[i] + 1));
    return g;
}

Digraph anchored(const Digraph& g, const std::vector<int>& order) {
    const int n = g.n();
    require(static_cast<int>(order.size()) == n, "anchor tuple must list every vertex once");
    std::vector<bool> seen(n, false);
    for (int v : order) {
        require(v >= 0 && v < n && !seen[v], "anchor tuple must be a permutation");
        seen[v] = true;
    }
    Digraph out = disjoint_union(g, o_star(n));
    for (int i = 0; i < n; ++i)
        out.add_edge(n + star_anchor(n, i + 1), order[i]);
    return out;
}

Digraph const_a() {
    return Digraph(3, {{0, 2}, {1, 2}});
}

Digraph const_a_transpose() {
    return Digraph(3, {{2, 0}, {2, 1}});
}

Digraph const_i_double() {
    return Digraph(2, {{0, 1}, {0, 0}, {1, 1}});
}

Digraph const_i_star() {
    return Digraph(3, {{1, 1}, {2, 2}, {0, 1}, {1, 2}});
}

Digraph f_star(int j) {
    require(j >= 1, "f_star needs j >= 1");
    Digraph g = strip_loops(full_graph(j));
    g.add_edge(0, 0);
    return g;
}

namespace {

std::vector<int> parse_ints(const std::string& text, const std::string& spec) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer in gadget spec: " + spec);
        }
    }
    if (out.empty())
        throw std::invalid_argument("missing parameters in gadget spec: " + spec);
    return out;
}

}  // namespace

std::vector<Digraph> make_from_spec(const std::string& spec) {
    std::vector<std::string> parts;
    {
        std::string item;
        std::istringstream in(spec);
        while (std::getline(in, item, ':'))
            parts.push_back(item);
    }
    if (parts.empty())
        throw std::invalid_argument("empty gadget spec");
    const std::string& name = parts[0];
    auto want = [&](std::size_t count, std::size_t params) {
        if (parts.size() != count)
            throw std::invalid_argument("gadget " + name + " expects " +
                                        std::to_string(count - 1) + " parameter group(s)");
        if (count >= 2) {
            std::vector<int> p = parse_ints(parts[1], spec);
            if (p.size() != params)
                throw std::invalid_argument("gadget " + name + " expects " +
                                            std::to_string(params) + " integer parameter(s)");
            return p;
        }
        return std::vector<int>{};
    };

    if (name == "E")
        return {empty_graph(want(2, 1)[0])};
    if (name == "F")
        return {full_graph(want(2, 1)[0])};
    if (name == "I")
        return {path_graph(want(2, 1)[0])};
    if (name == "O")
        return {cycle_graph(want(2, 1)[0])};
    if (name == "L")
        return {loops_graph(want(2, 1)[0])};
    if (name == "OL")
        return {cycle_loop(want(2, 1)[0])};
    if (name == "Oarrow") {
        std::vector<Digraph> out;
        for (auto& cls : cycle_extensions(want(2, 1)[0]))
            out.push_back(cls.canonical);
        return out;
    }
    if (name == "Ostar")
        return {o_star(want(2, 1)[0])};
    if (name == "OLstar")
        return {o_l_star(want(2, 1)[0])};
    if (name == "Oij") {
        auto p = want(2, 2);
        return {cycle_to_cycle(p[0], p[1])};
    }
    if (name == "Oii")
        return {cycle_pair(want(2, 1)[0])};
    if (name == "male")
        return {flag(want(2, 1)[0])};
    if (name == "male_L")
        return {flag_loop(want(2, 1)[0])};
    if (name == "maleijL") {
        auto p = want(2, 2);
        return {flag_pair_loop(p[0], p[1])};
    }
    if (name == "malearrow") {
        auto p = want(2, 2);
        return {flag_to_flag(p[0], p[1])};
    }
    if (name == "maleLarrow")
        return {flag_loop_arrow(want(2, 1)[0])};
    if (name == "Falpha") {
        if (parts.size() != 3)
            throw std::invalid_argument("Falpha spec is Falpha:n,m:[a1,...,an]");
        std::vector<int> nm = parse_ints(parts[1], spec);
        if (nm.size() != 2)
            throw std::invalid_argument("Falpha needs two size parameters");
        std::string map_text = parts[2];
        if (map_text.size() < 2 || map_text.front() != '[' || map_text.back() != ']')
            throw std::invalid_argument("Falpha map must be bracketed: [a1,...,an]");
        std::vector<int> alpha = parse_ints(map_text.substr(1, map_text.size() - 2), spec);
        for (int& a : alpha)
            --a;  // grammar is 1-based
        return {f_alpha(nm[0], nm[1], alpha)};
    }
    if (name == "A")
        return {const_a()};
    if (name == "AT")
        return {const_a_transpose()};
    if (name == "Idbl")
        return {const_i_double()};
    if (name == "Istar")
        return {const_i_star()};
    if (name == "Fstar")
        return {f_star(want(2, 1)[0])};
    throw std::invalid_argument("unknown gadget name: " + name);
}

std::vector<std::string> spec_names() {
    return {"E:n",     "F:n",       "I:n",        "O:n",         "L:n",
            "OL:n",    "Oarrow:n",  "Ostar:n",    "OLstar:n",    "Oij:i,j",
            "Oii:i",   "male:n",    "male_L:n",   "maleijL:i,j", "malearrow:i,j",
            "maleLarrow:i", "Falpha:n,m:[a1,...,an]", "A",       "AT",
            "Idbl",    "Istar",     "Fstar:j"};
}

}  // namespace gadgets
}  // namespace digdef
