#include "digdef/digraph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace digdef {

Digraph::Digraph(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("digraph needs at least one vertex");
    stride_ = static_cast<std::size_t>((n + 63) / 64);
    bits_.assign(stride_ * static_cast<std::size_t>(n), 0);
}

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& edges) : Digraph(n) {
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range");
}

void Digraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v >> 6)] |=
        std::uint64_t{1} << (v & 63);
}

void Digraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v >> 6)] &=
        ~(std::uint64_t{1} << (v & 63));
}

int Digraph::edge_count() const {
    int total = 0;
    for (std::uint64_t w : bits_)
        total += std::popcount(w);
    return total;
}

int Digraph::loop_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v)
        total += has_edge(v, v) ? 1 : 0;
    return total;
}

int Digraph::out_degree(int v) const {
    int total = 0;
    for (std::size_t w = 0; w < stride_; ++w)
        total += std::popcount(bits_[static_cast<std::size_t>(v) * stride_ + w]);
    return total;
}

int Digraph::in_degree(int v) const {
    int total = 0;
    for (int u = 0; u < n_; ++u)
        total += has_edge(u, v) ? 1 : 0;
    return total;
}

std::vector<std::pair<int, int>> Digraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_edge(u, v))
                out.emplace_back(u, v);
    return out;
}

std::vector<std::uint8_t> Digraph::packed_bits() const {
    std::vector<std::uint8_t> out((static_cast<std::size_t>(n_) * n_ + 7) / 8, 0);
    std::size_t bit = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v, ++bit)
            if (has_edge(u, v))
                out[bit >> 3] |= static_cast<std::uint8_t>(0x80u >> (bit & 7));
    return out;
}

Digraph Digraph::induced(const std::vector<int>& vertices) const {
    Digraph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (has_edge(vertices[i], vertices[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Digraph Digraph::relabeled(const std::vector<int>& perm) const {
    Digraph out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_edge(u, v))
                out.add_edge(perm[u], perm[v]);
    return out;
}

Digraph transpose(const Digraph& g) {
    Digraph out(g.n());
    for (auto [u, v] : g.edges())
        out.add_edge(v, u);
    return out;
}

Digraph disjoint_union(const Digraph& g, const Digraph& h) {
    Digraph out(g.n() + h.n());
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    for (auto [u, v] : h.edges())
        out.add_edge(g.n() + u, g.n() + v);
    return out;
}

Digraph saturate_loops(const Digraph& g) {
    Digraph out = g;
    for (int v = 0; v < g.n(); ++v)
        out.add_edge(v, v);
    return out;
}

Digraph strip_loops(const Digraph& g) {
    Digraph out = g;
    for (int v = 0; v < g.n(); ++v)
        out.remove_edge(v, v);
    return out;
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n < 1)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected positive vertex count");
            continue;
        }
        int u = 0, v = 0;
        if (!(fields >> u >> v) || u < 1 || v < 1 || u > n || v > n)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected edge \"u v\" with 1 <= u,v <= " +
                                        std::to_string(n));
        edges.emplace_back(u - 1, v - 1);
    }
    if (n < 0)
        throw std::invalid_argument("missing vertex count line");
    return Digraph(n, edges);
}

std::string format_digraph(const Digraph& g) {
    std::ostringstream out;
    out << g.n() << "\n";
    for (auto [u, v] : g.edges())
        out << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

std::string to_dot(const Digraph& g, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (int v = 0; v < g.n(); ++v)
        out << "  " << (v + 1) << ";\n";
    for (auto [u, v] : g.edges()) {
        out << "  " << (u + 1) << " -> " << (v + 1);
        if (u == v)
            out << " [color=red]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace digdef
