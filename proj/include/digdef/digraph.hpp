#ifndef DIGDEF_DIGRAPH_HPP
#define DIGDEF_DIGRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace digdef {

/// A finite digraph on vertices 0..n-1 with loops allowed.
/// Edges are stored as a row-major adjacency bit matrix. Immutable after
/// construction except through add_edge/remove_edge, which the library only
/// uses while building a value.
class Digraph {
public:
    /// Rejects n < 1: the vertex set is always nonempty.
    explicit Digraph(int n);
    Digraph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v >> 6)] >>
                (v & 63)) & 1u;
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int edge_count() const;
    int loop_count() const;
    bool has_loop(int v) const { return has_edge(v, v); }

    int out_degree(int v) const;
    int in_degree(int v) const;

    /// All edges as ordered pairs, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Adjacency bits packed row-major into bytes, most significant bit first
    /// within each byte. Used as the body of canonical keys.
    std::vector<std::uint8_t> packed_bits() const;

    /// Subgraph induced by the given vertices; vertex i of the result is
    /// vertices[i] of this graph.
    Digraph induced(const std::vector<int>& vertices) const;

    /// Image of this graph under a relabeling: vertex v becomes perm[v].
    Digraph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Digraph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }
    bool operator!=(const Digraph& other) const { return !(*this == other); }

private:
    void check_vertex(int v) const;

    int n_;
    std::size_t stride_;  // 64-bit words per row
    std::vector<std::uint64_t> bits_;
};

/// G^T: every edge reversed.
Digraph transpose(const Digraph& g);

/// Disjoint union; vertices of h are shifted by g.n().
Digraph disjoint_union(const Digraph& g, const Digraph& h);

/// L(G): add a loop on every vertex.
Digraph saturate_loops(const Digraph& g);

/// M(G): remove every loop.
Digraph strip_loops(const Digraph& g);

/// Parses the text format: first non-comment line "n", then "u v" per edge,
/// 1-based. Lines starting with '#' are ignored. Throws std::invalid_argument
/// with a line number on malformed input.
Digraph parse_digraph(const std::string& text);

/// Renders the text format (1-based, sorted edges).
std::string format_digraph(const Digraph& g);

/// DOT rendering; loop edges are drawn in a distinct color.
std::string to_dot(const Digraph& g, const std::string& name = "G");

}  // namespace digdef

#endif
