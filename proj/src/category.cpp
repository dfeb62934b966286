#include "digdef/category.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "digdef/canonical.hpp"
#include "digdef/embed.hpp"
#include "digdef/gadgets.hpp"
#include "json.hpp"

namespace digdef {
namespace category {

namespace {

bool carries_edges(const Digraph& a, const std::vector<int>& map, const Digraph& b) {
    for (auto [x, y] : a.edges())
        if (!b.has_edge(map[x], map[y]))
            return false;
    return true;
}

// Every labeled digraph on exactly n vertices, in adjacency-mask order.
template <typename Fn>
void for_each_test_object(int n, Fn&& fn) {
    const int bits = n * n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        Digraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if ((mask >> (u * n + v)) & 1)
                    g.add_edge(u, v);
        fn(g);
    }
}

}  // namespace

bool is_valid_morphism(const MorphismTriple& f) {
    if (static_cast<int>(f.map.size()) != f.source.n())
        return false;
    for (int image : f.map)
        if (image < 0 || image >= f.target.n())
            return false;
    return carries_edges(f.source, f.map, f.target);
}

MorphismTriple identity(const Digraph& a) {
    std::vector<int> map(a.n());
    std::iota(map.begin(), map.end(), 0);
    return MorphismTriple{a, std::move(map), a};
}

MorphismTriple compose(const MorphismTriple& f, const MorphismTriple& g) {
    if (f.target != g.source)
        throw std::invalid_argument("compose: middle objects differ");
    std::vector<int> map(f.map.size());
    for (std::size_t x = 0; x < f.map.size(); ++x)
        map[x] = g.map[f.map[x]];
    return MorphismTriple{f.source, std::move(map), g.target};
}

std::vector<MorphismTriple> hom(const Digraph& a, const Digraph& b) {
    std::vector<MorphismTriple> out;
    std::vector<int> map(a.n(), 0);
    for (;;) {
        if (carries_edges(a, map, b))
            out.push_back(MorphismTriple{a, map, b});
        // next map in lexicographic order
        int pos = a.n() - 1;
        while (pos >= 0 && map[pos] == b.n() - 1)
            map[pos--] = 0;
        if (pos < 0)
            break;
        ++map[pos];
    }
    return out;
}

Digraph const_e1() {
    return gadgets::empty_graph(1);
}

Digraph const_i2() {
    Digraph g(2);
    g.add_edge(0, 1);
    return g;
}

MorphismTriple const_f1() {
    return MorphismTriple{const_e1(), {0}, const_i2()};
}

MorphismTriple const_f2() {
    return MorphismTriple{const_e1(), {1}, const_i2()};
}

bool is_mono_direct(const MorphismTriple& f) {
    std::vector<bool> hit(f.target.n(), false);
    for (int image : f.map) {
        if (hit[image])
            return false;
        hit[image] = true;
    }
    return true;
}

bool is_epi_direct(const MorphismTriple& f) {
    std::vector<bool> hit(f.target.n(), false);
    for (int image : f.map)
        hit[image] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_mono_categorical(const MorphismTriple& f) {
    const int bound = std::max(f.source.n(), f.target.n()) + 1;
    for (int n = 1; n <= bound; ++n) {
        bool ok = true;
        for_each_test_object(n, [&](const Digraph& x) {
            if (!ok)
                return;
            auto candidates = hom(x, f.source);
            for (std::size_t i = 0; i < candidates.size() && ok; ++i)
                for (std::size_t j = i + 1; j < candidates.size() && ok; ++j)
                    if (compose(candidates[i], f) == compose(candidates[j], f))
                        ok = false;
        });
        if (!ok)
            return false;
    }
    return true;
}

bool is_epi_categorical(const MorphismTriple& f) {
    const int bound = std::max(f.source.n(), f.target.n()) + 1;
    for (int n = 1; n <= bound; ++n) {
        bool ok = true;
        for_each_test_object(n, [&](const Digraph& x) {
            if (!ok)
                return;
            auto candidates = hom(f.target, x);
            for (std::size_t i = 0; i < candidates.size() && ok; ++i)
                for (std::size_t j = i + 1; j < candidates.size() && ok; ++j)
                    if (compose(f, candidates[i]) == compose(f, candidates[j]))
                        ok = false;
        });
        if (!ok)
            return false;
    }
    return true;
}

Digraph reconstruct(const Digraph& x) {
    auto points = hom(const_e1(), x);
    auto arrows = hom(const_i2(), x);
    const MorphismTriple f1 = const_f1();
    const MorphismTriple f2 = const_f2();
    Digraph out(static_cast<int>(points.size()));
    for (std::size_t a = 0; a < points.size(); ++a) {
        for (std::size_t b = 0; b < points.size(); ++b) {
            for (const MorphismTriple& h : arrows) {
                if (compose(f1, h) == points[a] && compose(f2, h) == points[b]) {
                    out.add_edge(static_cast<int>(a), static_cast<int>(b));
                    break;
                }
            }
        }
    }
    return out;
}

ObjectEncoding encode_object(const Digraph& g, const std::vector<int>& order) {
    return ObjectEncoding{g, order, gadgets::anchored(g, order)};
}

namespace {

// Kosaraju strongly connected components; returns the component id of each
// vertex.
std::vector<int> scc_ids(const Digraph& g, int& count) {
    const int n = g.n();
    std::vector<int> finish;
    finish.reserve(n);
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        // iterative DFS with explicit post-order
        std::vector<std::pair<int, int>> stack{{s, 0}};
        seen[s] = true;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            bool advanced = false;
            for (int w = next; w < n; ++w) {
                if (g.has_edge(v, w) && !seen[w]) {
                    next = w + 1;
                    seen[w] = true;
                    stack.push_back({w, 0});
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                finish.push_back(v);
                stack.pop_back();
            }
        }
    }
    std::vector<int> id(n, -1);
    count = 0;
    for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
        if (id[*it] != -1)
            continue;
        std::vector<int> stack{*it};
        id[*it] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (g.has_edge(w, v) && id[w] == -1) {
                    id[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return id;
}

[[noreturn]] void shape_error(const std::string& what) {
    throw std::invalid_argument("not an anchored digraph: " + what);
}

}  // namespace

ObjectEncoding decode_object(const Digraph& x) {
    int n = 0;
    while (n < x.n() && n + gadgets::star_size(n) < x.n())
        ++n;
    if (n == 0 || n + gadgets::star_size(n) != x.n())
        shape_error("vertex count fits no size");

    int scc_count = 0;
    std::vector<int> id = scc_ids(x, scc_count);
    std::vector<std::vector<int>> members(scc_count);
    for (int v = 0; v < x.n(); ++v)
        members[id[v]].push_back(v);

    // the attached cycles are exactly the components larger than the plain
    // part can make
    std::vector<int> cycle_by_size(2 * n + 1, -1);
    std::vector<bool> in_cycle(x.n(), false);
    for (int c = 0; c < scc_count; ++c) {
        int size = static_cast<int>(members[c].size());
        if (size <= n)
            continue;
        if (size > 2 * n || cycle_by_size[size] != -1)
            shape_error("cycle sizes are not n+1..2n");
        cycle_by_size[size] = c;
        for (int v : members[c])
            in_cycle[v] = true;
    }
    for (int size = n + 1; size <= 2 * n; ++size)
        if (cycle_by_size[size] == -1)
            shape_error("cycle sizes are not n+1..2n");

    std::vector<int> plain_vertices;
    for (int v = 0; v < x.n(); ++v)
        if (!in_cycle[v])
            plain_vertices.push_back(v);
    std::vector<int> position(x.n(), -1);
    for (std::size_t i = 0; i < plain_vertices.size(); ++i)
        position[plain_vertices[i]] = static_cast<int>(i);

    std::vector<int> order(n, -1);
    std::vector<bool> anchored_to(n, false);
    for (int size = n + 1; size <= 2 * n; ++size) {
        int c = cycle_by_size[size];
        int target = -1;
        for (int v : members[c]) {
            if (x.has_edge(v, v))
                shape_error("loop inside a cycle");
            int inside_out = 0;
            for (int w = 0; w < x.n(); ++w) {
                if (x.has_edge(v, w)) {
                    if (id[w] == c)
                        ++inside_out;
                    else if (in_cycle[w])
                        shape_error("edge between cycles");
                    else if (target != -1)
                        shape_error("several anchor edges from one cycle");
                    else
                        target = w;
                }
                if (x.has_edge(w, v) && id[w] != c)
                    shape_error("edge into a cycle");
            }
            if (inside_out != 1)
                shape_error("attached component is not a plain cycle");
        }
        if (target == -1)
            shape_error("cycle without an anchor edge");
        int pos = position[target];
        if (anchored_to[pos])
            shape_error("two cycles anchored to one vertex");
        anchored_to[pos] = true;
        order[size - n - 1] = pos;
    }

    Digraph plain(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (x.has_edge(plain_vertices[a], plain_vertices[b]))
                plain.add_edge(a, b);
    return ObjectEncoding{std::move(plain), std::move(order), x};
}

Digraph encode_morphism(const ObjectEncoding& src, const std::vector<int>& alpha,
                        const ObjectEncoding& dst) {
    const int n = src.plain.n();
    const int m = dst.plain.n();
    if (static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("encode_morphism: map arity mismatch");
    for (int image : alpha)
        if (image < 0 || image >= m)
            throw std::invalid_argument("encode_morphism: image out of range");
    // alpha acts on cycle labels: label i means plain vertex order[i]
    for (auto [a, b] : src.plain.edges()) {
        int i = static_cast<int>(std::find(src.order.begin(), src.order.end(), a) -
                                 src.order.begin());
        int j = static_cast<int>(std::find(src.order.begin(), src.order.end(), b) -
                                 src.order.begin());
        if (!dst.plain.has_edge(dst.order[alpha[i]], dst.order[alpha[j]]))
            throw std::invalid_argument("encode_morphism: not a homomorphism");
    }
    return gadgets::f_alpha(n, m, alpha);
}

bool morphism_conditions_hold(const Digraph& x, const Digraph& f, const Digraph& y,
                              int n, int m) {
    // f must be one of the function gadgets between the right sizes
    {
        std::vector<int> alpha(n, 0);
        bool found = false;
        for (;;) {
            if (isomorphic(f, gadgets::f_alpha(n, m, alpha))) {
                found = true;
                break;
            }
            int pos = n - 1;
            while (pos >= 0 && alpha[pos] == m - 1)
                alpha[pos--] = 0;
            if (pos < 0)
                break;
            ++alpha[pos];
        }
        if (!found)
            return false;
    }
    auto arrow = [&](int i, int k) {
        return is_embeddable(gadgets::cycle_to_cycle(i, k), f);
    };
    // edges between distinct vertices must transport
    for (int i = n + 1; i <= 2 * n; ++i) {
        for (int j = n + 1; j <= 2 * n; ++j) {
            if (i == j || !is_embeddable(gadgets::flag_to_flag(i, j), x))
                continue;
            for (int k = m + 1; k <= 2 * m; ++k) {
                for (int l = m + 1; l <= 2 * m; ++l) {
                    if (!arrow(i, k) || !arrow(j, l))
                        continue;
                    bool ok = k != l
                                  ? is_embeddable(gadgets::flag_to_flag(k, l), y)
                                  : is_embeddable(gadgets::flag_loop(k), y);
                    if (!ok)
                        return false;
                }
            }
        }
    }
    // loops must transport
    for (int i = n + 1; i <= 2 * n; ++i) {
        if (!is_embeddable(gadgets::flag_loop(i), x))
            continue;
        for (int k = m + 1; k <= 2 * m; ++k)
            if (arrow(i, k) && !is_embeddable(gadgets::flag_loop(k), y))
                return false;
    }
    return true;
}

SubsetRep represent_subset(const Digraph& a, const std::vector<int>& s) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("represent_subset: repeated vertex");
    for (int v : sorted)
        if (v < 0 || v >= a.n())
            throw std::invalid_argument("represent_subset: vertex out of range");
    if (sorted.empty())
        return SubsetRep{a, std::nullopt};
    Digraph carrier = gadgets::empty_graph(static_cast<int>(sorted.size()));
    return SubsetRep{a, MorphismTriple{std::move(carrier), std::move(sorted), a}};
}

bool subset_contains(const SubsetRep& rep, int v) {
    if (!rep.p)
        return false;
    MorphismTriple pick{const_e1(), {v}, rep.host};
    for (const MorphismTriple& f : hom(const_e1(), rep.p->source))
        if (compose(f, *rep.p) == pick)
            return true;
    return false;
}

RelationRep represent_relation(const std::vector<Digraph>& hosts,
                               const std::vector<std::vector<int>>& tuples) {
    const std::size_t arity = hosts.size();
    std::vector<std::vector<int>> rows = tuples;
    std::sort(rows.begin(), rows.end());
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end())
        throw std::invalid_argument("represent_relation: repeated tuple");
    for (const auto& row : rows) {
        if (row.size() != arity)
            throw std::invalid_argument("represent_relation: arity mismatch");
        for (std::size_t i = 0; i < arity; ++i)
            if (row[i] < 0 || row[i] >= hosts[i].n())
                throw std::invalid_argument("represent_relation: entry out of range");
    }
    RelationRep rep{hosts, std::nullopt, {}};
    if (rows.empty())
        return rep;
    Digraph carrier = gadgets::empty_graph(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < arity; ++i) {
        std::vector<int> images;
        images.reserve(rows.size());
        for (const auto& row : rows)
            images.push_back(row[i]);
        rep.projections.push_back(MorphismTriple{carrier, std::move(images), hosts[i]});
    }
    rep.carrier = std::move(carrier);
    return rep;
}

bool relation_contains(const RelationRep& rep, const std::vector<int>& tuple) {
    if (tuple.size() != rep.hosts.size())
        throw std::invalid_argument("relation_contains: arity mismatch");
    if (!rep.carrier)
        return false;
    for (const MorphismTriple& f : hom(const_e1(), *rep.carrier)) {
        bool all = true;
        for (std::size_t i = 0; i < rep.hosts.size(); ++i) {
            MorphismTriple pick{const_e1(), {tuple[i]}, rep.hosts[i]};
            if (compose(f, rep.projections[i]) != pick) {
                all = false;
                break;
            }
        }
        if (all)
            return true;
    }
    return false;
}

bool so_not_weakly_connected(const Digraph& g) {
    const int n = g.n();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1)
                subset.push_back(v);
        SubsetRep h = represent_subset(g, subset);
        bool inside = false, outside = false;
        for (int v = 0; v < n; ++v)
            (subset_contains(h, v) ? inside : outside) = true;
        if (!inside || !outside)
            continue;
        bool closed = true;
        for (auto [a, b] : g.edges())
            if (subset_contains(h, a) != subset_contains(h, b)) {
                closed = false;
                break;
            }
        if (closed)
            return true;
    }
    return false;
}

std::string morphism_to_json(const MorphismTriple& f) {
    nlohmann::json j;
    j["src"] = format_digraph(f.source);
    std::vector<int> one_based;
    one_based.reserve(f.map.size());
    for (int image : f.map)
        one_based.push_back(image + 1);
    j["map"] = one_based;
    j["dst"] = format_digraph(f.target);
    return j.dump();
}

}  // namespace category
}  // namespace digdef
