#include "digdef/universe.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "digdef/embed.hpp"
#include "digdef/gadgets.hpp"

namespace digdef {

BitMatrix::BitMatrix(std::size_t n) : n_(n), stride_((n + 63) / 64) {
    words_.assign(n_ * stride_, 0);
}

void BitMatrix::set(std::size_t i, std::size_t j, bool value) {
    std::uint64_t bit = std::uint64_t{1} << (j & 63);
    if (value)
        words_[i * stride_ + (j >> 6)] |= bit;
    else
        words_[i * stride_ + (j >> 6)] &= ~bit;
}

namespace {

// One representative per isomorphism type on exactly n vertices: keep the
// adjacency masks that are lexicographically minimal over all vertex
// permutations (row-major, position (i,j) most significant first).
std::vector<Digraph> types_on(int n) {
    if (n > 5)
        throw std::invalid_argument("universe bound above 5 is not supported");
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        while (std::next_permutation(p.begin(), p.end()))
            perms.push_back(p);
    }
    const int bits = n * n;
    std::vector<Digraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        bool canonical = true;
        for (const auto& p : perms) {
            // first differing bit position decides; a smaller permuted image
            // disqualifies mask
            int cmp = 0;
            for (int pos = 0; pos < bits; ++pos) {
                int i = pos / n, j = pos % n;
                int src = p[i] * n + p[j];
                int mine = (mask >> pos) & 1;
                int theirs = (mask >> src) & 1;
                if (mine != theirs) {
                    cmp = theirs < mine ? -1 : 1;
                    break;
                }
            }
            if (cmp < 0) {
                canonical = false;
                break;
            }
        }
        if (!canonical)
            continue;
        Digraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if ((mask >> (u * n + v)) & 1)
                    g.add_edge(u, v);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

std::optional<int> Universe::find(const Digraph& g) const {
    auto it = index_by_key.find(canonicalize(g).key);
    if (it == index_by_key.end())
        return std::nullopt;
    return it->second;
}

int Universe::require(const Digraph& g) const {
    auto idx = find(g);
    if (!idx)
        throw std::invalid_argument("digraph lies outside the universe bound");
    return *idx;
}

int Universe::type_count_for(int n) const {
    int count = 0;
    for (int vc : vertex_count)
        count += vc == n ? 1 : 0;
    return count;
}

int Universe::empty_index(int n) const {
    auto it = index_by_key.find(canonicalize(gadgets::empty_graph(n)).key);
    if (it == index_by_key.end())
        throw std::invalid_argument("empty graph outside universe");
    return it->second;
}

int Universe::all_loops_index(int n) const {
    auto it = index_by_key.find(canonicalize(gadgets::loops_graph(n)).key);
    if (it == index_by_key.end())
        throw std::invalid_argument("loops graph outside universe");
    return it->second;
}

bool Universe::vertex_count_pair(int g, int e) const {
    return e == empty_index(vertex_count[g]);
}

bool Universe::loop_count_pair(int g, int l) const {
    return loops[g] >= 1 && l == all_loops_index(loops[g]);
}

std::vector<int> Universe::covers_of(int t) const {
    std::vector<int> out;
    for (std::size_t j = 0; j < types.size(); ++j)
        if (covers.get(t, j))
            out.push_back(static_cast<int>(j));
    return out;
}

Universe enumerate_universe(int bound, int threads) {
    if (bound < 1 || bound > 5)
        throw std::invalid_argument("universe bound must be in 1..5");
    Universe u;
    u.bound = bound;
    for (int n = 1; n <= bound; ++n) {
        std::vector<Digraph> reps = types_on(n);
        std::vector<IsoClass> classes;
        classes.reserve(reps.size());
        for (auto& g : reps)
            classes.push_back(canonicalize(g));
        std::sort(classes.begin(), classes.end());
        for (auto& cls : classes)
            u.types.push_back(std::move(cls));
    }
    const std::size_t count = u.types.size();
    for (std::size_t i = 0; i < count; ++i) {
        u.index_by_key.emplace(u.types[i].key, static_cast<int>(i));
        u.vertex_count.push_back(u.types[i].canonical.n());
        u.loops.push_back(u.types[i].canonical.loop_count());
    }
    for (std::size_t i = 0; i < count; ++i)
        u.strip_index.push_back(
            u.index_by_key.at(canonicalize(strip_loops(u.types[i].canonical)).key));

    u.leq = BitMatrix(count);
    {
        int workers = std::max(1, threads);
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                for (std::size_t j = 0; j < count; ++j) {
                    if (u.vertex_count[i] > u.vertex_count[j])
                        continue;
                    if (is_embeddable(u.types[i].canonical, u.types[j].canonical))
                        u.leq.set(i, j, true);
                }
            }
        };
        // rows are independent and each row touches its own words only
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    // covers(i,j): leq(i,j), i != j, interval [i,j] contains nothing else.
    BitMatrix down(count);  // down.get(j,k) iff leq(k,j)
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            if (u.leq.get(i, j))
                down.set(j, i, true);
    u.covers = BitMatrix(count);
    const std::size_t stride = u.leq.stride();
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (i == j || !u.leq.get(i, j))
                continue;
            int between = 0;
            const std::uint64_t* up_row = u.leq.words().data() + i * stride;
            const std::uint64_t* down_row = down.words().data() + j * stride;
            for (std::size_t w = 0; w < stride; ++w)
                between += std::popcount(up_row[w] & down_row[w]);
            if (between == 2)  // only i and j themselves
                u.covers.set(i, j, true);
        }
    }
    return u;
}

namespace {

constexpr char kMagic[4] = {'D', 'D', 'U', '1'};

template <typename T>
void write_raw(std::ostream& out, const T& value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
void read_raw(std::istream& in, T& value) {
    in.read(reinterpret_cast<char*>(&value), sizeof(T));
}

}  // namespace

void save_universe(const Universe& u, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write universe cache: " + path);
    out.write(kMagic, 4);
    write_raw(out, std::int32_t{1});  // format version
    write_raw(out, std::int32_t{u.bound});
    write_raw(out, static_cast<std::uint64_t>(u.types.size()));
    for (const auto& cls : u.types) {
        write_raw(out, static_cast<std::uint8_t>(cls.canonical.n()));
        auto bits = cls.canonical.packed_bits();
        out.write(reinterpret_cast<const char*>(bits.data()),
                  static_cast<std::streamsize>(bits.size()));
    }
    auto dump = [&](const BitMatrix& m) {
        out.write(reinterpret_cast<const char*>(m.words().data()),
                  static_cast<std::streamsize>(m.words().size() * sizeof(std::uint64_t)));
    };
    dump(u.leq);
    dump(u.covers);
    if (!out)
        throw std::runtime_error("short write on universe cache: " + path);
}

Universe load_universe(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read universe cache: " + path);
    char magic[4];
    in.read(magic, 4);
    std::int32_t version = 0, bound = 0;
    read_raw(in, version);
    read_raw(in, bound);
    if (!in || std::memcmp(magic, kMagic, 4) != 0 || version != 1)
        throw std::runtime_error("not a universe cache: " + path);
    std::uint64_t count = 0;
    read_raw(in, count);

    Universe u;
    u.bound = bound;
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint8_t n = 0;
        read_raw(in, n);
        std::vector<std::uint8_t> bytes((static_cast<std::size_t>(n) * n + 7) / 8);
        in.read(reinterpret_cast<char*>(bytes.data()),
                static_cast<std::streamsize>(bytes.size()));
        Digraph g(n);
        std::size_t bit = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b, ++bit)
                if (bytes[bit >> 3] & (0x80u >> (bit & 7)))
                    g.add_edge(a, b);
        std::string key;
        key.push_back(static_cast<char>(n));
        for (std::uint8_t byte : bytes)
            key.push_back(static_cast<char>(byte));
        u.types.push_back(IsoClass{std::move(g), std::move(key)});
    }
    for (std::size_t i = 0; i < u.types.size(); ++i) {
        u.index_by_key.emplace(u.types[i].key, static_cast<int>(i));
        u.vertex_count.push_back(u.types[i].canonical.n());
        u.loops.push_back(u.types[i].canonical.loop_count());
    }
    for (std::size_t i = 0; i < u.types.size(); ++i)
        u.strip_index.push_back(
            u.index_by_key.at(canonicalize(strip_loops(u.types[i].canonical)).key));

    auto slurp = [&](BitMatrix& m) {
        m = BitMatrix(u.types.size());
        in.read(reinterpret_cast<char*>(m.words().data()),
                static_cast<std::streamsize>(m.words().size() * sizeof(std::uint64_t)));
    };
    slurp(u.leq);
    slurp(u.covers);
    if (!in)
        throw std::runtime_error("truncated universe cache: " + path);
    return u;
}

ExtremalResult extremal_with(const Universe& u, const std::function<bool(int)>& pred,
                             ExtremalMode mode) {
    const int count = static_cast<int>(u.types.size());
    std::vector<int> holders;
    for (int i = 0; i < count; ++i)
        if (pred(i))
            holders.push_back(i);
    ExtremalResult out;
    for (int x : holders) {
        bool extremal = true;
        for (int y : holders) {
            if (x == y)
                continue;
            bool beats = mode == ExtremalMode::maximal ? u.lt(x, y) : u.lt(y, x);
            if (beats) {
                extremal = false;
                break;
            }
        }
        if (extremal) {
            out.elems.push_back(x);
            if (mode == ExtremalMode::maximal && u.vertex_count[x] == u.bound)
                out.bound_caveat = true;
        }
    }
    return out;
}

std::vector<std::array<int, 3>> frak_e_plus(const Universe& u) {
    std::vector<std::array<int, 3>> out;
    for (int n = 1; n <= u.bound; ++n)
        for (int m = 1; n + m <= u.bound; ++m)
            out.push_back({u.empty_index(n), u.empty_index(m), u.empty_index(n + m)});
    return out;
}

std::vector<std::array<int, 2>> interval_relation(const Universe& u) {
    std::vector<std::array<int, 2>> out;
    for (int n = 1; n <= u.bound; ++n)
        for (int m = n + 1; m <= 2 * n && m <= u.bound; ++m)
            out.push_back({u.empty_index(n), u.empty_index(m)});
    return out;
}

std::string hasse_dot(const Universe& u, const std::function<bool(int)>& pred) {
    std::vector<int> nodes;
    for (int i = 0; i < static_cast<int>(u.types.size()); ++i)
        if (pred(i))
            nodes.push_back(i);
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (int i : nodes)
        out << "  t" << i << " [label=\"" << key_hex(u.types[i]) << "\"];\n";
    // covers of the induced sub-poset
    for (int i : nodes) {
        for (int j : nodes) {
            if (!u.lt(i, j))
                continue;
            bool direct = true;
            for (int k : nodes)
                if (k != i && k != j && u.lt(i, k) && u.lt(k, j)) {
                    direct = false;
                    break;
                }
            if (direct)
                out << "  t" << i << " -> t" << j << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace digdef
