#ifndef DIGDEF_UNIVERSE_HPP
#define DIGDEF_UNIVERSE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "digdef/canonical.hpp"
#include "digdef/digraph.hpp"

namespace digdef {

/// Packed square boolean matrix.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n);
    bool get(std::size_t i, std::size_t j) const {
        return (words_[i * stride_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool value);
    std::size_t size() const { return n_; }
    std::size_t stride() const { return stride_; }
    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

private:
    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> words_;
};

/// All isomorphism types with 1..N vertices, the embeddability order and its
/// cover relation, plus the per-type counts every derived relation needs.
/// Types are ordered by vertex count, then canonical key; indices are stable
/// for a given N.
struct Universe {
    int bound = 0;
    std::vector<IsoClass> types;
    std::vector<int> vertex_count;  // per type
    std::vector<int> loops;         // per type
    std::vector<int> strip_index;   // index of the loop-stripped type
    BitMatrix leq;
    BitMatrix covers;
    std::unordered_map<std::string, int> index_by_key;

    bool leq_at(int i, int j) const { return leq.get(i, j); }
    bool lt(int i, int j) const { return i != j && leq.get(i, j); }
    bool covers_at(int i, int j) const { return covers.get(i, j); }

    std::optional<int> find(const Digraph& g) const;
    /// Index of g's type; throws std::invalid_argument when outside the bound.
    int require(const Digraph& g) const;

    int type_count_for(int n) const;

    // same vertex count / same loop count / same loop-stripped type
    bool frak_e(int i, int j) const { return vertex_count[i] == vertex_count[j]; }
    bool frak_l(int i, int j) const { return loops[i] == loops[j]; }
    bool frak_m(int i, int j) const { return strip_index[i] == strip_index[j]; }

    /// Index of E_n / L_n (1 <= n <= bound).
    int empty_index(int n) const;
    int all_loops_index(int n) const;

    /// (G, E_n) with E_n <= G and E_{n+1} not <= G holds iff n is G's vertex
    /// count; same shape for loops with L_n. Exposed as lookups.
    bool vertex_count_pair(int g, int e) const;
    bool loop_count_pair(int g, int l) const;

    std::vector<int> covers_of(int t) const;
};

/// Exhaustive enumeration plus the pairwise embeddability matrix. threads
/// caps the worker count for the matrix; results are identical for any cap.
Universe enumerate_universe(int bound, int threads = 1);

void save_universe(const Universe& u, const std::string& path);
Universe load_universe(const std::string& path);

struct ExtremalResult {
    std::vector<int> elems;
    /// Set when some reported element touches the vertex bound, so a larger
    /// (resp. smaller-incomparable) witness might exist outside the universe.
    bool bound_caveat = false;
};

enum class ExtremalMode { maximal, minimal };

ExtremalResult extremal_with(const Universe& u, const std::function<bool(int)>& pred,
                             ExtremalMode mode);

/// (E_n, E_m, E_{n+m}) triples with n+m within the bound, as index triples.
std::vector<std::array<int, 3>> frak_e_plus(const Universe& u);

/// (E_n, E_m) with n < m <= 2n, as index pairs (m within the bound).
std::vector<std::array<int, 2>> interval_relation(const Universe& u);

/// DOT rendering of the Hasse diagram of the sub-poset induced by the types
/// selected by pred.
std::string hasse_dot(const Universe& u, const std::function<bool(int)>& pred);

}  // namespace digdef

#endif
