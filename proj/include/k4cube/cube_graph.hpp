#pragma once

// Hypercube, enhanced hypercube and generalized K4-hypercube construction,
// plus exact vertex-subset primitives over the materialized graphs.
//
// Vertex labels are n-bit integers x_n ... x_1 with x_1 the lowest bit. Family
// members are labeled by recursive halves: the top bit picks the side at the
// outermost join, the next bit the side inside that half, and so on down to
// the K4 leaves on the two low bits.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace k4cube {

using VertexId = std::uint32_t;

inline constexpr int kMaxMaterializedDimension = 24;

namespace detail {

inline void check_dimension(int n, int lo, const char* what) {
    if (n < lo || n > kMaxMaterializedDimension) {
        throw std::out_of_range(std::string(what) + ": dimension " + std::to_string(n) +
                                " outside [" + std::to_string(lo) + ", " +
                                std::to_string(kMaxMaterializedDimension) + "]");
    }
}

}  // namespace detail

/// A set of vertices of an n-dimensional graph, packed 64 per word.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(int n) : n_(n), words_(((std::size_t{1} << n) + 63) / 64, 0) {}

    static VertexSubset full(int n) {
        VertexSubset s(n);
        for (VertexId v = 0; v < s.universe(); ++v) s.insert(v);
        return s;
    }

    int dimension() const noexcept { return n_; }
    std::size_t universe() const noexcept { return std::size_t{1} << n_; }

    bool contains(VertexId v) const noexcept {
        return v < universe() && ((words_[v >> 6] >> (v & 63)) & 1u);
    }
    void insert(VertexId v) {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void erase(VertexId v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept { return size() == 0; }

    VertexSubset complement() const {
        VertexSubset c(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
        c.trim();
        return c;
    }

    std::vector<VertexId> members() const {
        std::vector<VertexId> out;
        out.reserve(size());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            for (auto w = words_[i]; w != 0; w &= w - 1) {
                out.push_back(static_cast<VertexId>(i * 64 + std::countr_zero(w)));
            }
        }
        return out;
    }

    friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

private:
    void check(VertexId v) const {
        if (v >= universe()) throw std::out_of_range("vertex outside subset universe");
    }
    void trim() {
        const auto tail = universe() % 64;
        if (tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Recursive description of one member of the K4-hypercube family: a K4 leaf
/// at dimension 2, otherwise two (d-1)-dimensional members joined by a
/// perfect matching from the 0-half to the 1-half.
struct MatchingTree {
    int dimension = 2;
    std::vector<MatchingTree> halves;    // empty at a leaf, else {left, right}
    std::vector<VertexId> matching;      // u in left  ->  matching[u] in right

    static MatchingTree leaf() { return MatchingTree{}; }

    static MatchingTree join(MatchingTree left, MatchingTree right, std::vector<VertexId> matching) {
        MatchingTree t;
        t.dimension = left.dimension + 1;
        t.halves.push_back(std::move(left));
        t.halves.push_back(std::move(right));
        t.matching = std::move(matching);
        t.validate();
        return t;
    }

    bool is_leaf() const noexcept { return halves.empty(); }

    /// Throws std::invalid_argument unless every node is well formed.
    void validate() const {
        if (dimension < 2) throw std::invalid_argument("matching tree: dimension below 2");
        if (dimension == 2) {
            if (!halves.empty() || !matching.empty())
                throw std::invalid_argument("matching tree: dimension-2 node must be a K4 leaf");
            return;
        }
        if (halves.size() != 2) throw std::invalid_argument("matching tree: internal node needs two halves");
        for (const auto& h : halves) {
            if (h.dimension != dimension - 1)
                throw std::invalid_argument("matching tree: half has wrong dimension");
            h.validate();
        }
        const std::size_t half = std::size_t{1} << (dimension - 1);
        if (matching.size() != half) throw std::invalid_argument("matching tree: matching has wrong size");
        std::vector<bool> seen(half, false);
        for (auto image : matching) {
            if (image >= half || seen[image])
                throw std::invalid_argument("matching tree: matching is not a bijection");
            seen[image] = true;
        }
    }
};

/// The tree whose every matching is the identity; builds Q_{n,n-1}.
inline MatchingTree identity_matching_tree(int n) {
    if (n < 2) throw std::out_of_range("matching tree: dimension below 2");
    if (n == 2) return MatchingTree::leaf();
    std::vector<VertexId> id(std::size_t{1} << (n - 1));
    std::iota(id.begin(), id.end(), VertexId{0});
    return MatchingTree::join(identity_matching_tree(n - 1), identity_matching_tree(n - 1), std::move(id));
}

namespace detail {

inline MatchingTree random_tree(int n, std::mt19937_64& rng) {
    if (n == 2) return MatchingTree::leaf();
    auto left = random_tree(n - 1, rng);
    auto right = random_tree(n - 1, rng);
    std::vector<VertexId> perm(std::size_t{1} << (n - 1));
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return MatchingTree::join(std::move(left), std::move(right), std::move(perm));
}

}  // namespace detail

/// Draws every matching with an unbiased shuffle from a generator seeded with
/// `seed`. Deterministic per seed within this implementation.
inline MatchingTree random_matching_tree(int n, std::uint64_t seed) {
    if (n < 2) throw std::out_of_range("matching tree: dimension below 2");
    std::mt19937_64 rng(seed);
    return detail::random_tree(n, rng);
}

struct HypercubeKind {};
struct EnhancedKind {
    int k = 0;
};
struct K4MemberKind {
    std::shared_ptr<const MatchingTree> tree;
};
using GraphKind = std::variant<HypercubeKind, EnhancedKind, K4MemberKind>;

class CubeGraph;
inline CubeGraph build_hypercube(int n);
inline CubeGraph build_enhanced(int n, int k);
inline CubeGraph build_k4cube(const MatchingTree& tree);

/// Immutable regular graph on 2^n vertices. Neighbours are kept as sorted
/// fixed-stride rows, one row of `degree()` labels per vertex.
class CubeGraph {
public:
    int dimension() const noexcept { return n_; }
    std::size_t order() const noexcept { return std::size_t{1} << n_; }
    int degree() const noexcept { return degree_; }
    std::size_t edge_count() const noexcept { return order() * static_cast<std::size_t>(degree_) / 2; }
    const GraphKind& kind() const noexcept { return kind_; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adjacency_.data() + static_cast<std::size_t>(v) * degree_, static_cast<std::size_t>(degree_)};
    }

    bool adjacent(VertexId u, VertexId v) const {
        auto row = neighbors(u);
        return std::binary_search(row.begin(), row.end(), v);
    }

    /// Sorted (u < v) edge list.
    std::vector<std::pair<VertexId, VertexId>> edges() const {
        std::vector<std::pair<VertexId, VertexId>> out;
        out.reserve(edge_count());
        for (VertexId u = 0; u < order(); ++u)
            for (auto v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    std::string describe() const {
        return std::visit(
            [this](const auto& k) -> std::string {
                using K = std::decay_t<decltype(k)>;
                const auto n = std::to_string(n_);
                if constexpr (std::is_same_v<K, HypercubeKind>) return "Q_" + n;
                else if constexpr (std::is_same_v<K, EnhancedKind>) return "Q_" + n + "," + std::to_string(k.k);
                else return "H_" + n + "^4";
            },
            kind_);
    }

private:
    friend CubeGraph build_hypercube(int);
    friend CubeGraph build_enhanced(int, int);
    friend CubeGraph build_k4cube(const MatchingTree&);

    // Builds from per-vertex neighbour lists; every list must have the same size.
    CubeGraph(int n, GraphKind kind, std::vector<std::vector<VertexId>> lists)
        : n_(n), kind_(std::move(kind)) {
        degree_ = lists.empty() ? 0 : static_cast<int>(lists.front().size());
        adjacency_.reserve(lists.size() * static_cast<std::size_t>(degree_));
        for (auto& row : lists) {
            if (static_cast<int>(row.size()) != degree_) throw std::logic_error("cube graph: irregular construction");
            std::sort(row.begin(), row.end());
            adjacency_.insert(adjacency_.end(), row.begin(), row.end());
        }
    }

    int n_ = 0;
    int degree_ = 0;
    GraphKind kind_;
    std::vector<VertexId> adjacency_;
};

inline CubeGraph build_hypercube(int n) {
    detail::check_dimension(n, 1, "hypercube");
    const VertexId N = VertexId{1} << n;
    std::vector<std::vector<VertexId>> lists(N);
    for (VertexId u = 0; u < N; ++u) {
        lists[u].reserve(n);
        for (int b = 0; b < n; ++b) lists[u].push_back(u ^ (VertexId{1} << b));
    }
    return CubeGraph(n, HypercubeKind{}, std::move(lists));
}

/// Q_n plus every k-complementary edge: keep the top k-1 bits, flip the low
/// n-k+1 bits.
inline CubeGraph build_enhanced(int n, int k) {
    detail::check_dimension(n, 2, "enhanced hypercube");
    if (k < 1 || k > n - 1) {
        throw std::out_of_range("enhanced hypercube: k=" + std::to_string(k) + " outside [1, n-1]");
    }
    const VertexId N = VertexId{1} << n;
    const VertexId flip = (VertexId{1} << (n - k + 1)) - 1;
    std::vector<std::vector<VertexId>> lists(N);
    for (VertexId u = 0; u < N; ++u) {
        lists[u].reserve(n + 1);
        for (int b = 0; b < n; ++b) lists[u].push_back(u ^ (VertexId{1} << b));
        lists[u].push_back(u ^ flip);
    }
    return CubeGraph(n, EnhancedKind{k}, std::move(lists));
}

namespace detail {

inline void assemble(const MatchingTree& t, VertexId offset, std::vector<std::vector<VertexId>>& lists) {
    if (t.is_leaf()) {
        for (VertexId a = 0; a < 4; ++a)
            for (VertexId b = 0; b < 4; ++b)
                if (a != b) lists[offset + a].push_back(offset + b);
        return;
    }
    const VertexId half = VertexId{1} << (t.dimension - 1);
    assemble(t.halves[0], offset, lists);
    assemble(t.halves[1], offset + half, lists);
    for (VertexId u = 0; u < half; ++u) {
        const VertexId v = offset + half + t.matching[u];
        lists[offset + u].push_back(v);
        lists[v].push_back(offset + u);
    }
}

}  // namespace detail

inline CubeGraph build_k4cube(const MatchingTree& tree) {
    tree.validate();
    detail::check_dimension(tree.dimension, 2, "K4-hypercube");
    std::vector<std::vector<VertexId>> lists(std::size_t{1} << tree.dimension);
    for (auto& l : lists) l.reserve(static_cast<std::size_t>(tree.dimension) + 1);
    detail::assemble(tree, 0, lists);
    return CubeGraph(tree.dimension, K4MemberKind{std::make_shared<const MatchingTree>(tree)}, std::move(lists));
}

/// L_m^n = {0, 1, ..., m-1}.
inline VertexSubset canonical_set(std::uint64_t m, int n) {
    if (n < 0 || n > kMaxMaterializedDimension) throw std::out_of_range("canonical set: dimension out of range");
    if (m > (std::uint64_t{1} << n)) throw std::out_of_range("canonical set: m exceeds 2^n");
    VertexSubset s(n);
    for (std::uint64_t v = 0; v < m; ++v) s.insert(static_cast<VertexId>(v));
    return s;
}

/// The 2^l vertices whose top n-l bits equal `prefix`.
inline VertexSubset subcube_vertices(int n, int l, std::uint64_t prefix) {
    if (n < 0 || n > kMaxMaterializedDimension || l < 0 || l > n)
        throw std::out_of_range("subcube: dimension out of range");
    if (prefix >= (std::uint64_t{1} << (n - l))) throw std::out_of_range("subcube: prefix out of range");
    VertexSubset s(n);
    const std::uint64_t base = prefix << l;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << l); ++i) s.insert(static_cast<VertexId>(base + i));
    return s;
}

namespace detail {

inline void check_same_universe(const CubeGraph& g, const VertexSubset& x) {
    if (x.dimension() != g.dimension()) throw std::invalid_argument("vertex subset dimension does not match graph");
}

}  // namespace detail

/// |E(g[X])|
inline std::size_t induced_edge_count(const CubeGraph& g, const VertexSubset& x) {
    detail::check_same_universe(g, x);
    std::size_t twice = 0;
    for (auto v : x.members())
        for (auto w : g.neighbors(v))
            if (x.contains(w)) ++twice;
    return twice / 2;
}

/// |[X, complement of X]|
inline std::size_t boundary_size(const CubeGraph& g, const VertexSubset& x) {
    detail::check_same_universe(g, x);
    std::size_t cut = 0;
    for (auto v : x.members())
        for (auto w : g.neighbors(v))
            if (!x.contains(w)) ++cut;
    return cut;
}

/// Empty sets and singletons count as connected.
inline bool is_connected_induced(const CubeGraph& g, const VertexSubset& x) {
    detail::check_same_universe(g, x);
    const auto members = x.members();
    if (members.size() <= 1) return true;
    VertexSubset seen(g.dimension());
    std::vector<VertexId> stack{members.front()};
    seen.insert(members.front());
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : g.neighbors(v)) {
            if (x.contains(w) && !seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
                ++reached;
            }
        }
    }
    return reached == members.size();
}

/// Square bit matrix; row u holds the adjacency row of vertex u.
class BitMatrix {
public:
    explicit BitMatrix(std::size_t size) : size_(size), words_per_row_((size + 63) / 64), bits_(size * words_per_row_, 0) {}

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t r, std::size_t c) const noexcept {
        return (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c) noexcept { bits_[r * words_per_row_ + c / 64] |= std::uint64_t{1} << (c % 64); }
    std::size_t row_count(std::size_t r) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_per_row_; ++i) c += static_cast<std::size_t>(std::popcount(bits_[r * words_per_row_ + i]));
        return c;
    }

private:
    std::size_t size_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> bits_;
};

inline constexpr int kMaxBitmapDimension = 14;

inline BitMatrix adjacency_bitmap(const CubeGraph& g) {
    if (g.dimension() > kMaxBitmapDimension) throw std::out_of_range("adjacency bitmap: graph too large to materialize");
    BitMatrix m(g.order());
    for (VertexId u = 0; u < g.order(); ++u)
        for (auto v : g.neighbors(u)) m.set(u, v);
    return m;
}

/// Plain PBM ("P1"): '0' (white) marks an edge, '1' (black) a non-edge, one
/// text line per matrix row.
inline void write_pbm(std::ostream& os, const BitMatrix& m) {
    os << "P1\n" << m.size() << ' ' << m.size() << '\n';
    std::string line(m.size(), '1');
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) line[c] = m.test(r, c) ? '0' : '1';
        os << line << '\n';
    }
}

}  // namespace k4cube
