#pragma once

// Brute-force oracles for the isoperimetric and edge-connectivity values of a
// materialized graph. Nothing here consults the closed forms; the two are
// only compared in verify_member.
//
// Every connectivity parameter computed here is a minimum over bipartitions
// (X, complement) with both sides connected. A minimum conditional edge-cut of
// these graphs leaves exactly two components, so that search space is
// complete; unrestricted_edge_cut_search re-derives this on small graphs by
// enumerating raw edge subsets.
//
// Small graphs (n <= budget.max_n_exhaustive) are scanned as all 2^(2^n)
// vertex bitmasks. Larger ones are searched by enumerating connected vertex
// sets up to a size cap with branch-and-bound pruning.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "k4cube/closed_form.hpp"
#include "k4cube/cube_graph.hpp"

namespace k4cube {

inline constexpr int kMaxOracleDimension = 6;

struct OracleBudget {
    int max_n_exhaustive = 4;
    int max_subset_size_bounded = 10;
    std::uint64_t node_limit = 4'000'000'000ULL;

    void validate() const {
        if (max_n_exhaustive <= 0 || max_subset_size_bounded <= 0 || node_limit == 0)
            throw std::invalid_argument("oracle budget fields must be positive");
    }
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Graph on at most 64 vertices with one adjacency word per vertex.
class MaskGraph {
public:
    using Mask = std::uint64_t;

    explicit MaskGraph(const CubeGraph& g) : n_(g.dimension()), order_(static_cast<int>(g.order())), degree_(g.degree()) {
        if (n_ > kMaxOracleDimension) throw std::out_of_range("oracle: dimension above " + std::to_string(kMaxOracleDimension));
        for (VertexId v = 0; v < g.order(); ++v)
            for (auto w : g.neighbors(v)) adj_[v] |= Mask{1} << w;
        all_ = order_ == 64 ? ~Mask{0} : (Mask{1} << order_) - 1;
    }

    int dimension() const noexcept { return n_; }
    int order() const noexcept { return order_; }
    int degree() const noexcept { return degree_; }
    Mask all() const noexcept { return all_; }
    Mask adj(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }

    /// 2 |E(G[X])|
    int degree_sum(Mask x) const noexcept {
        int s = 0;
        for (Mask r = x; r != 0; r &= r - 1) s += std::popcount(adj(std::countr_zero(r)) & x);
        return s;
    }

    /// Number of edges between x and y (disjoint).
    int edges_between(Mask x, Mask y) const noexcept {
        int s = 0;
        for (Mask r = x; r != 0; r &= r - 1) s += std::popcount(adj(std::countr_zero(r)) & y);
        return s;
    }

    int cut(Mask x) const noexcept { return edges_between(x, all_ & ~x); }

    int min_induced_degree(Mask x) const noexcept {
        int best = std::numeric_limits<int>::max();
        for (Mask r = x; r != 0; r &= r - 1) best = std::min(best, std::popcount(adj(std::countr_zero(r)) & x));
        return best;
    }

    /// Empty and single-vertex sets count as connected.
    bool connected(Mask x) const noexcept {
        if (x == 0) return true;
        Mask seen = x & (~x + 1);
        Mask frontier = seen;
        while (frontier != 0) {
            Mask next = 0;
            for (Mask r = frontier; r != 0; r &= r - 1) next |= adj(std::countr_zero(r));
            next &= x & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == x;
    }

private:
    int n_;
    int order_;
    int degree_;
    Mask all_ = 0;
    std::array<Mask, 64> adj_{};
};

using Mask = MaskGraph::Mask;

/// Predicate a side of a bipartition must satisfy.
using SidePredicate = std::function<bool(const MaskGraph&, Mask)>;

namespace detail {

class NodeCounter {
public:
    explicit NodeCounter(std::uint64_t limit) : limit_(limit) {}
    void tick(std::uint64_t k = 1) {
        count_ += k;
        if (count_ > limit_) throw BudgetExceeded("oracle: node limit of " + std::to_string(limit_) + " exceeded");
    }
    std::uint64_t count() const noexcept { return count_; }

private:
    std::uint64_t limit_;
    std::uint64_t count_ = 0;
};

inline void check_oracle_graph(const CubeGraph& g) {
    if (g.dimension() > kMaxOracleDimension)
        throw std::out_of_range("oracle: dimension above " + std::to_string(kMaxOracleDimension));
}

inline bool exhaustive_mode(const MaskGraph& g, const OracleBudget& b) { return g.dimension() <= b.max_n_exhaustive; }

// Enumerates every connected vertex set of size at most `cap` exactly once,
// as (set, size, cut, degree_sum, excluded). `excluded` holds vertices that no
// set further down the current branch can contain. A visitor returning false
// prunes every superset reachable from that branch.
template <class Visitor>
class ConnectedSetSearch {
public:
    ConnectedSetSearch(const MaskGraph& g, int cap, NodeCounter& counter, Visitor& visit)
        : g_(g), cap_(cap), counter_(counter), visit_(visit) {}

    void run() {
        for (int v = 0; v < g_.order(); ++v) {
            const Mask root = Mask{1} << v;
            const Mask below = root - 1;
            descend(root, 1, g_.adj(v) & ~below, below, g_.degree(), 0);
        }
    }

private:
    void descend(Mask x, int size, Mask cand, Mask excluded, int cut, int degree_sum) {
        counter_.tick();
        if (!visit_(x, size, cut, degree_sum, excluded)) return;
        if (size == cap_) return;
        while (cand != 0) {
            const int w = std::countr_zero(cand);
            const Mask bit = Mask{1} << w;
            const int inside = std::popcount(g_.adj(w) & x);
            const Mask nx = x | bit;
            descend(nx, size + 1, (cand | g_.adj(w)) & ~nx & ~excluded, excluded, cut + g_.degree() - 2 * inside,
                    degree_sum + 2 * inside);
            excluded |= bit;
            cand &= ~bit;
        }
    }

    const MaskGraph& g_;
    int cap_;
    NodeCounter& counter_;
    Visitor& visit_;
};

// Minimum cut over bipartitions (X, complement) with both sides connected,
// min_size <= |X| <= max_size and both sides accepted by `side_ok`.
inline std::optional<int> min_bipartition_exhaustive(const MaskGraph& g, int min_size, int max_size,
                                                     const SidePredicate& side_ok, NodeCounter& counter) {
    std::optional<int> best;
    const Mask all = g.all();
    for (Mask x = 1; x < all; ++x) {
        counter.tick();
        const int size = std::popcount(x);
        if (size < min_size || size > max_size) continue;
        const int c = g.cut(x);
        if (best && c >= *best) continue;
        const Mask y = all & ~x;
        if (!g.connected(x) || !g.connected(y)) continue;
        if (side_ok && (!side_ok(g, x) || !side_ok(g, y))) continue;
        best = c;
    }
    return best;
}

inline std::optional<int> min_bipartition_bounded(const MaskGraph& g, int min_size, int max_size,
                                                  const SidePredicate& side_ok, NodeCounter& counter) {
    std::optional<int> best;
    const int degree = g.degree();
    auto visit = [&](Mask x, int size, int cut, int, Mask excluded) {
        // Lower bounds on the cut of any X' reachable from here: edges into
        // excluded vertices stay cut, and each added vertex removes at most
        // `degree` edges from the cut.
        if (best) {
            const int reach = cut - degree * (max_size - size);
            if (reach >= *best || g.edges_between(x, excluded) >= *best) return false;
        }
        if (size >= min_size && (!best || cut < *best)) {
            const Mask y = g.all() & ~x;
            if (g.connected(y) && (!side_ok || (side_ok(g, x) && side_ok(g, y)))) best = cut;
        }
        return true;
    };
    ConnectedSetSearch<decltype(visit)> search(g, max_size, counter, visit);
    search.run();
    return best;
}

inline int required_bounded_size(const MaskGraph& g, int needed, const OracleBudget& b, const char* what) {
    if (needed > b.max_subset_size_bounded) {
        throw BudgetExceeded(std::string(what) + ": needs subsets of size " + std::to_string(needed) +
                             " but the bounded budget allows " + std::to_string(b.max_subset_size_bounded));
    }
    return std::min(needed, g.order() / 2);
}

inline std::optional<int> min_bipartition(const MaskGraph& g, int min_size, int max_size, const SidePredicate& side_ok,
                                          const OracleBudget& b, const char* what) {
    NodeCounter counter(b.node_limit);
    if (exhaustive_mode(g, b)) return min_bipartition_exhaustive(g, min_size, max_size, side_ok, counter);
    required_bounded_size(g, max_size, b, what);
    return min_bipartition_bounded(g, min_size, max_size, side_ok, counter);
}

inline int require_feasible(std::optional<int> v, const char* what) {
    if (!v) throw std::logic_error(std::string(what) + ": no feasible bipartition");
    return *v;
}

inline void check_size(const MaskGraph& g, int m, int lo, int hi, const char* what) {
    if (m < lo || m > hi)
        throw std::out_of_range(std::string(what) + ": size " + std::to_string(m) + " outside [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "]");
    (void)g;
}

// Visits every m-subset of the vertex set in increasing bitmask order.
template <class F>
void for_each_subset_of_size(const MaskGraph& g, int m, NodeCounter& counter, F&& f) {
    if (m == 0) {
        f(Mask{0});
        return;
    }
    const int order = g.order();
    if (m > order) return;
    Mask x = m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
    const Mask all = g.all();
    while (true) {
        counter.tick();
        f(x);
        if (x == (all & ~((Mask{1} << (order - m)) - 1))) break;  // top m bits set
        const Mask low = x & (~x + 1);
        const Mask ripple = x + low;
        x = ripple | (((x ^ ripple) >> 2) / low);
    }
}

}  // namespace detail

/// max over |X| = m of 2 |E(G[X])|.
inline int brute_ex(const CubeGraph& graph, int m, const OracleBudget& budget = {}) {
    budget.validate();
    detail::check_oracle_graph(graph);
    const MaskGraph g(graph);
    detail::check_size(g, m, 0, g.order(), "brute_ex");
    if (m <= 1) return 0;
    detail::NodeCounter counter(budget.node_limit);
    if (detail::exhaustive_mode(g, budget)) {
        int best = 0;
        for (Mask x = 1;; ++x) {
            counter.tick();
            if (std::popcount(x) == m) best = std::max(best, g.degree_sum(x));
            if (x == g.all()) break;
        }
        return best;
    }
    if (m > budget.max_subset_size_bounded)
        throw BudgetExceeded("brute_ex: size " + std::to_string(m) + " above the bounded budget");
    // Bounded mode only looks at connected m-sets. brute_xi_unconstrained
    // scans every m-subset, and xi^e = (n+1) m - ex on a regular graph, so the
    // two routes check each other. Each further vertex adds at most
    // 2 * min(degree, current size) to the degree sum.
    int best = 0;
    const int degree = g.degree();
    auto visit = [&](Mask, int size, int, int degree_sum, Mask) {
        if (size == m) {
            best = std::max(best, degree_sum);
            return false;
        }
        int reach = degree_sum;
        for (int s = size; s < m; ++s) reach += 2 * std::min(degree, s);
        return reach > best;
    };
    detail::ConnectedSetSearch<decltype(visit)> search(g, m, counter, visit);
    search.run();
    return best;
}

/// min |[X, complement]| over |X| = m with both sides connected.
inline int brute_xi(const CubeGraph& graph, int m, const OracleBudget& budget = {}) {
    budget.validate();
    detail::check_oracle_graph(graph);
    const MaskGraph g(graph);
    detail::check_size(g, m, 1, g.order() / 2, "brute_xi");
    return detail::require_feasible(detail::min_bipartition(g, m, m, {}, budget, "brute_xi"), "brute_xi");
}

/// min |[X, complement]| over all |X| = m, no connectivity requirement.
inline int brute_xi_unconstrained(const CubeGraph& graph, int m, const OracleBudget& budget = {}) {
    budget.validate();
    detail::check_oracle_graph(graph);
    const MaskGraph g(graph);
    detail::check_size(g, m, 1, g.order() / 2, "brute_xi_unconstrained");
    if (!detail::exhaustive_mode(g, budget) && m > budget.max_subset_size_bounded)
        throw BudgetExceeded("brute_xi_unconstrained: size " + std::to_string(m) + " above the bounded budget");
    detail::NodeCounter counter(budget.node_limit);
    int best = std::numeric_limits<int>::max();
    detail::for_each_subset_of_size(g, m, counter, [&](Mask x) { best = std::min(best, g.cut(x)); });
    return best;
}

/// h-extra edge-connectivity: min cut over connected bipartitions with
/// h <= |X| <= 2^{n-1}.
inline int brute_lambda_h(const CubeGraph& graph, int h, const OracleBudget& budget = {}) {
    budget.validate();
    detail::check_oracle_graph(graph);
    const MaskGraph g(graph);
    detail::check_size(g, h, 1, g.order() / 2, "brute_lambda_h");
    return detail::require_feasible(detail::min_bipartition(g, h, g.order() / 2, {}, budget, "brute_lambda_h"),
                                    "brute_lambda_h");
}

/// Side predicate for a fault pattern at level l. Embedded uses the
/// prefix-aligned l-dimensional subcubes of the recursive labeling.
inline SidePredicate side_predicate(FaultPattern pattern, int l) {
    switch (pattern) {
        case FaultPattern::SuperDegree:
            return [l](const MaskGraph& g, Mask x) { return g.min_induced_degree(x) >= l; };
        case FaultPattern::AverageDegree:
            return [l](const MaskGraph& g, Mask x) { return g.degree_sum(x) >= l * std::popcount(x); };
        case FaultPattern::ExtraSize:
            return [l](const MaskGraph&, Mask x) { return std::popcount(x) >= (1 << l); };
        case FaultPattern::Embedded:
            return [l](const MaskGraph& g, Mask x) {
                const int block = 1 << l;
                const Mask full_block = block == 64 ? ~Mask{0} : (Mask{1} << block) - 1;
                for (int base = 0; base < g.order(); base += block) {
                    const Mask part = (x >> base) & full_block;
                    if (part != 0 && part != full_block) return false;
                }
                return true;
            };
        case FaultPattern::Cyclic:
            // A connected side holds a cycle iff it has at least as many edges as vertices.
            return [](const MaskGraph& g, Mask x) { return g.degree_sum(x) >= 2 * std::popcount(x); };
    }
    throw std::invalid_argument("unknown fault pattern");
}

/// Conditional edge-connectivity for the four non-cyclic patterns,
/// 0 <= l <= n-1.
inline int brute_conditional(const CubeGraph& graph, FaultPattern pattern, int l, const OracleBudget& budget = {}) {
    budget.validate();
    detail::check_oracle_graph(graph);
    if (pattern == FaultPattern::Cyclic) throw std::invalid_argument("brute_conditional: use brute_cyclic");
    const MaskGraph g(graph);
    detail::check_size(g, l, 0, g.dimension() - 1, "brute_conditional");
    return detail::require_feasible(
        detail::min_bipartition(g, 1, g.order() / 2, side_predicate(pattern, l), budget, "brute_conditional"),
        "brute_conditional");
}

/// Cyclic edge-connectivity.
inline int brute_cyclic(const CubeGraph& graph, const OracleBudget& budget = {}) {
    budget.validate();
    detail::check_oracle_graph(graph);
    if (graph.dimension() < 3) throw std::out_of_range("brute_cyclic: n must be at least 3");
    const MaskGraph g(graph);
    return detail::require_feasible(
        detail::min_bipartition(g, 3, g.order() / 2, side_predicate(FaultPattern::Cyclic, 0), budget, "brute_cyclic"),
        "brute_cyclic");
}

/// Smallest vertex count of an induced subgraph with average degree >= l, for
/// every l = 0 .. n+1 (index l), and whether |I| >= 2^{l-1} always holds.
struct AverageDegreeFloor {
    std::vector<int> min_size;
    bool holds = true;
};

inline AverageDegreeFloor average_degree_floor(const CubeGraph& graph, const OracleBudget& budget = {}) {
    budget.validate();
    detail::check_oracle_graph(graph);
    const MaskGraph g(graph);
    if (!detail::exhaustive_mode(g, budget)) throw BudgetExceeded("average_degree_floor: needs exhaustive mode");
    detail::NodeCounter counter(budget.node_limit);
    AverageDegreeFloor out;
    const int levels = g.degree() + 1;
    out.min_size.assign(static_cast<std::size_t>(levels), std::numeric_limits<int>::max());
    for (Mask x = 1;; ++x) {
        counter.tick();
        const int size = std::popcount(x);
        const int sum = g.degree_sum(x);
        for (int l = 0; l < levels && l * size <= sum; ++l) {
            auto& slot = out.min_size[static_cast<std::size_t>(l)];
            slot = std::min(slot, size);
            // |I| >= 2^{l-1}, compared as 2|I| >= 2^l.
            if (2 * static_cast<std::int64_t>(size) < (std::int64_t{1} << l)) out.holds = false;
        }
        if (x == g.all()) break;
    }
    return out;
}

inline bool average_degree_floor_check(const CubeGraph& graph, const OracleBudget& budget = {}) {
    return average_degree_floor(graph, budget).holds;
}

/// Result of searching raw edge subsets F for the smallest cut whose removal
/// disconnects the graph into components that all satisfy a predicate.
struct UnrestrictedCutResult {
    std::optional<int> min_cut;
    std::uint64_t minimum_cuts = 0;           // number of edge sets of minimum size
    std::uint64_t minimum_cuts_two_parts = 0; // of those, leaving exactly two components
};

/// Enumerates every edge subset of size <= max_cut (no bipartition
/// assumption). `component_ok` is applied to every component of G - F.
inline UnrestrictedCutResult unrestricted_edge_cut_search(const CubeGraph& graph, int max_cut,
                                                          const SidePredicate& component_ok,
                                                          const OracleBudget& budget = {}) {
    budget.validate();
    detail::check_oracle_graph(graph);
    const MaskGraph g(graph);
    const auto edges = graph.edges();
    if (edges.size() > 40) throw BudgetExceeded("unrestricted_edge_cut_search: graph has too many edges");
    detail::NodeCounter counter(budget.node_limit);
    UnrestrictedCutResult out;
    const int e = static_cast<int>(edges.size());
    std::vector<int> chosen;

    auto evaluate = [&] {
        std::array<Mask, 64> adj{};
        for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = g.adj(v);
        for (int i : chosen) {
            const auto [u, v] = edges[static_cast<std::size_t>(i)];
            adj[u] &= ~(Mask{1} << v);
            adj[v] &= ~(Mask{1} << u);
        }
        Mask rest = g.all();
        int parts = 0;
        while (rest != 0) {
            Mask comp = rest & (~rest + 1);
            Mask frontier = comp;
            while (frontier != 0) {
                Mask next = 0;
                for (Mask r = frontier; r != 0; r &= r - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(r))];
                next &= ~comp;
                comp |= next;
                frontier = next;
            }
            rest &= ~comp;
            ++parts;
            if (component_ok && !component_ok(g, comp)) return;
        }
        if (parts < 2) return;
        const int size = static_cast<int>(chosen.size());
        if (!out.min_cut || size < *out.min_cut) {
            out.min_cut = size;
            out.minimum_cuts = 0;
            out.minimum_cuts_two_parts = 0;
        }
        if (size == *out.min_cut) {
            ++out.minimum_cuts;
            if (parts == 2) ++out.minimum_cuts_two_parts;
        }
    };

    // Sizes in increasing order, so the first feasible size is the minimum.
    for (int size = 1; size <= std::min(max_cut, e); ++size) {
        if (out.min_cut && size > *out.min_cut) break;
        chosen.assign(static_cast<std::size_t>(size), 0);
        for (int i = 0; i < size; ++i) chosen[static_cast<std::size_t>(i)] = i;
        while (true) {
            counter.tick();
            evaluate();
            int i = size - 1;
            while (i >= 0 && chosen[static_cast<std::size_t>(i)] == e - size + i) --i;
            if (i < 0) break;
            ++chosen[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) chosen[static_cast<std::size_t>(j)] = chosen[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verification against the closed forms.

enum class EntryStatus { Match, Mismatch, Skipped };

struct VerificationEntry {
    std::string member;
    std::string quantity;
    std::string input;
    Wide closed = 0;
    std::optional<Wide> brute;  // empty when the oracle ran out of budget
    std::string note;

    EntryStatus status() const {
        if (!brute) return EntryStatus::Skipped;
        return *brute == closed ? EntryStatus::Match : EntryStatus::Mismatch;
    }
};

class VerificationReport {
public:
    int n = 0;
    std::vector<std::string> members;
    std::vector<VerificationEntry> entries;

    std::size_t count(EntryStatus s) const {
        return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [s](const auto& e) { return e.status() == s; }));
    }

    /// No mismatch and at least one entry actually checked. Skipped entries
    /// never count as matches.
    bool passed() const { return count(EntryStatus::Mismatch) == 0 && count(EntryStatus::Match) > 0; }

    /// Machine-readable: "quantity,input,closed,brute,match" per entry, with a
    /// "# member ..." comment line opening each member's block.
    void write_lines(std::ostream& os) const {
        os << "quantity,input,closed,brute,match\n";
        std::string current;
        for (const auto& e : entries) {
            if (e.member != current) {
                current = e.member;
                os << "# member " << current << '\n';
            }
            os << e.quantity << ',' << e.input << ',' << to_string(e.closed) << ','
               << (e.brute ? to_string(*e.brute) : std::string("-")) << ',' << status_word(e.status()) << '\n';
        }
    }

    void write_text(std::ostream& os) const {
        os << "verification n=" << n << " members=" << members.size() << '\n';
        os << pad("member", 14) << pad("quantity", 28) << pad("input", 8) << pad("closed", 10) << pad("brute", 10) << "status\n";
        for (const auto& e : entries) {
            os << pad(e.member, 14) << pad(e.quantity, 28) << pad(e.input, 8) << pad(to_string(e.closed), 10)
               << pad(e.brute ? to_string(*e.brute) : "-", 10) << status_word(e.status());
            if (!e.note.empty()) os << "  (" << e.note << ')';
            os << '\n';
        }
        os << "matched " << count(EntryStatus::Match) << ", mismatched " << count(EntryStatus::Mismatch) << ", skipped "
           << count(EntryStatus::Skipped) << " -> " << (passed() ? "PASS" : "FAIL") << '\n';
    }

    static const char* status_word(EntryStatus s) {
        switch (s) {
            case EntryStatus::Match: return "true";
            case EntryStatus::Mismatch: return "false";
            case EntryStatus::Skipped: return "skipped";
        }
        return "?";
    }

private:
    static std::string pad(std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        else s.push_back(' ');
        return s;
    }
};

namespace detail {

template <class F>
void record(VerificationReport& report, const std::string& member, std::string quantity, std::string input, Wide closed,
            F&& brute) {
    VerificationEntry e{member, std::move(quantity), std::move(input), closed, std::nullopt, {}};
    try {
        e.brute = static_cast<Wide>(brute());
    } catch (const BudgetExceeded& ex) {
        e.note = ex.what();
    }
    report.entries.push_back(std::move(e));
}

}  // namespace detail

/// Checks the closed forms against the oracles on the canonical member and on
/// one random member per seed.
inline VerificationReport verify_member(int n, const std::vector<std::uint64_t>& member_seeds,
                                        const OracleBudget& budget = {}) {
    budget.validate();
    if (n < 3 || n > 5) throw std::out_of_range("verify_member: n outside [3, 5]");
    VerificationReport report;
    report.n = n;

    std::vector<std::pair<std::string, MatchingTree>> members;
    members.emplace_back("canonical", identity_matching_tree(n));
    for (auto seed : member_seeds) members.emplace_back("seed=" + std::to_string(seed), random_matching_tree(n, seed));

    const int half = 1 << (n - 1);
    for (const auto& [name, tree] : members) {
        report.members.push_back(name);
        const auto g = build_k4cube(tree);
        for (int m = 1; m <= half; ++m) {
            const auto um = static_cast<std::uint64_t>(m);
            detail::record(report, name, "ex_canonical_set", std::to_string(m), ex_h4(um, n),
                           [&] { return 2 * induced_edge_count(g, canonical_set(um, n)); });
            detail::record(report, name, "ex", std::to_string(m), ex_h4(um, n), [&] { return brute_ex(g, m, budget); });
            detail::record(report, name, "xi", std::to_string(m), xi_h4(um, n), [&] { return brute_xi(g, m, budget); });
            detail::record(report, name, "xi_unconstrained", std::to_string(m), xi_h4(um, n),
                           [&] { return brute_xi_unconstrained(g, m, budget); });
        }
        for (int h = 1; h <= half; ++h) {
            detail::record(report, name, "lambda_h", std::to_string(h), lambda_scan(static_cast<std::uint64_t>(h), n),
                           [&] { return brute_lambda_h(g, h, budget); });
        }
        for (auto pattern : kNonCyclicPatterns) {
            for (int l = 2; l <= n - 1; ++l) {
                detail::record(report, name, "conditional_" + std::string(to_string(pattern)), std::to_string(l),
                               conditional_lambda(pattern, l, n), [&] { return brute_conditional(g, pattern, l, budget); });
            }
        }
        detail::record(report, name, "cyclic", "-", cyclic_lambda(n), [&] { return brute_cyclic(g, budget); });
    }
    return report;
}

}  // namespace k4cube
