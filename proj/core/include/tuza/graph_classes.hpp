#pragma once

#include "tuza/graph.hpp"

#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tuza {

// ---------------------------------------------------------------------------
// Threshold graphs
// ---------------------------------------------------------------------------

/// Threshold representation (K, S) of a graph.
///
/// `clique` lists c_1..c_k with N[c_{i+1}] ⊆ N[c_i]; `independent` lists
/// u_1..u_s with N(u_i) ⊆ N(u_{i+1}). Together they partition V(g).
struct ThresholdRepr {
    Graph g;
    std::vector<Vertex> clique;
    std::vector<Vertex> independent;
};

/// Checks every invariant of a threshold representation.
bool is_valid_threshold_repr(const ThresholdRepr& r);

/// True when the last clique vertex has no neighbour in the independent set.
bool is_normalized(const ThresholdRepr& r);

/// Recognizes a threshold graph by repeatedly peeling an isolated or a
/// dominating vertex. Vertices with equal neighbourhoods are ordered by
/// ascending index. Throws ClassMembershipError (witness = a vertex that was
/// neither isolated nor dominating) when g is not threshold.
ThresholdRepr recognize_threshold(const Graph& g);

/// Returns an equivalent representation in which c_k has no neighbour in S.
/// If every clique vertex sees S, the lowest-index u ∈ S with N(u) = K is
/// moved to the end of the clique.
ThresholdRepr normalize_threshold(ThresholdRepr r);

/// Builds the threshold graph of a creation sequence: vertex 0 first, then
/// vertex i is added dominating for bits[i-1] == '1' and isolated for '0'.
std::pair<Graph, ThresholdRepr> threshold_from_creation_sequence(std::string_view bits);

/// All 2^(n-1) creation sequences of length n-1, in increasing binary order.
class ThresholdEnumeration {
public:
    class iterator {
    public:
        using value_type = std::pair<Graph, ThresholdRepr>;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(int n, std::uint64_t index) : n_(n), index_(index) {}

        value_type operator*() const;
        iterator& operator++()
        {
            ++index_;
            return *this;
        }
        iterator operator++(int)
        {
            auto old = *this;
            ++index_;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

        /// Creation sequence of the current position.
        [[nodiscard]] std::string bits() const;

    private:
        int n_ = 0;
        std::uint64_t index_ = 0;
    };

    explicit ThresholdEnumeration(int n);

    [[nodiscard]] iterator begin() const { return {n_, 0}; }
    [[nodiscard]] iterator end() const { return {n_, count()}; }
    [[nodiscard]] std::uint64_t count() const;

private:
    int n_;
};

/// Throws InputError when n < 1 or n > 63.
ThresholdEnumeration enumerate_threshold(int n);

/// Creation sequence of length n-1 for the given index (bit n-2 first).
std::string creation_sequence(int n, std::uint64_t index);

/// Vertex set X pivoting the constructions. For threshold graphs `r_index`
/// is the 1-based minimal r; for co-chain sets it stays empty.
struct XSet {
    std::vector<Vertex> members;
    std::optional<int> r_index;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(members.size()); }
};

/// X = {u_r, ..., u_s} with r minimal such that u_r sees c_1..c_⌈k/2⌉.
/// Requires a normalized representation.
XSet compute_threshold_X(const ThresholdRepr& r);

// ---------------------------------------------------------------------------
// Co-chain graphs
// ---------------------------------------------------------------------------

/// Co-chain representation (K1, K2): `k1` lists c_1..c_n with
/// N[c_{i+1}] ⊆ N[c_i], `k2` lists d_1..d_m with N[d_i] ⊆ N[d_{i+1}].
struct CoChainRepr {
    Graph g;
    std::vector<Vertex> k1;
    std::vector<Vertex> k2;

    /// |K1| = |K2| and divisible by four.
    [[nodiscard]] bool even_balanced() const noexcept
    {
        return k1.size() == k2.size() && k1.size() % 4 == 0;
    }
    /// Half of |K1|; meaningful for balanced representations.
    [[nodiscard]] int ell() const noexcept { return static_cast<int>(k1.size() / 2); }

    [[nodiscard]] std::span<const Vertex> k1_top() const { return std::span(k1).first(k1.size() / 2); }
    [[nodiscard]] std::span<const Vertex> k1_bot() const { return std::span(k1).subspan(k1.size() / 2); }
    [[nodiscard]] std::span<const Vertex> k2_top() const { return std::span(k2).first(k2.size() / 2); }
    [[nodiscard]] std::span<const Vertex> k2_bot() const { return std::span(k2).subspan(k2.size() / 2); }
};

bool is_valid_cochain_repr(const CoChainRepr& r);

/// Recognizes a co-chain graph. The complement of a co-chain graph is a
/// bipartite chain graph, so it has at most one component with edges; that
/// component fixes the split up to vertices adjacent to everything, which
/// are distributed to balance |K1| and |K2| when possible. Throws
/// ClassMembershipError when g is not co-chain.
CoChainRepr recognize_cochain(const Graph& g);

/// Exchanges the roles of K1 and K2 (each order reversed so the nesting
/// direction is preserved).
CoChainRepr swap_roles(const CoChainRepr& r);

struct CoChainX {
    XSet x1;
    XSet x2;
};

/// X1 = {c ∈ K1 : K2_bot ⊆ N[c]}, X2 = {d ∈ K2 : K1_top ⊆ N[d]}.
/// Throws PreconditionError unless the representation is even balanced.
CoChainX compute_cochain_X(const CoChainRepr& r);

/// Co-chain graph from a staircase profile: profile[i] = |N(c_{i+1}) ∩ K2|,
/// non-increasing, each within [0, |profile|]. K1 = 0..p-1, K2 = p..2p-1.
std::pair<Graph, CoChainRepr> cochain_from_profile(std::span<const int> profile);

/// Uniformly random monotone staircase between two cliques of size 2ℓ.
/// Deterministic for a given seed on every platform.
std::pair<Graph, CoChainRepr> sample_cochain(int ell, std::uint64_t seed);

/// All C(2p, p) non-increasing profiles of length p with entries in [0, p],
/// in lexicographically decreasing order.
std::vector<std::vector<int>> all_cochain_profiles(int p);

}  // namespace tuza
