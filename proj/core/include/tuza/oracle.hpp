#pragma once

#include "tuza/graph.hpp"

#include <cstdint>
#include <optional>

namespace tuza {

inline constexpr std::uint64_t default_node_budget = 100'000'000;

/// Result of an exhaustive search. `exact` is false when the node budget ran
/// out; `value` and `witness` then describe the best solution found.
template <typename Witness>
struct OracleResult {
    long long value = 0;
    Witness witness{};
    std::uint64_t nodes_explored = 0;
    bool exact = false;
};

using MuResult = OracleResult<TrianglePacking>;
using TauResult = OracleResult<HittingSet>;

/// Maximum number of edge-disjoint triangles.
///
/// Depth-first branch and bound. Each node takes the first free edge that
/// still lies in an available triangle and branches on every available
/// triangle through it (lexicographic order), then on leaving the edge
/// unused. A node is pruned when packed + bound cannot beat the incumbent,
/// where the bound is the smaller of
///   - (F - L) / 3, F the free triangle edges and L the least leave size
///     compatible with the vertex degree parities and with F mod 3;
///   - Σ_v ⌊deg_F(v) / 2⌋ / 3.
MuResult exact_mu(const Graph& g, std::uint64_t budget = default_node_budget);

/// Minimum number of edges meeting every triangle.
///
/// Three-way branching on the first triangle not yet hit: remove its first
/// edge; or keep the first and remove the second; or keep both and remove
/// the third. The lower bound per connected component of the unhit part is
/// the larger of a greedy edge-disjoint triangle count and m - ⌊n²/4⌋
/// (a triangle-free graph on n vertices has at most ⌊n²/4⌋ edges).
/// `warm_start`, when it is a valid hitting set of g, seeds the incumbent.
TauResult exact_tau(const Graph& g, std::uint64_t budget = default_node_budget,
                    const std::optional<HittingSet>& warm_start = std::nullopt);

/// Non-negative rational in lowest terms.
struct Ratio {
    long long num = 0;
    long long den = 1;

    friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// τ(G)/μ(G). Triangle-free graphs report 0/1. Throws InexactError when
/// either search exceeds the budget.
Ratio tuza_gap(const Graph& g, std::uint64_t budget = default_node_budget);

}  // namespace tuza
