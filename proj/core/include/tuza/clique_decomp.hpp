#pragma once

#include "tuza/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tuza {

/// Partition of E(K_k) into maximal matchings over vertices 0..k-1.
struct MatchingDecomposition {
    int k = 0;
    std::vector<std::vector<Edge>> matchings;
};

/// Round-robin 1-factorization. For even k, matching i (1 <= i <= k-1) is
/// {0,i} plus every {a,b} with a+b ≡ 2i (mod k-1); for odd k the even
/// construction on k+1 vertices is built and vertex k deleted, so matching
/// i misses exactly one vertex. Throws InputError for k < 1.
MatchingDecomposition clique_matchings(int k);

enum class LeftoverKind { matching, star };

/// Packing of the complete split graph with |K| = |S| = k. The abstract
/// labelling is K = 0..k-1 and S = k..2k-1.
struct SplitPackingResult {
    int k = 0;
    TrianglePacking triangles;
    EdgeSet leftover;
    LeftoverKind leftover_kind = LeftoverKind::matching;
    std::optional<Vertex> star_center;
};

/// Packs C(k,2) triangles, each one clique edge plus one S vertex.
///
/// Even k: the k-1 perfect matchings of K are joined to the S vertices other
/// than `star_center` (an S index in [0,k), default 0); the centre's k edges
/// stay unused.
///
/// Odd k: the construction runs on a clique K' of k+1 vertices, joining its
/// k perfect matchings to S, and then deletes the K' vertex
/// `omit_matching_of` (index in [0,k], default k). Remaining K' vertices are
/// relabelled 0..k-1 in order. The unused edges form a perfect matching
/// between K and S.
///
/// Throws InputError for k < 1 or a selector out of range, or a selector
/// passed for the wrong parity.
SplitPackingResult split_packing(int k, std::optional<int> star_center = std::nullopt,
                                 std::optional<int> omit_matching_of = std::nullopt);

/// Packs the clique edges of the complete split graph with |K| = k_size,
/// |S| = s_size (labelling K = 0..k_size-1, S = k_size..k_size+s_size-1).
/// s_size < k_size: s_size·⌊k_size/2⌋ triangles; otherwise C(k_size,2).
TrianglePacking pack_clique_against_is(int k_size, int s_size);

/// Host-graph version of pack_clique_against_is: packs the edges among
/// `clique` with vertices of `others`, assuming every vertex of `others` is
/// complete to `clique`. `star_center` (must belong to `others`) selects the
/// unused star when |clique| is even and |others| >= |clique|; otherwise the
/// first vertices of `others` are used.
TrianglePacking pack_clique_with(std::span<const Vertex> clique, std::span<const Vertex> others,
                                 std::optional<Vertex> star_center = std::nullopt);

/// Number of triangles pack_clique_against_is produces.
long long clique_against_is_size(long long k_size, long long s_size);

struct CliquePackingResult {
    int n = 0;
    TrianglePacking triangles;
    EdgeSet leave;
    bool optimal = false;
};

/// Size of the leave of a maximum triangle packing of K_n.
long long clique_leave_size(long long n);

struct CliquePackingOptions {
    /// Largest n ≡ 4,5 (mod 6) solved by exact search.
    int exact_cap = 13;
    std::uint64_t node_budget = 100'000'000;
    /// Hill-climbing moves allowed above `exact_cap`.
    std::uint64_t search_steps = 10'000'000;
};

/// Triangle packing of K_n. n ≡ 1,3 (mod 6): Steiner triple system (Skolem /
/// Bose). n ≡ 0,2: STS(n+1) with one point deleted. n ≡ 4,5: exact search up
/// to `exact_cap`; above it a seeded hill climb started from the greedy
/// packing, with optimal = true only if it reaches the size the leave table
/// allows.
/// Throws InputError for n < 3.
CliquePackingResult max_clique_packing(int n, const CliquePackingOptions& options = {});

/// Steiner triple system on v points, v ≡ 1,3 (mod 6). Throws InputError
/// otherwise.
TrianglePacking steiner_triple_system(int v);

/// Edges of K_n inside the two halves of the bipartition {0..⌊n/2⌋-1},
/// {⌊n/2⌋..n-1}; removing them leaves K_{⌊n/2⌋,⌈n/2⌉}.
EdgeSet clique_hitting(int n);

/// Greedy triangle packing of g (lexicographically least free triangle
/// first) improved by 1-for-2 swaps until no swap applies.
TrianglePacking greedy_packing(const Graph& g);

}  // namespace tuza
