#pragma once

#include "tuza/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace testing {

inline tuza::Graph random_graph(int n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<tuza::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return {n, edges};
}

inline std::vector<tuza::Vertex> random_permutation(int n, std::uint64_t seed)
{
    std::vector<tuza::Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Triangles by triple loop over adjacency, independent of the bitrow
/// enumeration.
inline std::vector<tuza::Triangle> naive_triangles(const tuza::Graph& g)
{
    std::vector<tuza::Triangle> out;
    for (int a = 0; a < g.size(); ++a)
        for (int b = a + 1; b < g.size(); ++b)
            for (int c = b + 1; c < g.size(); ++c)
                if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c))
                    out.push_back({a, b, c});
    return out;
}

inline bool edge_disjoint(const std::vector<tuza::Triangle>& packing)
{
    std::set<tuza::Edge> seen;
    for (const auto& t : packing)
        for (const auto& e : t.edges())
            if (!seen.insert(e).second)
                return false;
    return true;
}

/// μ by plain recursion over the triangle list (take or skip each one).
inline long long brute_mu(const tuza::Graph& g)
{
    const auto tris = naive_triangles(g);
    std::set<tuza::Edge> used;
    long long best = 0;
    auto rec = [&](auto&& self, std::size_t i, long long size) -> void {
        best = std::max(best, size);
        if (i == tris.size() || size + static_cast<long long>(tris.size() - i) <= best)
            return;
        const auto es = tris[i].edges();
        if (!used.contains(es[0]) && !used.contains(es[1]) && !used.contains(es[2])) {
            for (const auto& e : es)
                used.insert(e);
            self(self, i + 1, size + 1);
            for (const auto& e : es)
                used.erase(e);
        }
        self(self, i + 1, size);
    };
    rec(rec, 0, 0);
    return best;
}

/// τ by trying edge subsets of growing size.
inline long long brute_tau(const tuza::Graph& g)
{
    const auto tris = naive_triangles(g);
    if (tris.empty())
        return 0;
    const auto edges = g.edges();
    const auto m = static_cast<int>(edges.size());
    for (int size = 1; size <= m; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i)
            pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::set<tuza::Edge> chosen;
            for (auto i : pick)
                chosen.insert(edges[static_cast<std::size_t>(i)]);
            bool hits = true;
            for (const auto& t : tris) {
                const auto es = t.edges();
                if (!chosen.contains(es[0]) && !chosen.contains(es[1]) && !chosen.contains(es[2])) {
                    hits = false;
                    break;
                }
            }
            if (hits)
                return size;
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - size + i)
                --i;
            if (i < 0)
                break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return m;
}

}  // namespace testing
