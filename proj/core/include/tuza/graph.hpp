#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace tuza {

using Vertex = int;

/// Hard cap on the vertex count accepted by the kernel.
inline constexpr int max_vertices = 4096;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    /// Canonicalizes the endpoint order; throws InputError on a self-loop.
    static Edge make(Vertex a, Vertex b);

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Triangle stored with a < b < c.
struct Triangle {
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;

    /// Sorts the three vertices; throws InputError if any two coincide.
    static Triangle make(Vertex x, Vertex y, Vertex z);

    [[nodiscard]] std::array<Edge, 3> edges() const;

    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

using EdgeSet = std::set<Edge>;
using TrianglePacking = std::vector<Triangle>;
using HittingSet = EdgeSet;

/// Simple undirected graph on vertices 0..n-1 with one adjacency bitrow per
/// vertex. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds the graph; duplicate edges collapse. Throws InputError on
    /// out-of-range endpoints, self-loops or n outside [0, max_vertices].
    Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
    Graph(int n, std::span<const Edge> edges);

    [[nodiscard]] int size() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return m_; }

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const noexcept
    {
        return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
    }
    [[nodiscard]] bool has_edge(const Edge& e) const noexcept { return adjacent(e.u, e.v); }

    [[nodiscard]] int degree(Vertex v) const noexcept;
    [[nodiscard]] std::vector<Vertex> neighbors(Vertex v) const;

    /// All edges in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Bitrow of v: bit w is set iff {v,w} is an edge.
    [[nodiscard]] std::span<const std::uint64_t> row(Vertex v) const noexcept
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    [[nodiscard]] std::size_t words_per_row() const noexcept { return words_; }

    friend bool operator==(const Graph& a, const Graph& b) noexcept
    {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    void init(int n);
    void insert(Vertex u, Vertex v);

    int n_ = 0;
    std::size_t words_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Convenience wrapper over the Graph constructor.
Graph make_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
Graph make_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

Graph complete_graph(int n);

/// Every triangle once, in lexicographic (a, b, c) order.
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// g with the edges of h deleted. Throws InputError if some edge of h is
/// not in g.
Graph remove_edges(const Graph& g, const EdgeSet& h);

bool is_triangle_free(const Graph& g);

/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

}  // namespace tuza
