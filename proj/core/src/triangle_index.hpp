#pragma once

#include "tuza/graph.hpp"

#include <array>
#include <vector>

namespace tuza::detail {

/// Edges and triangles of a graph with dense ids. Edge ids follow the
/// lexicographic edge order, triangle ids the lexicographic triangle order,
/// and each triangle's edge ids are ascending (ab, ac, bc).
struct TriangleIndex {
    explicit TriangleIndex(const Graph& g)
        : n(g.size()), edges(g.edges()), triangles(enumerate_triangles(g)),
          id(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1)
    {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            id[at(edges[i].u, edges[i].v)] = static_cast<int>(i);
            id[at(edges[i].v, edges[i].u)] = static_cast<int>(i);
        }
        tri_edges.reserve(triangles.size());
        of_edge.resize(edges.size());
        for (std::size_t t = 0; t < triangles.size(); ++t) {
            const auto& tr = triangles[t];
            std::array<int, 3> e{edge_id(tr.a, tr.b), edge_id(tr.a, tr.c), edge_id(tr.b, tr.c)};
            tri_edges.push_back(e);
            for (auto x : e)
                of_edge[static_cast<std::size_t>(x)].push_back(static_cast<int>(t));
        }
    }

    [[nodiscard]] int edge_id(Vertex u, Vertex v) const { return id[at(u, v)]; }

    int n;
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;
    std::vector<std::array<int, 3>> tri_edges;
    std::vector<std::vector<int>> of_edge;

private:
    [[nodiscard]] std::size_t at(Vertex u, Vertex v) const
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
    }

    std::vector<int> id;
};

}  // namespace tuza::detail
