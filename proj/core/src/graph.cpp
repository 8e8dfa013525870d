#include "tuza/graph.hpp"

#include "tuza/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tuza {

Edge Edge::make(Vertex a, Vertex b)
{
    if (a == b)
        throw InputError("self-loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

Triangle Triangle::make(Vertex x, Vertex y, Vertex z)
{
    std::array<Vertex, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2])
        throw InputError("degenerate triangle");
    return {v[0], v[1], v[2]};
}

std::array<Edge, 3> Triangle::edges() const
{
    return {Edge{a, b}, Edge{a, c}, Edge{b, c}};
}

void Graph::init(int n)
{
    if (n < 0 || n > max_vertices)
        throw InputError("vertex count " + std::to_string(n) + " outside [0, " +
                         std::to_string(max_vertices) + "]");
    n_ = n;
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    m_ = 0;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::insert(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint outside [0," + std::to_string(n_) + ")");
    if (u == v)
        throw InputError("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
        return;
    auto su = static_cast<std::size_t>(u);
    auto sv = static_cast<std::size_t>(v);
    bits_[su * words_ + (sv >> 6)] |= std::uint64_t{1} << (sv & 63);
    bits_[sv * words_ + (su >> 6)] |= std::uint64_t{1} << (su & 63);
    ++m_;
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
{
    init(n);
    for (auto [u, v] : edges)
        insert(u, v);
}

Graph::Graph(int n, std::span<const Edge> edges)
{
    init(n);
    for (auto e : edges)
        insert(e.u, e.v);
}

int Graph::degree(Vertex v) const noexcept
{
    int d = 0;
    for (auto w : row(v))
        d += std::popcount(w);
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (auto w = r[i]; w != 0; w &= w - 1)
            out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
    }
    return out;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (auto v : neighbors(u))
            if (u < v)
                out.push_back({u, v});
    return out;
}

Graph make_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
{
    return Graph(n, edges);
}

Graph make_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
{
    return Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, edges);
}

std::vector<Triangle> enumerate_triangles(const Graph& g)
{
    std::vector<Triangle> out;
    const auto words = g.words_per_row();
    for (Vertex a = 0; a < g.size(); ++a) {
        auto ra = g.row(a);
        for (auto b : g.neighbors(a)) {
            if (b <= a)
                continue;
            auto rb = g.row(b);
            // common neighbours strictly above b
            auto first = static_cast<std::size_t>(b + 1);
            for (std::size_t i = first >> 6; i < words; ++i) {
                auto common = ra[i] & rb[i];
                if (i == first >> 6)
                    common &= ~std::uint64_t{0} << (first & 63);
                for (; common != 0; common &= common - 1) {
                    auto c = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(common)));
                    out.push_back({a, b, c});
                }
            }
        }
    }
    return out;
}

Graph remove_edges(const Graph& g, const EdgeSet& h)
{
    for (const auto& e : h)
        if (e.u < 0 || e.v >= g.size() || e.u >= e.v || !g.has_edge(e))
            throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") is not in the graph");
    std::vector<Edge> kept;
    for (const auto& e : g.edges())
        if (!h.contains(e))
            kept.push_back(e);
    return Graph(g.size(), kept);
}

bool is_triangle_free(const Graph& g)
{
    const auto words = g.words_per_row();
    for (Vertex a = 0; a < g.size(); ++a) {
        auto ra = g.row(a);
        for (auto b : g.neighbors(a)) {
            if (b <= a)
                continue;
            auto rb = g.row(b);
            for (std::size_t i = 0; i < words; ++i)
                if ((ra[i] & rb[i]) != 0)
                    return false;
        }
    }
    return true;
}

Graph permute(const Graph& g, std::span<const Vertex> perm)
{
    if (perm.size() != static_cast<std::size_t>(g.size()))
        throw InputError("permutation length does not match vertex count");
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        edges.push_back(Edge::make(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]));
    return Graph(g.size(), edges);
}

}  // namespace tuza
