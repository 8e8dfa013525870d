#include "tuza/errors.hpp"
#include "tuza/graph_classes.hpp"

#include "bitrows.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>

namespace tuza {

namespace {

int cross_degree(const Graph& g, Vertex v, std::span<const Vertex> other)
{
    return static_cast<int>(std::count_if(other.begin(), other.end(), [&](Vertex w) { return g.adjacent(v, w); }));
}

bool is_clique(const Graph& g, std::span<const Vertex> vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j]))
                return false;
    return true;
}

/// Uniform draw from [0, bound) built on the raw engine output only, so the
/// sequence does not depend on the standard library's distributions.
std::uint64_t draw_below(std::mt19937_64& engine, std::uint64_t bound)
{
    const auto limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine();
    while (x >= limit)
        x = engine();
    return x % bound;
}

}  // namespace

bool is_valid_cochain_repr(const CoChainRepr& r)
{
    const auto& g = r.g;
    if (!detail::partitions(g, r.k1, r.k2) || !is_clique(g, r.k1) || !is_clique(g, r.k2))
        return false;
    for (std::size_t i = 0; i + 1 < r.k1.size(); ++i)
        if (!detail::row_subset(detail::closed_row(g, r.k1[i + 1]), detail::closed_row(g, r.k1[i])))
            return false;
    for (std::size_t i = 0; i + 1 < r.k2.size(); ++i)
        if (!detail::row_subset(detail::closed_row(g, r.k2[i]), detail::closed_row(g, r.k2[i + 1])))
            return false;
    return true;
}

CoChainRepr recognize_cochain(const Graph& g)
{
    const int n = g.size();
    // Colour the complement. -1 = untouched, 0/1 = side.
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> universal;
    std::optional<Vertex> component_root;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) {
            universal.push_back(v);
            continue;
        }
        if (side[static_cast<std::size_t>(v)] != -1)
            continue;
        if (component_root)
            throw ClassMembershipError("not a co-chain graph: complement has two components with edges "
                                       "(vertices " + std::to_string(*component_root) + " and " +
                                           std::to_string(v) + ")",
                                       v);
        component_root = v;
        std::queue<Vertex> queue;
        side[static_cast<std::size_t>(v)] = 0;
        queue.push(v);
        while (!queue.empty()) {
            auto a = queue.front();
            queue.pop();
            for (Vertex b = 0; b < n; ++b) {
                if (b == a || g.adjacent(a, b))
                    continue;
                auto& sb = side[static_cast<std::size_t>(b)];
                auto sa = side[static_cast<std::size_t>(a)];
                if (sb == -1) {
                    sb = 1 - sa;
                    queue.push(b);
                } else if (sb == sa) {
                    throw ClassMembershipError("not a co-chain graph: complement is not bipartite at vertex " +
                                                   std::to_string(b),
                                               b);
                }
            }
        }
    }

    std::vector<Vertex> first;
    std::vector<Vertex> second;
    for (Vertex v = 0; v < n; ++v) {
        if (side[static_cast<std::size_t>(v)] == 0)
            first.push_back(v);
        else if (side[static_cast<std::size_t>(v)] == 1)
            second.push_back(v);
    }
    // Universal vertices fit on either side; use them to balance.
    auto deficit = static_cast<long>(second.size()) - static_cast<long>(first.size()) +
                   static_cast<long>(universal.size());
    auto to_first = std::clamp<long>((deficit + 1) / 2, 0, static_cast<long>(universal.size()));
    for (std::size_t i = 0; i < universal.size(); ++i)
        (static_cast<long>(i) < to_first ? first : second).push_back(universal[i]);
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());

    CoChainRepr r{g, first, second};
    std::vector<int> deg1(static_cast<std::size_t>(n), 0);
    for (auto v : r.k1)
        deg1[static_cast<std::size_t>(v)] = cross_degree(g, v, second);
    for (auto v : r.k2)
        deg1[static_cast<std::size_t>(v)] = cross_degree(g, v, first);
    std::stable_sort(r.k1.begin(), r.k1.end(),
                     [&](Vertex a, Vertex b) { return deg1[static_cast<std::size_t>(a)] > deg1[static_cast<std::size_t>(b)]; });
    std::stable_sort(r.k2.begin(), r.k2.end(),
                     [&](Vertex a, Vertex b) { return deg1[static_cast<std::size_t>(a)] < deg1[static_cast<std::size_t>(b)]; });

    if (!is_valid_cochain_repr(r)) {
        // the complement is bipartite but its cross neighbourhoods are not nested
        for (std::size_t i = 0; i + 1 < r.k1.size(); ++i)
            if (!detail::row_subset(detail::closed_row(g, r.k1[i + 1]), detail::closed_row(g, r.k1[i])))
                throw ClassMembershipError("not a co-chain graph: neighbourhood of vertex " +
                                               std::to_string(r.k1[i + 1]) + " is not nested",
                                           r.k1[i + 1]);
        throw ClassMembershipError("not a co-chain graph: cross neighbourhoods are not nested");
    }
    return r;
}

CoChainRepr swap_roles(const CoChainRepr& r)
{
    CoChainRepr out{r.g, {r.k2.rbegin(), r.k2.rend()}, {r.k1.rbegin(), r.k1.rend()}};
    return out;
}

CoChainX compute_cochain_X(const CoChainRepr& r)
{
    if (!r.even_balanced())
        throw PreconditionError("co-chain representation is not even balanced (|K1|=" +
                                std::to_string(r.k1.size()) + ", |K2|=" + std::to_string(r.k2.size()) + ")");
    CoChainX out;
    auto k2_bot = r.k2_bot();
    auto k1_top = r.k1_top();
    for (auto c : r.k1)
        if (std::all_of(k2_bot.begin(), k2_bot.end(), [&](Vertex d) { return r.g.adjacent(c, d); }))
            out.x1.members.push_back(c);
    for (auto d : r.k2)
        if (std::all_of(k1_top.begin(), k1_top.end(), [&](Vertex c) { return r.g.adjacent(c, d); }))
            out.x2.members.push_back(d);
    return out;
}

std::pair<Graph, CoChainRepr> cochain_from_profile(std::span<const int> profile)
{
    const auto p = static_cast<int>(profile.size());
    if (2 * p > max_vertices)
        throw InputError("co-chain profile too long");
    for (int i = 0; i < p; ++i) {
        auto a = profile[static_cast<std::size_t>(i)];
        if (a < 0 || a > p)
            throw InputError("profile entry " + std::to_string(a) + " outside [0, " + std::to_string(p) + "]");
        if (i > 0 && a > profile[static_cast<std::size_t>(i - 1)])
            throw InputError("profile must be non-increasing");
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 2 * p; ++u)
        for (Vertex v = u + 1; v < 2 * p; ++v)
            if ((u < p) == (v < p))
                edges.push_back({u, v});
    for (int i = 0; i < p; ++i)
        for (int j = p - profile[static_cast<std::size_t>(i)]; j < p; ++j)
            edges.push_back({i, p + j});
    Graph g(2 * p, edges);
    CoChainRepr r{g, {}, {}};
    for (int i = 0; i < p; ++i) {
        r.k1.push_back(i);
        r.k2.push_back(p + i);
    }
    return {std::move(g), std::move(r)};
}

std::pair<Graph, CoChainRepr> sample_cochain(int ell, std::uint64_t seed)
{
    if (ell < 1)
        throw InputError("sample_cochain needs ell >= 1");
    const int p = 2 * ell;
    // A monotone staircase is a lattice path of 2p steps, p of which advance
    // along K1; pick those positions with a partial Fisher-Yates shuffle.
    std::vector<int> steps(static_cast<std::size_t>(2 * p));
    for (int i = 0; i < 2 * p; ++i)
        steps[static_cast<std::size_t>(i)] = i;
    std::mt19937_64 engine(seed);
    for (int i = 0; i < p; ++i) {
        auto j = static_cast<std::size_t>(i) + draw_below(engine, static_cast<std::uint64_t>(2 * p - i));
        std::swap(steps[static_cast<std::size_t>(i)], steps[j]);
    }
    std::vector<bool> along_k1(static_cast<std::size_t>(2 * p), false);
    for (int i = 0; i < p; ++i)
        along_k1[static_cast<std::size_t>(steps[static_cast<std::size_t>(i)])] = true;

    std::vector<int> profile;
    int drops = 0;
    for (int s = 0; s < 2 * p; ++s) {
        if (along_k1[static_cast<std::size_t>(s)])
            profile.push_back(p - drops);
        else
            ++drops;
    }
    return cochain_from_profile(profile);
}

std::vector<std::vector<int>> all_cochain_profiles(int p)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int ceiling) -> void {
        if (static_cast<int>(current.size()) == p) {
            out.push_back(current);
            return;
        }
        for (int a = ceiling; a >= 0; --a) {
            current.push_back(a);
            self(self, a);
            current.pop_back();
        }
    };
    rec(rec, p);
    return out;
}

}  // namespace tuza
