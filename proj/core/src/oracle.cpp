#include "tuza/oracle.hpp"

#include "tuza/clique_decomp.hpp"
#include "tuza/errors.hpp"

#include "triangle_index.hpp"

#include <algorithm>
#include <numeric>

namespace tuza {

namespace {

// ---------------------------------------------------------------------------
// μ: maximum edge-disjoint triangle packing
// ---------------------------------------------------------------------------

class PackingSearch {
public:
    PackingSearch(const Graph& g, std::uint64_t budget)
        : index_(g), budget_(budget), state_(index_.edges.size(), free_edge),
          available_on_edge_(index_.edges.size(), 0), degree_(static_cast<std::size_t>(g.size()), 0)
    {
        best_ = greedy_packing(g);
    }

    MuResult run()
    {
        recurse();
        MuResult r;
        r.value = static_cast<long long>(best_.size());
        r.witness = best_;
        std::sort(r.witness.begin(), r.witness.end());
        r.nodes_explored = nodes_;
        r.exact = !aborted_;
        return r;
    }

private:
    static constexpr char free_edge = 0;
    static constexpr char used_edge = 1;
    static constexpr char dropped_edge = 2;

    bool available(int t) const
    {
        const auto& e = index_.tri_edges[static_cast<std::size_t>(t)];
        return state_[static_cast<std::size_t>(e[0])] == free_edge &&
               state_[static_cast<std::size_t>(e[1])] == free_edge &&
               state_[static_cast<std::size_t>(e[2])] == free_edge;
    }

    /// Upper bound on the triangles still packable; also returns the first
    /// edge that lies in an available triangle (-1 if none).
    long long remaining_bound(int& branch_edge)
    {
        std::fill(available_on_edge_.begin(), available_on_edge_.end(), 0);
        for (std::size_t t = 0; t < index_.triangles.size(); ++t)
            if (available(static_cast<int>(t)))
                for (auto e : index_.tri_edges[t])
                    ++available_on_edge_[static_cast<std::size_t>(e)];

        std::fill(degree_.begin(), degree_.end(), 0);
        long long edges = 0;
        branch_edge = -1;
        for (std::size_t e = 0; e < available_on_edge_.size(); ++e) {
            if (available_on_edge_[e] == 0)
                continue;
            if (branch_edge < 0)
                branch_edge = static_cast<int>(e);
            ++edges;
            ++degree_[static_cast<std::size_t>(index_.edges[e].u)];
            ++degree_[static_cast<std::size_t>(index_.edges[e].v)];
        }
        if (edges == 0)
            return 0;

        long long odd = 0;
        long long half_degrees = 0;
        for (auto d : degree_) {
            odd += d & 1;
            half_degrees += d / 2;
        }
        // Every vertex keeps the parity of its free degree in the leave, and
        // the packed edges are a multiple of three.
        long long leave = odd > 0 ? odd / 2 : (edges % 3 == 0 ? 0 : 3);
        while ((edges - leave) % 3 != 0)
            ++leave;
        auto by_parity = edges >= leave ? (edges - leave) / 3 : 0;
        return std::min(by_parity, half_degrees / 3);
    }

    void recurse()
    {
        if (aborted_)
            return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        if (current_.size() > best_.size())
            best_ = current_;

        int branch_edge = -1;
        auto bound = static_cast<long long>(current_.size()) + remaining_bound(branch_edge);
        if (branch_edge < 0 || bound <= static_cast<long long>(best_.size()))
            return;

        const auto& through = index_.of_edge[static_cast<std::size_t>(branch_edge)];
        for (auto t : through) {
            if (!available(t))
                continue;
            const auto& e = index_.tri_edges[static_cast<std::size_t>(t)];
            for (auto x : e)
                state_[static_cast<std::size_t>(x)] = used_edge;
            current_.push_back(index_.triangles[static_cast<std::size_t>(t)]);
            recurse();
            current_.pop_back();
            for (auto x : e)
                state_[static_cast<std::size_t>(x)] = free_edge;
            if (aborted_)
                return;
        }
        state_[static_cast<std::size_t>(branch_edge)] = dropped_edge;
        recurse();
        state_[static_cast<std::size_t>(branch_edge)] = free_edge;
    }

    detail::TriangleIndex index_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<char> state_;
    std::vector<int> available_on_edge_;
    std::vector<int> degree_;
    TrianglePacking current_;
    TrianglePacking best_;
};

// ---------------------------------------------------------------------------
// τ: minimum triangle hitting set
// ---------------------------------------------------------------------------

class HittingSearch {
public:
    HittingSearch(const Graph& g, std::uint64_t budget, const std::optional<HittingSet>& warm)
        : index_(g), budget_(budget), removed_(index_.edges.size(), 0), excluded_(index_.edges.size(), 0),
          hits_(index_.triangles.size(), 0), parent_(static_cast<std::size_t>(g.size())),
          comp_edges_(static_cast<std::size_t>(g.size())), comp_vertices_(static_cast<std::size_t>(g.size())),
          comp_packed_(static_cast<std::size_t>(g.size())), packed_(index_.edges.size(), 0),
          touched_(static_cast<std::size_t>(g.size()), 0)
    {
        // Every edge on a triangle is always a valid incumbent.
        for (std::size_t e = 0; e < index_.edges.size(); ++e)
            if (!index_.of_edge[e].empty())
                best_.push_back(static_cast<int>(e));
        if (warm && warm->size() < best_.size() && valid_hitting(g, *warm)) {
            best_.clear();
            for (const auto& e : *warm)
                best_.push_back(index_.edge_id(e.u, e.v));
        }
    }

    TauResult run()
    {
        recurse();
        TauResult r;
        for (auto e : best_)
            r.witness.insert(index_.edges[static_cast<std::size_t>(e)]);
        r.value = static_cast<long long>(r.witness.size());
        r.nodes_explored = nodes_;
        r.exact = !aborted_;
        return r;
    }

private:
    static bool valid_hitting(const Graph& g, const HittingSet& h)
    {
        if (!std::all_of(h.begin(), h.end(), [&](const Edge& e) {
                return e.u >= 0 && e.u < e.v && e.v < g.size() && g.has_edge(e);
            }))
            return false;
        return is_triangle_free(remove_edges(g, h));
    }

    void set_removed(int e, bool on)
    {
        removed_[static_cast<std::size_t>(e)] = on ? 1 : 0;
        for (auto t : index_.of_edge[static_cast<std::size_t>(e)])
            hits_[static_cast<std::size_t>(t)] += on ? 1 : -1;
        if (on)
            current_.push_back(e);
        else
            current_.pop_back();
    }

    int find(int v)
    {
        while (parent_[static_cast<std::size_t>(v)] != v) {
            auto& p = parent_[static_cast<std::size_t>(v)];
            p = parent_[static_cast<std::size_t>(p)];
            v = p;
        }
        return v;
    }

    /// Lower bound on the edges still needed; -1 when some unhit triangle
    /// has all three edges excluded.
    long long lower_bound()
    {
        std::iota(parent_.begin(), parent_.end(), 0);
        std::fill(packed_.begin(), packed_.end(), 0);
        std::fill(touched_.begin(), touched_.end(), 0);
        std::fill(comp_edges_.begin(), comp_edges_.end(), 0);
        std::fill(comp_vertices_.begin(), comp_vertices_.end(), 0);
        std::fill(comp_packed_.begin(), comp_packed_.end(), 0);

        bool any = false;
        for (std::size_t t = 0; t < index_.triangles.size(); ++t) {
            if (hits_[t] != 0)
                continue;
            any = true;
            const auto& e = index_.tri_edges[t];
            if (excluded_[static_cast<std::size_t>(e[0])] && excluded_[static_cast<std::size_t>(e[1])] &&
                excluded_[static_cast<std::size_t>(e[2])])
                return -1;
            const auto& tr = index_.triangles[t];
            auto ra = find(tr.a);
            auto rb = find(tr.b);
            if (ra != rb)
                parent_[static_cast<std::size_t>(rb)] = ra;
            ra = find(tr.a);
            auto rc = find(tr.c);
            if (ra != rc)
                parent_[static_cast<std::size_t>(rc)] = ra;
            for (auto x : e)
                if (packed_[static_cast<std::size_t>(x)] == 0)
                    packed_[static_cast<std::size_t>(x)] = 1;  // edge belongs to the unhit part
        }
        if (!any)
            return 0;

        // greedy edge-disjoint triangles of the unhit part (flag 2 = packed)
        for (std::size_t t = 0; t < index_.triangles.size(); ++t) {
            if (hits_[t] != 0)
                continue;
            const auto& e = index_.tri_edges[t];
            if (packed_[static_cast<std::size_t>(e[0])] == 1 && packed_[static_cast<std::size_t>(e[1])] == 1 &&
                packed_[static_cast<std::size_t>(e[2])] == 1) {
                for (auto x : e)
                    packed_[static_cast<std::size_t>(x)] = 2;
                ++comp_packed_[static_cast<std::size_t>(find(index_.triangles[t].a))];
            }
        }
        for (std::size_t e = 0; e < index_.edges.size(); ++e) {
            if (packed_[e] == 0)
                continue;
            const auto& ed = index_.edges[e];
            ++comp_edges_[static_cast<std::size_t>(find(ed.u))];
            for (auto v : {ed.u, ed.v}) {
                if (!touched_[static_cast<std::size_t>(v)]) {
                    touched_[static_cast<std::size_t>(v)] = 1;
                    ++comp_vertices_[static_cast<std::size_t>(find(v))];
                }
            }
        }
        long long total = 0;
        for (std::size_t r = 0; r < parent_.size(); ++r) {
            if (comp_vertices_[r] == 0)
                continue;
            long long nv = comp_vertices_[r];
            long long mantel = comp_edges_[r] - (nv * nv) / 4;
            total += std::max<long long>(comp_packed_[r], mantel);
        }
        return total;
    }

    void recurse()
    {
        if (aborted_)
            return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        auto lb = lower_bound();
        if (lb < 0)
            return;
        if (static_cast<long long>(current_.size()) + lb >= static_cast<long long>(best_.size()))
            return;
        if (lb == 0) {
            best_ = current_;
            return;
        }

        std::size_t t = 0;
        while (hits_[t] != 0)
            ++t;
        const auto edges = index_.tri_edges[t];
        std::vector<int> newly_excluded;
        for (auto e : edges) {
            if (excluded_[static_cast<std::size_t>(e)])
                continue;
            set_removed(e, true);
            recurse();
            set_removed(e, false);
            if (aborted_)
                break;
            excluded_[static_cast<std::size_t>(e)] = 1;
            newly_excluded.push_back(e);
        }
        for (auto e : newly_excluded)
            excluded_[static_cast<std::size_t>(e)] = 0;
    }

    detail::TriangleIndex index_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<char> removed_;
    std::vector<char> excluded_;
    std::vector<int> hits_;
    std::vector<int> parent_;
    std::vector<long long> comp_edges_;
    std::vector<long long> comp_vertices_;
    std::vector<long long> comp_packed_;
    std::vector<char> packed_;
    std::vector<char> touched_;
    std::vector<int> current_;
    std::vector<int> best_;
};

}  // namespace

MuResult exact_mu(const Graph& g, std::uint64_t budget)
{
    return PackingSearch(g, budget).run();
}

TauResult exact_tau(const Graph& g, std::uint64_t budget, const std::optional<HittingSet>& warm_start)
{
    return HittingSearch(g, budget, warm_start).run();
}

Ratio tuza_gap(const Graph& g, std::uint64_t budget)
{
    auto mu = exact_mu(g, budget);
    auto tau = exact_tau(g, budget);
    if (!mu.exact || !tau.exact)
        throw InexactError("oracle budget exhausted before μ and τ were proven");
    if (mu.value == 0) {
        if (tau.value != 0)
            throw std::logic_error("internal invariant violated: μ = 0 but τ > 0");
        return {0, 1};
    }
    auto d = std::gcd(tau.value, mu.value);
    return {tau.value / d, mu.value / d};
}

}  // namespace tuza
