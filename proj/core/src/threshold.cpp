#include "tuza/errors.hpp"
#include "tuza/graph_classes.hpp"

#include "bitrows.hpp"

#include <algorithm>
#include <bit>

namespace tuza {

bool is_valid_threshold_repr(const ThresholdRepr& r)
{
    const auto& g = r.g;
    if (!detail::partitions(g, r.clique, r.independent))
        return false;
    for (std::size_t i = 0; i < r.clique.size(); ++i)
        for (std::size_t j = i + 1; j < r.clique.size(); ++j)
            if (!g.adjacent(r.clique[i], r.clique[j]))
                return false;
    for (std::size_t i = 0; i < r.independent.size(); ++i)
        for (std::size_t j = i + 1; j < r.independent.size(); ++j)
            if (g.adjacent(r.independent[i], r.independent[j]))
                return false;
    for (std::size_t i = 0; i + 1 < r.clique.size(); ++i)
        if (!detail::row_subset(detail::closed_row(g, r.clique[i + 1]), detail::closed_row(g, r.clique[i])))
            return false;
    for (std::size_t i = 0; i + 1 < r.independent.size(); ++i)
        if (!detail::row_subset(g.row(r.independent[i]), g.row(r.independent[i + 1])))
            return false;
    return true;
}

bool is_normalized(const ThresholdRepr& r)
{
    if (r.clique.empty())
        return r.independent.empty();
    auto last = r.clique.back();
    return std::none_of(r.independent.begin(), r.independent.end(),
                        [&](Vertex u) { return r.g.adjacent(last, u); });
}

ThresholdRepr recognize_threshold(const Graph& g)
{
    const int n = g.size();
    ThresholdRepr r{g, {}, {}};
    if (n == 0)
        return r;

    std::vector<std::uint64_t> alive(g.words_per_row(), 0);
    for (Vertex v = 0; v < n; ++v)
        detail::set_bit(alive, v);
    auto is_alive = [&](Vertex v) { return (alive[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U; };
    auto kill = [&](Vertex v) { alive[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); };
    auto live_degree = [&](Vertex v) {
        int d = 0;
        auto row = g.row(v);
        for (std::size_t i = 0; i < row.size(); ++i)
            d += std::popcount(row[i] & alive[i]);
        return d;
    };

    int remaining = n;
    while (remaining > 1) {
        std::vector<Vertex> isolated;
        std::vector<Vertex> dominating;
        for (Vertex v = 0; v < n; ++v) {
            if (!is_alive(v))
                continue;
            auto d = live_degree(v);
            if (d == 0)
                isolated.push_back(v);
            else if (d == remaining - 1)
                dominating.push_back(v);
        }
        bool take_isolated = !isolated.empty();
        auto& batch = take_isolated ? isolated : dominating;
        if (batch.empty()) {
            Vertex witness = 0;
            while (!is_alive(witness))
                ++witness;
            throw ClassMembershipError("not a threshold graph: vertex " + std::to_string(witness) +
                                           " is neither isolated nor dominating after peeling",
                                       witness);
        }
        // the final survivor becomes c_k
        if (static_cast<int>(batch.size()) == remaining)
            batch.pop_back();
        auto& dest = take_isolated ? r.independent : r.clique;
        for (auto v : batch) {
            dest.push_back(v);
            kill(v);
        }
        remaining -= static_cast<int>(batch.size());
    }
    for (Vertex v = 0; v < n; ++v)
        if (is_alive(v))
            r.clique.push_back(v);
    return r;
}

ThresholdRepr normalize_threshold(ThresholdRepr r)
{
    if (is_normalized(r))
        return r;
    auto clique_bits = std::vector<std::uint64_t>(r.g.words_per_row(), 0);
    for (auto c : r.clique)
        detail::set_bit(clique_bits, c);

    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < r.independent.size(); ++i) {
        auto row = r.g.row(r.independent[i]);
        if (std::equal(row.begin(), row.end(), clique_bits.begin()) &&
            (!pick || r.independent[i] < r.independent[*pick]))
            pick = i;
    }
    if (!pick)
        throw PreconditionError("invalid threshold representation: no independent vertex sees exactly K");
    r.clique.push_back(r.independent[*pick]);
    r.independent.erase(r.independent.begin() + static_cast<std::ptrdiff_t>(*pick));
    return r;
}

std::pair<Graph, ThresholdRepr> threshold_from_creation_sequence(std::string_view bits)
{
    const auto n = static_cast<int>(bits.size()) + 1;
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        auto ch = bits[static_cast<std::size_t>(i - 1)];
        if (ch != '0' && ch != '1')
            throw InputError(std::string("creation sequence contains non-binary character '") + ch + "'");
        if (ch == '1')
            for (Vertex j = 0; j < i; ++j)
                edges.push_back({j, i});
    }
    Graph g(n, edges);
    auto repr = recognize_threshold(g);
    return {std::move(g), std::move(repr)};
}

std::string creation_sequence(int n, std::uint64_t index)
{
    std::string bits(static_cast<std::size_t>(std::max(n - 1, 0)), '0');
    for (int j = 0; j < n - 1; ++j)
        if ((index >> (n - 2 - j)) & 1U)
            bits[static_cast<std::size_t>(j)] = '1';
    return bits;
}

ThresholdEnumeration::ThresholdEnumeration(int n) : n_(n)
{
    if (n < 1 || n > 63)
        throw InputError("threshold enumeration needs 1 <= n <= 63");
}

std::uint64_t ThresholdEnumeration::count() const
{
    return std::uint64_t{1} << (n_ - 1);
}

std::string ThresholdEnumeration::iterator::bits() const
{
    return creation_sequence(n_, index_);
}

ThresholdEnumeration::iterator::value_type ThresholdEnumeration::iterator::operator*() const
{
    return threshold_from_creation_sequence(bits());
}

ThresholdEnumeration enumerate_threshold(int n)
{
    return ThresholdEnumeration(n);
}

XSet compute_threshold_X(const ThresholdRepr& r)
{
    if (!is_normalized(r))
        throw PreconditionError("compute_threshold_X needs a normalized threshold representation");
    const auto k = r.clique.size();
    const auto half = (k + 1) / 2;
    XSet x;
    for (std::size_t i = 0; i < r.independent.size(); ++i) {
        auto u = r.independent[i];
        bool complete = true;
        for (std::size_t j = 0; j < half && complete; ++j)
            complete = r.g.adjacent(u, r.clique[j]);
        if (complete) {
            x.r_index = static_cast<int>(i) + 1;
            x.members.assign(r.independent.begin() + static_cast<std::ptrdiff_t>(i), r.independent.end());
            break;
        }
    }
    return x;
}

}  // namespace tuza
