#pragma once

#include "tuza/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace tuza::detail {

/// Closed or open neighbourhood containment, a ⊆ b, as bitrows.
inline bool row_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] & ~b[i]) != 0)
            return false;
    return true;
}

inline std::vector<std::uint64_t> closed_row(const Graph& g, Vertex v)
{
    auto r = g.row(v);
    std::vector<std::uint64_t> out(r.begin(), r.end());
    out[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    return out;
}

inline bool partitions(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b)
{
    std::vector<int> seen(static_cast<std::size_t>(g.size()), 0);
    for (auto part : {a, b})
        for (auto v : part) {
            if (v < 0 || v >= g.size() || seen[static_cast<std::size_t>(v)]++ != 0)
                return false;
        }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

inline void set_bit(std::vector<std::uint64_t>& bits, Vertex v)
{
    bits[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

}  // namespace tuza::detail
