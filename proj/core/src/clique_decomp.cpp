#include "tuza/clique_decomp.hpp"

#include "tuza/errors.hpp"
#include "tuza/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

namespace tuza {

MatchingDecomposition clique_matchings(int k)
{
    if (k < 1)
        throw InputError("clique_matchings needs k >= 1");
    MatchingDecomposition out{k, {}};
    const int even = k % 2 == 0 ? k : k + 1;
    const int mod = even - 1;
    for (int i = 1; i <= even - 1; ++i) {
        std::vector<Edge> m{{0, i}};
        for (int a = 1; a < even; ++a)
            for (int b = a + 1; b < even; ++b)
                if ((a + b) % mod == (2 * i) % mod)
                    m.push_back({a, b});
        if (even != k)
            std::erase_if(m, [&](const Edge& e) { return e.v == k; });
        std::sort(m.begin(), m.end());
        out.matchings.push_back(std::move(m));
    }
    return out;
}

SplitPackingResult split_packing(int k, std::optional<int> star_center, std::optional<int> omit_matching_of)
{
    if (k < 1)
        throw InputError("split_packing needs k >= 1");
    SplitPackingResult out;
    out.k = k;

    if (k % 2 == 0) {
        if (omit_matching_of)
            throw InputError("omit_matching_of applies to odd k only");
        const int center = star_center.value_or(0);
        if (center < 0 || center >= k)
            throw InputError("star centre index " + std::to_string(center) + " outside [0," + std::to_string(k) + ")");
        auto dec = clique_matchings(k);
        int s = 0;
        for (const auto& m : dec.matchings) {
            if (s == center)
                ++s;
            for (const auto& e : m)
                out.triangles.push_back({e.u, e.v, k + s});
            ++s;
        }
        for (int c = 0; c < k; ++c)
            out.leftover.insert({c, k + center});
        out.leftover_kind = LeftoverKind::star;
        out.star_center = k + center;
    } else {
        if (star_center)
            throw InputError("star_center applies to even k only");
        const int removed = omit_matching_of.value_or(k);
        if (removed < 0 || removed > k)
            throw InputError("omitted clique vertex " + std::to_string(removed) + " outside [0," +
                             std::to_string(k) + "]");
        auto relabel = [&](int x) { return x < removed ? x : x - 1; };
        auto dec = clique_matchings(k + 1);
        for (int s = 0; s < k; ++s) {
            for (const auto& e : dec.matchings[static_cast<std::size_t>(s)]) {
                if (e.u == removed || e.v == removed) {
                    auto partner = e.u == removed ? e.v : e.u;
                    out.leftover.insert({relabel(partner), k + s});
                } else {
                    out.triangles.push_back({relabel(e.u), relabel(e.v), k + s});
                }
            }
        }
        out.leftover_kind = LeftoverKind::matching;
    }
    std::sort(out.triangles.begin(), out.triangles.end());
    return out;
}

long long clique_against_is_size(long long k_size, long long s_size)
{
    if (s_size < k_size)
        return s_size * (k_size / 2);
    return k_size * (k_size - 1) / 2;
}

TrianglePacking pack_clique_against_is(int k_size, int s_size)
{
    if (k_size < 0 || s_size < 0)
        throw InputError("negative part size");
    TrianglePacking out;
    if (k_size == 0)
        return out;
    if (s_size < k_size) {
        auto dec = clique_matchings(k_size);
        for (int j = 0; j < s_size; ++j)
            for (const auto& e : dec.matchings[static_cast<std::size_t>(j)])
                out.push_back({e.u, e.v, k_size + j});
    } else {
        out = split_packing(k_size).triangles;
    }
    std::sort(out.begin(), out.end());
    return out;
}

TrianglePacking pack_clique_with(std::span<const Vertex> clique, std::span<const Vertex> others,
                                 std::optional<Vertex> star_center)
{
    const auto k = static_cast<int>(clique.size());
    const auto s = static_cast<int>(others.size());
    std::vector<Vertex> chosen(others.begin(), others.end());
    std::optional<int> center_index;
    if (star_center) {
        auto it = std::find(chosen.begin(), chosen.end(), *star_center);
        if (it == chosen.end())
            throw InputError("star centre is not among the packing vertices");
        if (s >= k && k > 0 && it - chosen.begin() >= k)
            std::swap(*it, chosen[static_cast<std::size_t>(k - 1)]);
        if (s >= k && k % 2 == 0 && k > 0)
            center_index = static_cast<int>(std::find(chosen.begin(), chosen.end(), *star_center) - chosen.begin());
    }

    TrianglePacking abstract;
    if (s >= k && k > 0)
        abstract = split_packing(k, center_index).triangles;
    else
        abstract = pack_clique_against_is(k, s);

    auto host = [&](Vertex x) {
        return x < k ? clique[static_cast<std::size_t>(x)] : chosen[static_cast<std::size_t>(x - k)];
    };
    TrianglePacking out;
    out.reserve(abstract.size());
    for (const auto& t : abstract)
        out.push_back(Triangle::make(host(t.a), host(t.b), host(t.c)));
    return out;
}

// ---------------------------------------------------------------------------
// Steiner triple systems
// ---------------------------------------------------------------------------

namespace {

/// Bose construction, v = 6t + 3, over the idempotent commutative
/// quasigroup x∘y = (t+1)(x+y) mod (2t+1). Point (x, i) ↦ i·(2t+1) + x.
TrianglePacking bose(int v)
{
    const int t = (v - 3) / 6;
    const int q = 2 * t + 1;
    auto point = [&](int x, int i) { return i * q + x; };
    TrianglePacking out;
    for (int x = 0; x < q; ++x)
        out.push_back(Triangle::make(point(x, 0), point(x, 1), point(x, 2)));
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y) {
            const int z = ((t + 1) * (x + y)) % q;
            for (int i = 0; i < 3; ++i)
                out.push_back(Triangle::make(point(x, i), point(y, i), point(z, (i + 1) % 3)));
        }
    return out;
}

/// Skolem construction, v = 6t + 1, over the half-idempotent commutative
/// quasigroup of order 2t: x∘y = s/2 for even s = (x+y) mod 2t and
/// t + (s-1)/2 for odd s. Point (x, i) ↦ i·2t + x, ∞ ↦ 6t.
TrianglePacking skolem(int v)
{
    const int t = (v - 1) / 6;
    const int q = 2 * t;
    const int infinity = 6 * t;
    auto point = [&](int x, int i) { return i * q + x; };
    auto op = [&](int x, int y) {
        const int s = (x + y) % q;
        return s % 2 == 0 ? s / 2 : t + (s - 1) / 2;
    };
    TrianglePacking out;
    for (int x = 0; x < t; ++x) {
        out.push_back(Triangle::make(point(x, 0), point(x, 1), point(x, 2)));
        for (int i = 0; i < 3; ++i)
            out.push_back(Triangle::make(infinity, point(x + t, i), point(x, (i + 1) % 3)));
    }
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            for (int i = 0; i < 3; ++i)
                out.push_back(Triangle::make(point(x, i), point(y, i), point(op(x, y), (i + 1) % 3)));
    return out;
}

/// Hill climbing on K_n: pick a point with two uncovered edges xy, xz and
/// add xyz, evicting the triangle that covers yz if there is one. Stops at
/// `target` triangles or after `max_steps` moves.
TrianglePacking hill_climb(int n, long long target, std::uint64_t max_steps)
{
    const auto un = static_cast<std::size_t>(n);
    std::vector<int> cover(un * un, -1);
    std::vector<Triangle> triangles;
    std::vector<int> free_slots;
    std::vector<int> uncovered(un, n - 1);
    long long size = 0;
    auto at = [&](Vertex a, Vertex b) -> int& { return cover[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)]; };
    auto set = [&](const Triangle& t, int id) {
        for (const auto& e : t.edges()) {
            at(e.u, e.v) = id;
            at(e.v, e.u) = id;
        }
        for (auto x : {t.a, t.b, t.c})
            uncovered[static_cast<std::size_t>(x)] += id < 0 ? 2 : -2;
    };
    auto add = [&](const Triangle& t) {
        int id;
        if (free_slots.empty()) {
            id = static_cast<int>(triangles.size());
            triangles.push_back(t);
        } else {
            id = free_slots.back();
            free_slots.pop_back();
            triangles[static_cast<std::size_t>(id)] = t;
        }
        set(t, id);
        ++size;
    };
    auto drop = [&](int id) {
        set(triangles[static_cast<std::size_t>(id)], -1);
        free_slots.push_back(id);
        --size;
    };
    for (const auto& t : greedy_packing(complete_graph(n)))
        add(t);

    std::mt19937_64 rng(0x7a7a5eedULL + static_cast<std::uint64_t>(n));
    std::vector<Vertex> live, open;
    for (std::uint64_t step = 0; step < max_steps && size < target; ++step) {
        live.clear();
        for (Vertex x = 0; x < n; ++x)
            if (uncovered[static_cast<std::size_t>(x)] >= 2)
                live.push_back(x);
        if (live.empty())
            break;
        const Vertex x = live[rng() % live.size()];
        open.clear();
        for (Vertex y = 0; y < n; ++y)
            if (y != x && at(x, y) < 0)
                open.push_back(y);
        const auto i = rng() % open.size();
        auto j = rng() % (open.size() - 1);
        if (j >= i)
            ++j;
        const Vertex y = open[i], z = open[j];
        if (const int id = at(y, z); id >= 0)
            drop(id);
        add(Triangle::make(x, y, z));
    }

    std::vector<char> dead(triangles.size(), 0);
    for (auto id : free_slots)
        dead[static_cast<std::size_t>(id)] = 1;
    TrianglePacking out;
    for (std::size_t id = 0; id < triangles.size(); ++id)
        if (!dead[id])
            out.push_back(triangles[id]);
    return out;
}

}  // namespace

TrianglePacking steiner_triple_system(int v)
{
    TrianglePacking out;
    if (v >= 1 && v % 6 == 1)
        out = skolem(v);
    else if (v >= 3 && v % 6 == 3)
        out = bose(v);
    else
        throw InputError("no Steiner triple system on " + std::to_string(v) + " points");
    std::sort(out.begin(), out.end());
    return out;
}

long long clique_leave_size(long long n)
{
    switch (n % 6) {
    case 1:
    case 3:
        return 0;
    case 5:
        return 4;
    case 0:
    case 2:
        return n / 2;
    default:
        return n / 2 + 1;
    }
}

CliquePackingResult max_clique_packing(int n, const CliquePackingOptions& options)
{
    if (n < 3)
        throw InputError("max_clique_packing needs n >= 3");
    CliquePackingResult out;
    out.n = n;
    switch (n % 6) {
    case 1:
    case 3:
        out.triangles = steiner_triple_system(n);
        out.optimal = true;
        break;
    case 0:
    case 2:
        // drop the last point of STS(n+1); its blocks leave a perfect matching
        for (const auto& t : steiner_triple_system(n + 1))
            if (t.c != n)
                out.triangles.push_back(t);
        out.optimal = true;
        break;
    default:
        if (n <= options.exact_cap) {
            auto r = exact_mu(complete_graph(n), options.node_budget);
            out.triangles = std::move(r.witness);
            out.optimal = r.exact;
        } else {
            const long long target = (static_cast<long long>(n) * (n - 1) / 2 - clique_leave_size(n)) / 3;
            out.triangles = hill_climb(n, target, options.search_steps);
            out.optimal = static_cast<long long>(out.triangles.size()) == target;
        }
    }
    std::sort(out.triangles.begin(), out.triangles.end());
    EdgeSet used;
    for (const auto& t : out.triangles)
        for (const auto& e : t.edges())
            used.insert(e);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!used.contains({u, v}))
                out.leave.insert({u, v});
    return out;
}

EdgeSet clique_hitting(int n)
{
    EdgeSet out;
    const int half = n / 2;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if ((u < half) == (v < half))
                out.insert({u, v});
    return out;
}

TrianglePacking greedy_packing(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.size());
    std::vector<char> used(n * n, 0);
    auto is_used = [&](Vertex a, Vertex b) { return used[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] != 0; };
    auto mark = [&](const Triangle& t, char value) {
        for (const auto& e : t.edges()) {
            used[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = value;
            used[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = value;
        }
    };
    auto is_free = [&](const Triangle& t) { return !is_used(t.a, t.b) && !is_used(t.a, t.c) && !is_used(t.b, t.c); };

    const auto all = enumerate_triangles(g);
    TrianglePacking packing;
    auto fill = [&] {
        for (const auto& t : all)
            if (is_free(t)) {
                mark(t, 1);
                packing.push_back(t);
            }
    };
    fill();

    // 1-for-2 swaps: drop one triangle, insert two through its edges.
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t p = 0; p < packing.size() && !improved; ++p) {
            const auto dropped = packing[p];
            mark(dropped, 0);
            std::vector<Triangle> candidates;
            for (const auto& e : dropped.edges()) {
                auto ru = g.row(e.u);
                auto rv = g.row(e.v);
                for (std::size_t w = 0; w < ru.size(); ++w)
                    for (auto common = ru[w] & rv[w]; common != 0; common &= common - 1) {
                        auto c = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(common)));
                        auto t = Triangle::make(e.u, e.v, c);
                        if (t != dropped && is_free(t))
                            candidates.push_back(t);
                    }
            }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            for (std::size_t i = 0; i < candidates.size() && !improved; ++i) {
                mark(candidates[i], 1);
                for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                    if (is_free(candidates[j])) {
                        mark(candidates[j], 1);
                        packing.erase(packing.begin() + static_cast<std::ptrdiff_t>(p));
                        packing.push_back(candidates[i]);
                        packing.push_back(candidates[j]);
                        improved = true;
                        break;
                    }
                }
                if (!improved)
                    mark(candidates[i], 0);
            }
            if (!improved)
                mark(dropped, 1);
        }
        if (improved)
            fill();
    }
    std::sort(packing.begin(), packing.end());
    return packing;
}

}  // namespace tuza
