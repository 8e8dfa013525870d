#include "helpers.hpp"

#include "tuza/errors.hpp"
#include "tuza/oracle.hpp"

#include <doctest.h>

using namespace tuza;

namespace {

bool hits_all(const Graph& g, const HittingSet& h)
{
    for (const auto& e : h)
        if (!g.has_edge(e))
            return false;
    return is_triangle_free(remove_edges(g, h));
}

bool packing_in(const Graph& g, const TrianglePacking& p)
{
    for (const auto& t : p)
        for (const auto& e : t.edges())
            if (!g.has_edge(e))
                return false;
    return testing::edge_disjoint(p);
}

}  // namespace

TEST_CASE("oracle anchors on small cliques")
{
    auto mu4 = exact_mu(complete_graph(4));
    CHECK(mu4.exact);
    CHECK(mu4.value == 1);
    auto tau4 = exact_tau(complete_graph(4));
    CHECK(tau4.exact);
    CHECK(tau4.value == 2);
    CHECK(exact_mu(complete_graph(5)).value == 2);
    CHECK(exact_tau(complete_graph(5)).value == 4);

    auto c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto mu0 = exact_mu(c5);
    CHECK(mu0.value == 0);
    CHECK(mu0.witness.empty());
    CHECK(exact_tau(c5).value == 0);
}

TEST_CASE("exact_mu on K_n matches the leave table")
{
    const std::vector<long long> expected{1, 2, 4, 7, 8, 12, 13, 17, 20, 26};
    for (int n = 4; n <= 13; ++n) {
        auto r = exact_mu(complete_graph(n));
        CHECK(r.exact);
        CHECK(r.value == expected[static_cast<std::size_t>(n - 4)]);
        CHECK(packing_in(complete_graph(n), r.witness));
    }
}

TEST_CASE("exact_tau on cliques")
{
    const std::vector<long long> expected{2, 4, 6, 9, 12};
    for (int n = 4; n <= 8; ++n)
        CHECK(exact_tau(complete_graph(n)).value == expected[static_cast<std::size_t>(n - 4)]);
}

TEST_CASE("oracle agrees with brute force on random small graphs")
{
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4);
        auto g = testing::random_graph(n, 0.3 + 0.1 * static_cast<double>(seed % 6), seed);
        auto mu = exact_mu(g);
        auto tau = exact_tau(g);
        REQUIRE(mu.exact);
        REQUIRE(tau.exact);
        CHECK(mu.value == testing::brute_mu(g));
        CHECK(tau.value == testing::brute_tau(g));
        CHECK(static_cast<long long>(mu.witness.size()) == mu.value);
        CHECK(static_cast<long long>(tau.witness.size()) == tau.value);
        CHECK(packing_in(g, mu.witness));
        CHECK(hits_all(g, tau.witness));
        CHECK(tau.value <= 2 * mu.value);
    }
}

TEST_CASE("oracle values are invariant under relabelling")
{
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto g = testing::random_graph(9, 0.55, seed + 500);
        const auto mu = exact_mu(g).value;
        const auto tau = exact_tau(g).value;
        for (std::uint64_t k = 0; k < 3; ++k) {
            auto p = permute(g, testing::random_permutation(9, seed * 7 + k));
            CHECK(exact_mu(p).value == mu);
            CHECK(exact_tau(p).value == tau);
        }
    }
}

TEST_CASE("warm start does not change the optimum")
{
    auto g = complete_graph(7);
    HittingSet all;
    for (const auto& e : g.edges())
        all.insert(e);
    CHECK(exact_tau(g, default_node_budget, all).value == 9);
    HittingSet bogus{{0, 1}};
    CHECK(exact_tau(g, default_node_budget, bogus).value == 9);
}

TEST_CASE("budget exhaustion is reported, not hidden")
{
    auto g = complete_graph(12);
    auto mu = exact_mu(g, 5);
    CHECK_FALSE(mu.exact);
    CHECK(packing_in(g, mu.witness));
    CHECK(mu.nodes_explored <= 6);
    auto tau = exact_tau(g, 5);
    CHECK_FALSE(tau.exact);
    CHECK(hits_all(g, tau.witness));
    CHECK_THROWS_AS(tuza_gap(g, 5), InexactError);
}

TEST_CASE("tuza_gap")
{
    CHECK(tuza_gap(complete_graph(4)) == Ratio{2, 1});
    CHECK(tuza_gap(complete_graph(5)) == Ratio{2, 1});
    CHECK(tuza_gap(complete_graph(7)) == Ratio{9, 7});
    CHECK(tuza_gap(complete_graph(2)) == Ratio{0, 1});
    CHECK(tuza_gap(complete_graph(6)) == Ratio{3, 2});
}
