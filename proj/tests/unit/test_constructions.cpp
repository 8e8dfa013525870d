#include "helpers.hpp"

#include "tuza/clique_decomp.hpp"
#include "tuza/constructions.hpp"
#include "tuza/errors.hpp"
#include "tuza/oracle.hpp"

#include <doctest.h>

using namespace tuza;

namespace {

long long c2(long long n) { return n * (n - 1) / 2; }

void check_report(const Graph& g, const ConstructionReport& r)
{
    auto v = verify_certificates(g, r);
    INFO(v.message);
    CHECK(v.pass);
    CHECK(r.ratio_ok);
    CHECK(r.flags.empty());
    CHECK(static_cast<long long>(r.packing.size()) >= r.packing_bound);
    CHECK(static_cast<long long>(r.hitting.size()) <= r.hitting_bound);
    CHECK(testing::edge_disjoint(r.packing));
}

Graph complete_split(int k_size, int s_size)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int a = 0; a < k_size; ++a) {
        for (int b = a + 1; b < k_size; ++b)
            edges.emplace_back(a, b);
        for (int u = 0; u < s_size; ++u)
            edges.emplace_back(a, k_size + u);
    }
    return {k_size + s_size, edges};
}

}  // namespace

TEST_CASE("threshold_construct examples")
{
    ThresholdRepr k5{complete_graph(5), {0, 1, 2, 3, 4}, {}};
    auto r = threshold_construct(k5);
    CHECK(r.case_label == CaseLabel::ODD_SMALL_X);
    CHECK(r.packing_bound == 2);
    CHECK(r.hitting_bound == 4);
    CHECK(r.packing.size() == 2);
    CHECK(r.hitting.size() == 4);
    check_report(k5.g, r);

    ThresholdRepr single{complete_graph(1), {0}, {}};
    auto one = threshold_construct(single);
    CHECK(one.packing.empty());
    CHECK(one.hitting.empty());
    CHECK(one.ratio_ok);

    auto [empty, er] = threshold_from_creation_sequence("0000");
    auto e = threshold_construct(normalize_threshold(er));
    CHECK(e.packing.empty());
    CHECK(e.hitting.empty());

    // The |K| = |S| = 4 complete split graph normalizes to k = 5.
    auto split = normalize_threshold(recognize_threshold(complete_split(4, 4)));
    auto s = threshold_construct(split);
    CHECK(s.case_label == CaseLabel::ODD_BIG_X);
    CHECK(s.packing_bound == 4);
    CHECK(s.hitting_bound == 6);
    check_report(split.g, s);

    ThresholdRepr raw{complete_split(4, 4), {0, 1, 2, 3}, {4, 5, 6, 7}};
    CHECK_THROWS_AS(threshold_construct(raw), PreconditionError);
}

TEST_CASE("threshold constructions verify and sandwich the oracle for n <= 10")
{
    for (int n = 1; n <= 10; ++n)
        for (auto [g, r] : enumerate_threshold(n)) {
            auto report = threshold_construct(normalize_threshold(r));
            check_report(g, report);
            auto mu = exact_mu(g);
            auto tau = exact_tau(g, default_node_budget, report.hitting);
            REQUIRE(mu.exact);
            REQUIRE(tau.exact);
            CHECK(static_cast<long long>(report.packing.size()) <= mu.value);
            CHECK(static_cast<long long>(report.hitting.size()) >= tau.value);
            CHECK(tau.value <= 2 * mu.value);
        }
}

TEST_CASE("threshold constructions verify for n = 11, 12")
{
    for (int n = 11; n <= 12; ++n)
        for (auto [g, r] : enumerate_threshold(n))
            check_report(g, threshold_construct(normalize_threshold(r)));
}

TEST_CASE("threshold case bounds equal the closed forms for k <= 100")
{
    for (long long k = 1; k <= 100; ++k)
        for (long long x = 0; x <= 110; ++x) {
            auto b = threshold_case_bounds(k, x);
            if (k % 2 == 0 && x >= k / 2) {
                CHECK(b.label == CaseLabel::EVEN_BIG_X);
                CHECK(b.packing_bound == 2 * c2(k / 2));
                CHECK(b.hitting_bound == c2(k - 1));
            } else if (k % 2 == 0) {
                CHECK(b.label == CaseLabel::EVEN_SMALL_X);
                CHECK(b.packing_bound == c2(k / 2) + x * (k / 4));
                CHECK(b.hitting_bound == 2 * c2(k / 2) + x * (k / 2 - 1));
            } else if (x >= (k + 1) / 2) {
                CHECK(b.label == CaseLabel::ODD_BIG_X);
                CHECK(b.packing_bound == (k - 1) * (k - 1) / 4);
                CHECK(b.hitting_bound == c2(k - 1));
            } else {
                CHECK(b.label == CaseLabel::ODD_SMALL_X);
                CHECK(b.packing_bound == ((k - 1) / 2) * ((k + 1) / 4) + std::min(x * ((k - 1) / 4), c2((k - 1) / 2)));
                CHECK(b.hitting_bound == c2((k + 1) / 2) + c2((k - 1) / 2) + x * (k - 3) / 2);
            }
            CHECK(b.hitting_bound <= 2 * b.packing_bound);
        }
}

TEST_CASE("cochain_construct boundary instances at l = 4")
{
    auto [full, rf] = cochain_from_profile(std::vector<int>(8, 8));
    auto f = cochain_construct(rf);
    CHECK(f.case_label == CaseLabel::CC_BIG_FULL);
    CHECK(f.hitting_bound == 56);
    CHECK(f.packing_bound == 28);
    CHECK(f.hitting.size() == 56);
    CHECK(f.packing.size() == 28);
    check_report(full, f);

    auto [eq, re] = cochain_from_profile(std::vector<int>{4, 4, 4, 4, 0, 0, 0, 0});
    auto e = cochain_construct(re);
    CHECK(e.case_label == CaseLabel::CC_BAL_EQ);
    CHECK(e.hitting_bound == 40);
    CHECK(e.packing_bound == 20);
    CHECK(e.hitting.size() == 40);
    CHECK(e.packing.size() == 20);
    check_report(eq, e);

    auto [none, rn] = cochain_from_profile(std::vector<int>(8, 0));
    auto n = cochain_construct(rn);
    CHECK(n.case_label == CaseLabel::CC_BAL_LT);
    CHECK(n.hitting.size() == 24);
    CHECK(n.packing.size() == 12);
    check_report(none, n);
}

TEST_CASE("cochain_construct on every l = 4 profile")
{
    std::set<CaseLabel> seen;
    for (const auto& p : all_cochain_profiles(8)) {
        auto [g, r] = cochain_from_profile(p);
        auto report = cochain_construct(r);
        seen.insert(report.case_label);
        check_report(g, report);
    }
    CHECK(seen == std::set<CaseLabel>{CaseLabel::CC_BAL_EQ, CaseLabel::CC_BAL_LT, CaseLabel::CC_BAL_LT_ODD,
                                      CaseLabel::CC_BAL_NOEDGE, CaseLabel::CC_BIG, CaseLabel::CC_BIG_FULL});
}

TEST_CASE("cochain_construct on sampled l = 8 instances")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto [g, r] = sample_cochain(8, seed);
        check_report(g, cochain_construct(r));
    }
}

TEST_CASE("cochain construction is independent of the role order")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto [g, r] = sample_cochain(4, seed);
        auto a = cochain_construct(r);
        auto b = cochain_construct(swap_roles(r));
        check_report(g, b);
        CHECK(a.case_label == b.case_label);
        CHECK(a.packing_bound == b.packing_bound);
        CHECK(a.hitting_bound == b.hitting_bound);
    }
}

TEST_CASE("l = 2 co-chain graphs fall back to the oracle")
{
    for (const auto& p : all_cochain_profiles(4)) {
        auto [g, r] = cochain_from_profile(p);
        auto report = cochain_construct(r);
        CHECK(report.case_label == CaseLabel::ORACLE_FALLBACK);
        check_report(g, report);
        CHECK(static_cast<long long>(report.packing.size()) == exact_mu(g).value);
        CHECK(static_cast<long long>(report.hitting.size()) == exact_tau(g).value);
    }
}

TEST_CASE("cochain preconditions")
{
    auto [g, r] = cochain_from_profile(std::vector<int>{2, 1, 0});
    CHECK_THROWS_AS(cochain_construct(r), PreconditionError);
    auto [g6, r6] = cochain_from_profile(std::vector<int>{6, 5, 4, 3, 2, 1});
    CHECK_THROWS_AS(cochain_construct(r6), PreconditionError);
    CoChainRepr bad{complete_graph(8), {0, 1, 2, 3}, {4, 5, 6}};
    CHECK_THROWS_AS(cochain_construct(bad), PreconditionError);
}

TEST_CASE("cochain case bounds")
{
    CHECK(cochain_case_bounds(4, 8, 8, true).label == CaseLabel::CC_BIG_FULL);
    CHECK(cochain_case_bounds(4, 6, 5, true).label == CaseLabel::CC_BIG);
    CHECK(cochain_case_bounds(4, 4, 4, true).label == CaseLabel::CC_BAL_EQ);
    CHECK(cochain_case_bounds(4, 2, 1, true).label == CaseLabel::CC_BAL_LT);
    CHECK(cochain_case_bounds(4, 3, 1, true).label == CaseLabel::CC_BAL_LT_ODD);
    CHECK(cochain_case_bounds(4, 3, 1, false).label == CaseLabel::CC_BAL_NOEDGE);
    for (long long ell = 4; ell <= 40; ell += 2)
        for (long long x1 = 0; x1 <= 2 * ell; ++x1)
            for (long long x2 = 0; x2 <= x1; ++x2) {
                if ((x1 >= ell) != (x2 >= ell))
                    continue;
                for (bool edge : {false, true}) {
                    auto b = cochain_case_bounds(ell, x1, x2, edge);
                    CHECK(b.hitting_bound <= 2 * b.packing_bound);
                }
            }
}

TEST_CASE("verify_certificates failure modes")
{
    auto k5 = complete_graph(5);
    ConstructionReport good;
    good.case_label = CaseLabel::ODD_SMALL_X;
    good.packing = {{0, 1, 2}, {0, 3, 4}};
    good.hitting = {{0, 1}, {2, 3}, {2, 4}, {3, 4}};
    good.packing_bound = 2;
    good.hitting_bound = 4;
    CHECK(verify_certificates(k5, good).pass);

    auto shared = good;
    shared.packing = {{0, 2, 3}, {0, 2, 4}};
    auto v = verify_certificates(k5, shared);
    CHECK_FALSE(v.pass);
    CHECK(v.failed == CertificateCheck::packing_valid);

    auto missing = good;
    missing.packing = {{0, 1, 2}, {0, 3, 5}};
    CHECK(verify_certificates(k5, missing).failed == CertificateCheck::packing_valid);

    auto leaky = good;
    leaky.hitting.erase({3, 4});
    CHECK(verify_certificates(k5, leaky).failed == CertificateCheck::hitting_valid);

    auto heavy = good;
    heavy.hitting.insert({0, 2});
    heavy.hitting.insert({0, 3});
    heavy.hitting.insert({0, 4});
    heavy.hitting.insert({1, 2});
    heavy.hitting.insert({1, 3});
    heavy.packing = {{0, 1, 2}};
    heavy.packing_bound = 1;
    CHECK(verify_certificates(k5, heavy).failed == CertificateCheck::ratio);

    auto bounds = good;
    bounds.packing_bound = 3;
    CHECK(verify_certificates(k5, bounds).failed == CertificateCheck::bounds);
    auto loose = good;
    loose.hitting_bound = 5;
    CHECK(verify_certificates(k5, loose).failed == CertificateCheck::bounds);
}
