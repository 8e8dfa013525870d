#include "tuza/constructions.hpp"

#include "tuza/clique_decomp.hpp"
#include "tuza/errors.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>

namespace tuza {

namespace {

constexpr std::array<std::pair<CaseLabel, std::string_view>, 11> label_names{{
    {CaseLabel::EVEN_BIG_X, "EVEN_BIG_X"},
    {CaseLabel::EVEN_SMALL_X, "EVEN_SMALL_X"},
    {CaseLabel::ODD_BIG_X, "ODD_BIG_X"},
    {CaseLabel::ODD_SMALL_X, "ODD_SMALL_X"},
    {CaseLabel::CC_BAL_EQ, "CC_BAL_EQ"},
    {CaseLabel::CC_BAL_LT, "CC_BAL_LT"},
    {CaseLabel::CC_BAL_LT_ODD, "CC_BAL_LT_ODD"},
    {CaseLabel::CC_BAL_NOEDGE, "CC_BAL_NOEDGE"},
    {CaseLabel::CC_BIG, "CC_BIG"},
    {CaseLabel::CC_BIG_FULL, "CC_BIG_FULL"},
    {CaseLabel::ORACLE_FALLBACK, "ORACLE_FALLBACK"},
}};

long long pairs(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

using Part = std::span<const Vertex>;

void append(TrianglePacking& into, const TrianglePacking& more) { into.insert(into.end(), more.begin(), more.end()); }

void add_inside(EdgeSet& h, Part part)
{
    for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j)
            h.insert(Edge::make(part[i], part[j]));
}

void add_between(EdgeSet& h, const Graph& g, Part a, Part b)
{
    for (auto u : a)
        for (auto v : b)
            if (u != v && g.adjacent(u, v))
                h.insert(Edge::make(u, v));
}

std::size_t count_between(const Graph& g, Part a, Part b)
{
    std::size_t count = 0;
    for (auto u : a)
        for (auto v : b)
            count += g.adjacent(u, v) ? 1U : 0U;
    return count;
}

std::vector<Vertex> minus(Part from, Part drop)
{
    std::vector<Vertex> out;
    for (auto v : from)
        if (std::find(drop.begin(), drop.end(), v) == drop.end())
            out.push_back(v);
    return out;
}

std::vector<Vertex> intersect(Part from, Part keep)
{
    std::vector<Vertex> out;
    for (auto v : from)
        if (std::find(keep.begin(), keep.end(), v) != keep.end())
            out.push_back(v);
    return out;
}

bool uses_edge(const TrianglePacking& packing, Vertex a, Vertex b)
{
    const auto e = Edge::make(a, b);
    return std::any_of(packing.begin(), packing.end(), [&](const Triangle& t) {
        auto es = t.edges();
        return std::find(es.begin(), es.end(), e) != es.end();
    });
}

void finish(ConstructionReport& report)
{
    std::sort(report.packing.begin(), report.packing.end());
    report.ratio_ok = report.hitting.size() <= 2 * report.packing.size();
}

ConstructionReport oracle_report(const Graph& g, std::uint64_t budget)
{
    auto mu = exact_mu(g, budget);
    auto tau = exact_tau(g, budget);
    if (!mu.exact || !tau.exact)
        throw InexactError("oracle fallback exceeded the node budget");
    ConstructionReport report;
    report.case_label = CaseLabel::ORACLE_FALLBACK;
    report.packing = std::move(mu.witness);
    report.hitting = std::move(tau.witness);
    report.packing_bound = mu.value;
    report.hitting_bound = tau.value;
    finish(report);
    return report;
}

}  // namespace

std::string_view to_string(CaseLabel label)
{
    for (const auto& [l, name] : label_names)
        if (l == label)
            return name;
    return "UNKNOWN";
}

CaseLabel parse_case_label(std::string_view name)
{
    for (const auto& [l, n] : label_names)
        if (n == name)
            return l;
    throw InputError("unknown case label '" + std::string(name) + "'");
}

std::string_view to_string(CertificateCheck check)
{
    switch (check) {
    case CertificateCheck::packing_valid:
        return "packing_valid";
    case CertificateCheck::hitting_valid:
        return "hitting_valid";
    case CertificateCheck::ratio:
        return "ratio";
    case CertificateCheck::bounds:
        return "bounds";
    }
    return "unknown";
}

CaseBounds threshold_case_bounds(long long k, long long x)
{
    if (k % 2 == 0) {
        const long long half = k / 2;
        if (x >= half)
            return {CaseLabel::EVEN_BIG_X, 2 * pairs(half), pairs(k - 1)};
        return {CaseLabel::EVEN_SMALL_X, pairs(half) + x * (k / 4), 2 * pairs(half) + x * (half - 1)};
    }
    const long long up = (k + 1) / 2;
    const long long down = (k - 1) / 2;
    if (x >= up)
        return {CaseLabel::ODD_BIG_X, down * down, pairs(k - 1)};
    return {CaseLabel::ODD_SMALL_X, down * ((k + 1) / 4) + std::min(x * ((k - 1) / 4), pairs(down)),
            pairs(up) + pairs(down) + x * ((k - 3) / 2)};
}

CaseBounds cochain_case_bounds(long long ell, long long x1, long long x2, bool bottom_edge)
{
    if (x1 > ell) {
        return {x1 == 2 * ell ? CaseLabel::CC_BIG_FULL : CaseLabel::CC_BIG,
                3 * pairs(ell) + clique_against_is_size(ell, x1 - ell) + (x2 - ell),
                3 * ell * ell - 2 * ell + (x1 - ell) * (x2 - ell)};
    }
    const long long hitting = 4 * pairs(ell) + ell * x1 + ell * x2 - x1 * x2;
    const long long a = 2 * pairs(ell);
    if (x1 == ell)
        return {CaseLabel::CC_BAL_EQ, a + (pairs(2 * ell) - clique_leave_size(2 * ell)) / 3, hitting};
    const long long abcd = a + clique_against_is_size(ell, x1) + clique_against_is_size(x1, ell - x1) +
                           clique_against_is_size(ell - x1, x2);
    if (x1 % 2 == 0)
        return {CaseLabel::CC_BAL_LT, abcd, hitting};
    if (bottom_edge)
        return {CaseLabel::CC_BAL_LT_ODD, abcd + 1, hitting};
    return {CaseLabel::CC_BAL_NOEDGE, abcd, 4 * pairs(ell) + x1 * ell};
}

ConstructionReport threshold_construct(const ThresholdRepr& r)
{
    if (!is_valid_threshold_repr(r))
        throw PreconditionError("invalid threshold representation");
    if (!is_normalized(r))
        throw PreconditionError("threshold representation is not normalized");

    const auto k = static_cast<long long>(r.clique.size());
    const auto x = compute_threshold_X(r);
    const auto bounds = threshold_case_bounds(k, x.size());
    const Part clique(r.clique);

    ConstructionReport report;
    report.case_label = bounds.label;
    report.packing_bound = bounds.packing_bound;
    report.hitting_bound = bounds.hitting_bound;

    // packing halves: shifted down by one vertex in the odd small-X case
    const auto top_size = static_cast<std::size_t>(bounds.label == CaseLabel::ODD_SMALL_X ? k / 2 : (k + 1) / 2);
    append(report.packing, pack_clique_with(clique.subspan(top_size), clique.first(top_size)));
    append(report.packing, pack_clique_with(clique.first(top_size), x.members));

    if (bounds.label == CaseLabel::EVEN_BIG_X || bounds.label == CaseLabel::ODD_BIG_X) {
        add_inside(report.hitting, clique.first(clique.empty() ? 0 : clique.size() - 1));
    } else {
        const auto top = clique.first(static_cast<std::size_t>((k + 1) / 2));
        const auto bot = clique.subspan(top.size());
        add_inside(report.hitting, top);
        add_inside(report.hitting, bot);
        add_between(report.hitting, r.g, r.independent, bot);
    }
    finish(report);
    return report;
}

ConstructionReport cochain_construct(const CoChainRepr& input, std::uint64_t budget)
{
    if (!is_valid_cochain_repr(input))
        throw PreconditionError("invalid co-chain representation");
    if (!input.even_balanced())
        throw PreconditionError("co-chain representation is not even balanced");
    if (input.ell() % 2 != 0)
        throw PreconditionError("co-chain half size ell must be even");
    if (input.ell() < 4)
        return oracle_report(input.g, budget);

    const auto before = compute_cochain_X(input);
    const CoChainRepr r = before.x1.size() < before.x2.size() ? swap_roles(input) : input;
    const auto x = compute_cochain_X(r);

    const auto& g = r.g;
    const long long ell = r.ell();
    const Part top1 = r.k1_top(), bot1 = r.k1_bot(), top2 = r.k2_top(), bot2 = r.k2_bot();
    const Part x1(x.x1.members), x2(x.x2.members);

    const bool bottom_edge = count_between(g, bot1, bot2) > 0;
    const auto bounds = cochain_case_bounds(ell, x.x1.size(), x.x2.size(), bottom_edge);

    ConstructionReport report;
    report.case_label = bounds.label;
    report.packing_bound = bounds.packing_bound;
    report.hitting_bound = bounds.hitting_bound;
    for (auto half : {top1, bot1, top2, bot2})
        add_inside(report.hitting, half);

    switch (bounds.label) {
    case CaseLabel::CC_BIG:
    case CaseLabel::CC_BIG_FULL: {
        add_between(report.hitting, g, top1, bot2);
        add_between(report.hitting, g, bot1, top2);
        const auto cross = static_cast<long long>(count_between(g, top2, bot1));
        const long long allowed = (x.x1.size() - ell) * (x.x2.size() - ell);
        if (cross > allowed)
            report.flags.push_back("cross edges between K2_top and K1_bot exceed (x1-l)(x2-l): " +
                                   std::to_string(cross) + " > " + std::to_string(allowed));

        const Vertex v = bot2.front();
        TrianglePacking reserved;
        append(reserved, pack_clique_with(top2, bot2, v));
        append(reserved, pack_clique_with(top1, bot2, v));
        for (auto part : {top1, top2})
            for (auto w : part)
                if (uses_edge(reserved, v, w))
                    report.flags.push_back("reserved vertex " + std::to_string(v) + " uses edge to " +
                                           std::to_string(w));
        append(report.packing, reserved);
        append(report.packing, pack_clique_with(bot1, top1));
        append(report.packing, pack_clique_with(bot2, intersect(bot1, x1)));
        const auto x2_top = intersect(top2, x2);
        for (std::size_t i = 0; i < x2_top.size() && i < top1.size(); ++i)
            report.packing.push_back(Triangle::make(v, top1[i], x2_top[i]));
        break;
    }
    case CaseLabel::CC_BAL_EQ: {
        add_between(report.hitting, g, x1, bot2);
        add_between(report.hitting, g, x2, top1);
        append(report.packing, pack_clique_with(bot1, top1));
        append(report.packing, pack_clique_with(top2, bot2));
        std::vector<Vertex> clique(top1.begin(), top1.end());
        clique.insert(clique.end(), bot2.begin(), bot2.end());
        const auto cp = max_clique_packing(static_cast<int>(clique.size()));
        if (!cp.optimal)
            report.flags.push_back("clique packing on " + std::to_string(clique.size()) +
                                   " vertices is not known to be maximum");
        auto host = [&](Vertex i) { return clique[static_cast<std::size_t>(i)]; };
        for (const auto& t : cp.triangles)
            report.packing.push_back(Triangle::make(host(t.a), host(t.b), host(t.c)));
        break;
    }
    case CaseLabel::CC_BAL_NOEDGE:
        add_between(report.hitting, g, top1, top2);
        [[fallthrough]];
    case CaseLabel::CC_BAL_LT:
    case CaseLabel::CC_BAL_LT_ODD: {
        if (bounds.label != CaseLabel::CC_BAL_NOEDGE) {
            add_between(report.hitting, g, x1, bot2);
            add_between(report.hitting, g, x2, top1);
        }
        const auto rest1 = minus(top1, x1);
        const auto d = pack_clique_with(rest1, x2);
        std::optional<Vertex> center;
        std::optional<Triangle> repair;
        if (bounds.label == CaseLabel::CC_BAL_LT_ODD) {
            for (auto u : bot1) {
                for (auto v : bot2) {
                    if (!g.adjacent(u, v))
                        continue;
                    for (auto w : rest1)
                        if (g.adjacent(v, w) && !uses_edge(d, v, w)) {
                            center = w;
                            repair = Triangle::make(u, v, w);
                            break;
                        }
                    if (repair)
                        break;
                }
                if (repair)
                    break;
            }
            if (!repair)
                report.flags.push_back("no repair triangle found for odd x1");
        }
        append(report.packing, pack_clique_with(bot1, top1, center));
        append(report.packing, pack_clique_with(top2, bot2));
        append(report.packing, pack_clique_with(bot2, x1));
        append(report.packing, pack_clique_with(x1, rest1));
        append(report.packing, d);
        if (repair)
            report.packing.push_back(*repair);
        break;
    }
    default:
        break;
    }
    finish(report);
    return report;
}

bool is_valid_packing(const Graph& g, const TrianglePacking& packing)
{
    std::set<Edge> used;
    for (const auto& t : packing) {
        const auto n = g.size();
        if (t.a < 0 || t.c >= n || t.a == t.b || t.b == t.c)
            return false;
        for (const auto& e : t.edges())
            if (!g.has_edge(e) || !used.insert(e).second)
                return false;
    }
    return true;
}

bool is_valid_hitting(const Graph& g, const HittingSet& hitting)
{
    for (const auto& e : hitting)
        if (e.u < 0 || e.v >= g.size() || !g.has_edge(e))
            return false;
    return is_triangle_free(remove_edges(g, hitting));
}

VerificationOutcome verify_certificates(const Graph& g, const ConstructionReport& report)
{
    auto fail = [](CertificateCheck check, std::string message) {
        return VerificationOutcome{false, check, std::move(message)};
    };
    if (!is_valid_packing(g, report.packing))
        return fail(CertificateCheck::packing_valid, "packing has a missing or shared edge");
    if (!is_valid_hitting(g, report.hitting))
        return fail(CertificateCheck::hitting_valid, "graph minus hitting still has a triangle");
    const auto pack = static_cast<long long>(report.packing.size());
    const auto hit = static_cast<long long>(report.hitting.size());
    if (hit > 2 * pack)
        return fail(CertificateCheck::ratio,
                    "|hitting| = " + std::to_string(hit) + " > 2 |packing| = " + std::to_string(2 * pack));
    if (pack < report.packing_bound)
        return fail(CertificateCheck::bounds, "|packing| = " + std::to_string(pack) + " below bound " +
                                                  std::to_string(report.packing_bound));
    if (hit > report.hitting_bound)
        return fail(CertificateCheck::bounds,
                    "|hitting| = " + std::to_string(hit) + " above bound " + std::to_string(report.hitting_bound));
    if (report.hitting_bound > 2 * report.packing_bound)
        return fail(CertificateCheck::bounds, "hitting bound exceeds twice the packing bound");
    return {};
}

}  // namespace tuza
