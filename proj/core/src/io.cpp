#include "tuza/io.hpp"

#include "tuza/errors.hpp"

#include <json.hpp>

#include <istream>
#include <iterator>
#include <sstream>

namespace tuza {

namespace {

using json = nlohmann::ordered_json;

/// Whitespace-separated tokens of the text with `#` comments removed.
std::vector<std::string> tokens(std::string_view text)
{
    std::vector<std::string> out;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::string word;
        while (words >> word)
            out.push_back(word);
    }
    return out;
}

long long to_integer(const std::string& token, std::string_view what)
{
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || token.empty())
        throw InputError("expected an integer for " + std::string(what) + ", got '" + token + "'");
    return value;
}

json triangles_json(const TrianglePacking& triangles)
{
    json out = json::array();
    for (const auto& t : triangles)
        out.push_back({t.a, t.b, t.c});
    return out;
}

json edges_json(const EdgeSet& edges)
{
    json out = json::array();
    for (const auto& e : edges)
        out.push_back({e.u, e.v});
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text)
{
    const auto words = tokens(text);
    if (words.size() < 2)
        throw InputError("edge list needs a header line 'n m'");
    const auto n = to_integer(words[0], "vertex count");
    const auto m = to_integer(words[1], "edge count");
    if (n < 0 || n > max_vertices)
        throw InputError("vertex count " + std::to_string(n) + " out of range");
    if (m < 0 || static_cast<std::size_t>(m) * 2 != words.size() - 2)
        throw InputError("edge list declares " + std::to_string(m) + " edges but has " +
                         std::to_string(words.size() - 2) + " endpoint tokens");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 2; i < words.size(); i += 2) {
        const auto u = to_integer(words[i], "endpoint");
        const auto v = to_integer(words[i + 1], "endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("endpoint out of range in edge " + words[i] + " " + words[i + 1]);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return {static_cast<int>(n), edges};
}

Graph read_edge_list(std::istream& in)
{
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_edge_list(text);
}

std::string format_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

std::vector<int> parse_profile(std::string_view text)
{
    const auto words = tokens(text);
    if (words.size() < 2 || words[0] != "cochain")
        throw InputError("profile must start with 'cochain <size>'");
    const auto p = to_integer(words[1], "profile length");
    if (p < 0 || static_cast<std::size_t>(p) != words.size() - 2)
        throw InputError("profile declares " + std::to_string(p) + " entries but has " +
                         std::to_string(words.size() - 2));
    std::vector<int> profile;
    for (std::size_t i = 2; i < words.size(); ++i) {
        const auto a = to_integer(words[i], "profile entry");
        if (a < 0 || a > p)
            throw InputError("profile entry " + words[i] + " outside [0," + std::to_string(p) + "]");
        if (!profile.empty() && a > profile.back())
            throw InputError("profile must be non-increasing");
        profile.push_back(static_cast<int>(a));
    }
    return profile;
}

std::string format_profile(std::span<const int> profile)
{
    std::string out = "cochain " + std::to_string(profile.size()) + "\n";
    for (std::size_t i = 0; i < profile.size(); ++i)
        out += std::to_string(profile[i]) + (i + 1 == profile.size() ? "\n" : " ");
    return out;
}

std::string to_json(const CliquePackingResult& packing)
{
    json doc;
    doc["n"] = packing.n;
    doc["triangles"] = triangles_json(packing.triangles);
    doc["leave"] = edges_json(packing.leave);
    doc["optimal"] = packing.optimal;
    return doc.dump();
}

std::string to_json(const ConstructionReport& report)
{
    json doc;
    doc["caseLabel"] = std::string(to_string(report.case_label));
    doc["triangles"] = triangles_json(report.packing);
    doc["hitting"] = edges_json(report.hitting);
    doc["packingBound"] = report.packing_bound;
    doc["hittingBound"] = report.hitting_bound;
    doc["ratioOk"] = report.ratio_ok;
    doc["flags"] = report.flags;
    return doc.dump();
}

std::string to_json(const MuResult& result)
{
    json doc;
    doc["value"] = result.value;
    doc["witness"] = triangles_json(result.witness);
    doc["nodesExplored"] = result.nodes_explored;
    doc["exact"] = result.exact;
    return doc.dump();
}

std::string to_json(const TauResult& result)
{
    json doc;
    doc["value"] = result.value;
    doc["witness"] = edges_json(result.witness);
    doc["nodesExplored"] = result.nodes_explored;
    doc["exact"] = result.exact;
    return doc.dump();
}

ConstructionReport report_from_json(std::string_view text)
{
    try {
        const auto doc = json::parse(text);
        ConstructionReport report;
        report.case_label = parse_case_label(doc.at("caseLabel").get<std::string>());
        for (const auto& t : doc.at("triangles")) {
            if (t.size() != 3)
                throw InputError("triangle entries need three vertices");
            report.packing.push_back(Triangle::make(t[0].get<Vertex>(), t[1].get<Vertex>(), t[2].get<Vertex>()));
        }
        for (const auto& e : doc.at("hitting")) {
            if (e.size() != 2)
                throw InputError("hitting entries need two vertices");
            report.hitting.insert(Edge::make(e[0].get<Vertex>(), e[1].get<Vertex>()));
        }
        report.packing_bound = doc.at("packingBound").get<long long>();
        report.hitting_bound = doc.at("hittingBound").get<long long>();
        report.ratio_ok = doc.at("ratioOk").get<bool>();
        if (doc.contains("flags"))
            report.flags = doc.at("flags").get<std::vector<std::string>>();
        return report;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed report JSON: ") + e.what());
    }
}

}  // namespace tuza
