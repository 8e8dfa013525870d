#pragma once

#include "tuza/clique_decomp.hpp"
#include "tuza/constructions.hpp"
#include "tuza/graph.hpp"
#include "tuza/oracle.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tuza {

/// Edge-list text: first line `n m`, then m lines `u v` with 0-based
/// endpoints. `#` starts a comment running to the end of the line; blank
/// lines are ignored. Throws InputError on malformed text, a wrong edge
/// count or an invalid edge.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(std::istream& in);

/// Writes `n m` and the edges in lexicographic order.
std::string format_edge_list(const Graph& g);

/// Staircase profile text: `cochain p` followed by p integers.
/// Throws InputError on malformed text or a profile that is not
/// non-increasing within [0, p].
std::vector<int> parse_profile(std::string_view text);
std::string format_profile(std::span<const int> profile);

// JSON documents are single-line UTF-8 with keys in a fixed order.

/// {"n", "triangles", "leave", "optimal"}
std::string to_json(const CliquePackingResult& packing);

/// {"caseLabel", "triangles", "hitting", "packingBound", "hittingBound",
///  "ratioOk", "flags"}
std::string to_json(const ConstructionReport& report);

/// {"value", "witness", "nodesExplored", "exact"}
std::string to_json(const MuResult& result);
std::string to_json(const TauResult& result);

/// Parses the report document produced by to_json. Throws InputError.
ConstructionReport report_from_json(std::string_view text);

}  // namespace tuza
