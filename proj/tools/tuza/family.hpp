#pragma once

#include "tuza/graph.hpp"
#include "tuza/graph_classes.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace tuza::cli {

/// One graph of a family together with the representation it was built
/// from, when the family knows it.
struct FamilyItem {
    std::string id;
    Graph g;
    std::optional<ThresholdRepr> threshold;
    std::optional<CoChainRepr> cochain;
};

/// Lazily generated graph family; item(i) is deterministic.
struct Family {
    std::string descriptor;
    std::size_t count = 0;
    std::function<FamilyItem(std::size_t)> item;
};

/// Parses `threshold:<bits>`, `threshold-all:<n>`, `cochain:<profile-file>`,
/// `cochain-rand:<l>:<count>`, `clique:<n>` or `clique:<a>..<b>`.
/// Throws InputError on a malformed descriptor or unreadable file.
Family parse_family(std::string_view descriptor, std::uint64_t seed);

/// Seed of the i-th sample of a random family.
std::uint64_t item_seed(std::uint64_t seed, std::size_t index);

}  // namespace tuza::cli
