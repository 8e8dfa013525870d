#include "family.hpp"

#include "tuza/errors.hpp"
#include "tuza/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>

namespace tuza::cli {

namespace {

long long parse_number(std::string_view text, std::string_view what)
{
    long long value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw InputError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

std::string padded(long long value, int width)
{
    auto s = std::to_string(value);
    if (static_cast<int>(s.size()) < width)
        s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
    return s;
}

Family single(std::string descriptor, FamilyItem item)
{
    auto shared = std::make_shared<FamilyItem>(std::move(item));
    return {std::move(descriptor), 1, [shared](std::size_t) { return *shared; }};
}

}  // namespace

std::uint64_t item_seed(std::uint64_t seed, std::size_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(std::uint64_t{index} >> 32)};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (std::uint64_t{words[0]} << 32) | words[1];
}

Family parse_family(std::string_view descriptor, std::uint64_t seed)
{
    const auto colon = descriptor.find(':');
    if (colon == std::string_view::npos)
        throw InputError("family '" + std::string(descriptor) + "' needs the form kind:argument");
    const auto kind = descriptor.substr(0, colon);
    const auto arg = descriptor.substr(colon + 1);
    const std::string name(descriptor);

    if (kind == "threshold") {
        auto [g, repr] = threshold_from_creation_sequence(arg);
        return single(name, {"thr" + padded(g.size(), 2) + "-" + std::string(arg), g, repr, std::nullopt});
    }
    if (kind == "threshold-all") {
        const auto n = parse_number(arg, "vertex count");
        if (n < 1 || n > 30)
            throw InputError("threshold-all supports 1 <= n <= 30");
        const auto enumeration = enumerate_threshold(static_cast<int>(n));
        return {name, static_cast<std::size_t>(enumeration.count()), [n](std::size_t i) {
                    const auto bits = creation_sequence(static_cast<int>(n), i);
                    auto [g, repr] = threshold_from_creation_sequence(bits);
                    return FamilyItem{"thr" + padded(n, 2) + "-" + bits, g, repr, std::nullopt};
                }};
    }
    if (kind == "cochain") {
        const std::filesystem::path path{std::string(arg)};
        std::ifstream in(path);
        if (!in)
            throw InputError("cannot read profile file '" + path.string() + "'");
        std::stringstream text;
        text << in.rdbuf();
        const auto profile = parse_profile(text.str());
        auto [g, repr] = cochain_from_profile(profile);
        return single(name, {"cc-" + path.stem().string(), g, std::nullopt, repr});
    }
    if (kind == "cochain-rand") {
        const auto sep = arg.find(':');
        if (sep == std::string_view::npos)
            throw InputError("cochain-rand needs the form cochain-rand:<l>:<count>");
        const auto ell = parse_number(arg.substr(0, sep), "l");
        const auto count = parse_number(arg.substr(sep + 1), "count");
        if (ell < 1 || ell > 512 || count < 0)
            throw InputError("cochain-rand needs 1 <= l <= 512 and count >= 0");
        return {name, static_cast<std::size_t>(count), [ell, seed](std::size_t i) {
                    auto [g, repr] = sample_cochain(static_cast<int>(ell), item_seed(seed, i));
                    return FamilyItem{"ccr" + padded(ell, 3) + "-" + padded(static_cast<long long>(i), 6), g,
                                      std::nullopt, repr};
                }};
    }
    if (kind == "clique") {
        long long lo = 0;
        long long hi = 0;
        if (const auto dots = arg.find(".."); dots != std::string_view::npos) {
            lo = parse_number(arg.substr(0, dots), "clique size");
            hi = parse_number(arg.substr(dots + 2), "clique size");
        } else {
            lo = hi = parse_number(arg, "clique size");
        }
        if (lo < 0 || hi > max_vertices)
            throw InputError("clique sizes must lie in [0, " + std::to_string(max_vertices) + "]");
        const auto count = hi < lo ? 0 : static_cast<std::size_t>(hi - lo + 1);
        return {name, count, [lo](std::size_t i) {
                    const auto n = lo + static_cast<long long>(i);
                    return FamilyItem{"K" + padded(n, 4), complete_graph(static_cast<int>(n)), std::nullopt,
                                      std::nullopt};
                }};
    }
    throw InputError("unknown family kind '" + std::string(kind) + "'");
}

}  // namespace tuza::cli
