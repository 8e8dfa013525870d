#pragma once

#include "family.hpp"

#include "tuza/constructions.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tuza::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    class_error = 2,
    verification_failure = 3,
    budget_exceeded = 4,
};

enum class GraphClass { automatic, threshold, cochain };

struct Classified {
    std::string name;
    std::optional<ThresholdRepr> threshold;
    std::optional<CoChainRepr> cochain;
};

/// Picks the representation used for the constructions. Family-provided
/// representations win under `automatic`; otherwise threshold recognition
/// runs before co-chain recognition. Throws ClassMembershipError.
Classified classify(const FamilyItem& item, GraphClass wanted);

ConstructionReport construct(const Classified& c, std::uint64_t budget);

struct SweepOptions {
    int exact_below = 0;
    std::uint64_t budget = 0;
    GraphClass wanted = GraphClass::automatic;
};

struct SweepRow {
    std::string graph_id;
    int n = 0;
    std::string graph_class;
    std::string case_label;
    long long pack_size = 0;
    long long hit_size = 0;
    std::optional<long long> mu;
    std::optional<long long> tau;
    bool exact = false;
    long long ratio_num = 0;
    long long ratio_den = 1;
    bool pass = false;
    /// The oracle ran out of budget on a graph below --exact-below.
    bool inexact = false;
    bool class_failure = false;
};

SweepRow sweep_row(const FamilyItem& item, const SweepOptions& options);

inline constexpr const char* csv_header = "graphId,n,class,caseLabel,packSize,hitSize,mu,tau,exact,ratioNum,ratioDen,pass";

std::string to_csv(const SweepRow& row);

/// Computes all rows of the family with `jobs` worker threads, sorted by
/// graph id.
std::vector<SweepRow> run_sweep(const Family& family, const SweepOptions& options, int jobs);

/// Node budget from TUZA_ORACLE_BUDGET or the library default. Throws
/// InputError on an unparsable value.
std::uint64_t default_budget();

/// Entry point of the `tuza` executable.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace tuza::cli
