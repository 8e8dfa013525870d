#pragma once

#include "tuza/graph.hpp"
#include "tuza/graph_classes.hpp"
#include "tuza/oracle.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tuza {

enum class CaseLabel {
    EVEN_BIG_X,
    EVEN_SMALL_X,
    ODD_BIG_X,
    ODD_SMALL_X,
    CC_BAL_EQ,
    CC_BAL_LT,
    CC_BAL_LT_ODD,
    CC_BAL_NOEDGE,
    CC_BIG,
    CC_BIG_FULL,
    ORACLE_FALLBACK,
};

std::string_view to_string(CaseLabel label);

/// Inverse of to_string; throws InputError on an unknown name.
CaseLabel parse_case_label(std::string_view name);

/// Packing and hitting certificates for one graph together with the sizes
/// the matching proof branch guarantees.
struct ConstructionReport {
    CaseLabel case_label = CaseLabel::EVEN_BIG_X;
    TrianglePacking packing;
    HittingSet hitting;
    long long packing_bound = 0;
    long long hitting_bound = 0;
    /// |hitting| <= 2 |packing|.
    bool ratio_ok = true;
    /// Empirical checks of statements the construction relies on; empty
    /// when every check held.
    std::vector<std::string> flags;
};

struct CaseBounds {
    CaseLabel label;
    long long packing_bound;
    long long hitting_bound;
};

/// Case and guaranteed sizes for a normalized threshold representation with
/// clique size k and |X| = x.
CaseBounds threshold_case_bounds(long long k, long long x);

/// Case and guaranteed sizes for an even balanced co-chain representation
/// with x1 >= x2 and ell >= 4. `bottom_edge` tells whether some edge joins
/// K1_bot and K2_bot; it only matters for odd x1 < ell.
CaseBounds cochain_case_bounds(long long ell, long long x1, long long x2, bool bottom_edge);

/// Threshold construction. Throws PreconditionError when `r` is not a valid
/// normalized representation.
ConstructionReport threshold_construct(const ThresholdRepr& r);

/// Co-chain construction. Roles are swapped first when x1 < x2. For ell < 4
/// the certificates come from the exact oracle (ORACLE_FALLBACK). Throws
/// PreconditionError when `r` is invalid or not even balanced, and
/// InexactError if the fallback search exceeds `budget`.
ConstructionReport cochain_construct(const CoChainRepr& r, std::uint64_t budget = default_node_budget);

enum class CertificateCheck { packing_valid, hitting_valid, ratio, bounds };

std::string_view to_string(CertificateCheck check);

struct VerificationOutcome {
    bool pass = true;
    std::optional<CertificateCheck> failed;
    std::string message;
};

/// Runs the checks in order and stops at the first failure:
/// packing triangles exist in g and are pairwise edge-disjoint; removing the
/// hitting edges leaves g triangle-free; |hitting| <= 2 |packing|;
/// |packing| >= packing_bound, |hitting| <= hitting_bound and
/// hitting_bound <= 2 packing_bound.
VerificationOutcome verify_certificates(const Graph& g, const ConstructionReport& report);

/// True when the triangles exist in g and share no edge.
bool is_valid_packing(const Graph& g, const TrianglePacking& packing);

/// True when every edge is in g and g minus the edges is triangle-free.
bool is_valid_hitting(const Graph& g, const HittingSet& hitting);

}  // namespace tuza
