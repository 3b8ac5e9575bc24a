#pragma once

#include "netindex/closed_forms.hpp"
#include "netindex/factored.hpp"
#include "netindex/family.hpp"
#include "netindex/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace netindex {

/// A named exact residual; zero means the identity holds.
struct Residual {
    std::string name;
    BigInt value;

    bool operator==(const Residual&) const = default;
};

bool all_zero(const std::vector<Residual>& residuals);

/// Degree-sum bookkeeping identities tying a vertex partition, an edge
/// partition and the graph totals together:
///   vertex-total   sum_i n_i - |V|
///   edge-total     sum_{i<=j} m_ij - |E|
///   degree-row[i]  sum_{j != i} m_ij + 2 m_ii - i * n_i
///   degree-sum     sum_i i * n_i - 2 |E|
/// All residuals are zero exactly when the partitions are consistent.
std::vector<Residual> check_lemma_identities(const DegreeSpectrum& ds,
                                             const DegreePairSpectrum& ps,
                                             std::int64_t vertex_count,
                                             std::int64_t edge_count);

/// Exact cross-checks between algebraically equivalent index routes on one
/// graph: the edge and vertex forms of Pi_2, Pi_{1,c} against NK^c for
/// c in {0,1,2,3}, chi_0 against |E| and chi_1 against M1. Requires a graph
/// without isolated vertices.
std::vector<Residual> self_consistency_suite(const Graph& g);

enum class VerifyStatus { Match, Mismatch, OutOfRange };

std::string_view verify_status_name(VerifyStatus status);

/// One adjudicated quantity of one family at one dimension.
struct ReportEntry {
    Family family;
    int n;
    std::string quantity;       // "vertex-table", "pi1c[c=2]", "chi[alpha=0.5]", ...
    std::string formula;        // symbolic reference expression
    std::string formula_value;  // reference value, exact rendering ("" out of range)
    std::string graph_value;    // value derived from the generated graph
    VerifyStatus status;

    bool operator==(const ReportEntry&) const = default;
};

struct StatusCounts {
    int match = 0;
    int mismatch = 0;
    int out_of_range = 0;
};

struct VerificationReport {
    std::vector<ReportEntry> entries;

    std::map<Family, StatusCounts> summary() const;
    int mismatch_count() const;

    /// Sorted, de-duplicated base names ("chi", "pi2") of mismatched entries.
    std::vector<std::string> mismatched_quantities() const;
};

/// Base name of a quantity id: "chi[alpha=2]" -> "chi".
std::string quantity_base(std::string_view quantity);

/// Adjudicates every cataloged quantity of one family over a dimension
/// range: partition tables, pi1c per c, pi2, pi1star, and chi per alpha,
/// each against the generated graph. Dimensions a formula does not cover
/// yield OUT_OF_RANGE entries instead of failures.
VerificationReport verify_family(Family family, int n_lo, int n_hi,
                                 const std::vector<std::int64_t>& c_values,
                                 const std::vector<double>& alpha_values);

}  // namespace netindex
