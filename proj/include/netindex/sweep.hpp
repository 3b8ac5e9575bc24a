#pragma once

#include "netindex/family.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace netindex {

/// One computed value of one index on one generated family graph.
struct SweepRow {
    Family family;
    int n;
    IndexKind index;
    std::string param;        // "c=2", "alpha=2" or "" for parameter-free indices
    double value_log10;
    std::string value_exact;  // decimal when it fits 40 digits, else ""

    bool operator==(const SweepRow&) const = default;
};

struct SweepOptions {
    std::vector<Family> families{kAllFamilies.begin(), kAllFamilies.end()};
    int n_lo = 2;
    int n_hi = 12;
    std::vector<IndexKind> indices{IndexKind::Pi1c, IndexKind::Pi2, IndexKind::Chi,
                                   IndexKind::Pi1Star};
    double c = 2.0;
    double alpha = 2.0;
};

/// Computes every requested index on every generated graph of the sweep.
/// Values come from the graphs, not from the closed-form catalog. Rows are
/// sorted by (family, index, n). Dimensions start at 2 so every family is
/// defined everywhere in the range.
std::vector<SweepRow> compute_sweep(const SweepOptions& options);

/// CSV with the fixed header family,n,index,param,value_log10,value_exact.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Strict parser for the same CSV; unknown columns are an error naming the
/// column.
std::vector<SweepRow> read_sweep_csv(std::istream& in);

}  // namespace netindex
