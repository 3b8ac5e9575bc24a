#pragma once

#include "netindex/family.hpp"
#include "netindex/generators.hpp"
#include "netindex/graph.hpp"
#include "netindex/verify.hpp"

#include <iosfwd>

namespace netindex {

/// Edge-list text format: a header line "<FAMILY> <n> <|V|> <|E|>" followed
/// by one "u v" line per edge with u < v, sorted lexicographically.
void write_edge_list(std::ostream& out, const LabeledNetwork& net);

struct EdgeListFile {
    Family family;
    int n;
    Graph graph;
};

/// Parses and validates an edge-list file; malformed content, count
/// mismatches and invalid edges raise std::runtime_error or the Graph
/// validation errors.
EdgeListFile read_edge_list(std::istream& in);

/// Verification report as deterministic JSON: the entry list, a per-family
/// status summary and the total mismatch count.
void write_report_json(std::ostream& out, const VerificationReport& report);

}  // namespace netindex
