#include "netindex/io.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace netindex {

void write_edge_list(std::ostream& out, const LabeledNetwork& net) {
    out << family_name(net.spec.family) << " " << net.spec.n << " "
        << net.graph.vertex_count() << " " << net.graph.edge_count() << "\n";
    for (const auto& [u, v] : net.graph.edges()) out << u << " " << v << "\n";
}

EdgeListFile read_edge_list(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("empty edge-list input");
    std::istringstream head(header);
    std::string family_token;
    int n = 0;
    long long vertex_count = 0;
    long long edge_count = 0;
    if (!(head >> family_token >> n >> vertex_count >> edge_count))
        throw std::runtime_error("malformed edge-list header: '" + header + "'");
    std::string trailing;
    if (head >> trailing)
        throw std::runtime_error("trailing content in edge-list header: '" + header + "'");
    if (vertex_count < 0 || edge_count < 0)
        throw std::runtime_error("negative counts in edge-list header: '" + header + "'");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(edge_count));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        int u = 0;
        int v = 0;
        if (!(row >> u >> v) || (row >> trailing))
            throw std::runtime_error("malformed edge line: '" + line + "'");
        edges.emplace_back(u, v);
    }
    if (static_cast<long long>(edges.size()) != edge_count)
        throw std::runtime_error("edge count mismatch: header says " +
                                 std::to_string(edge_count) + ", found " +
                                 std::to_string(edges.size()));

    EdgeListFile file{parse_family(family_token), n,
                      Graph::from_edges(static_cast<std::size_t>(vertex_count), edges)};
    return file;
}

void write_report_json(std::ostream& out, const VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["entries"] = nlohmann::ordered_json::array();
    for (const ReportEntry& entry : report.entries) {
        nlohmann::ordered_json row;
        row["family"] = std::string(family_name(entry.family));
        row["n"] = entry.n;
        row["quantity"] = entry.quantity;
        row["status"] = std::string(verify_status_name(entry.status));
        row["formula"] = entry.formula;
        row["formula_value"] = entry.formula_value;
        row["graph_value"] = entry.graph_value;
        doc["entries"].push_back(std::move(row));
    }
    doc["summary"] = nlohmann::ordered_json::object();
    for (const auto& [family, counts] : report.summary()) {
        nlohmann::ordered_json row;
        row["match"] = counts.match;
        row["mismatch"] = counts.mismatch;
        row["out_of_range"] = counts.out_of_range;
        doc["summary"][std::string(family_name(family))] = std::move(row);
    }
    doc["mismatch_total"] = report.mismatch_count();
    out << doc.dump(2) << "\n";
}

}  // namespace netindex
