#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace netindex {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

/// Vertex count per degree.
using DegreeSpectrum = std::map<int, std::int64_t>;

/// Edge count per unordered endpoint-degree pair (i, j) with i <= j.
using DegreePairSpectrum = std::map<std::pair<int, int>, std::int64_t>;

/// Immutable simple undirected graph over dense 0-based vertex ids.
/// Adjacency lists and the edge list are kept sorted, so structurally equal
/// graphs compare equal member-wise.
class Graph {
public:
    Graph() = default;

    /// Validates and canonicalizes an edge list. Rejects self-loops,
    /// out-of-range endpoints and duplicate edges (a reversed copy of an
    /// earlier edge counts as a duplicate), naming the offending edge.
    static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    int degree(VertexId v) const;
    const std::vector<VertexId>& neighbors(VertexId v) const;

    /// Canonical edge list: each edge has u < v; edges sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const Graph&) const = default;

private:
    void require_vertex(VertexId v) const;

    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<Edge> edges_;
};

bool is_connected(const Graph& g);

DegreeSpectrum degree_spectrum(const Graph& g);
DegreePairSpectrum degree_pair_spectrum(const Graph& g);

}  // namespace netindex
