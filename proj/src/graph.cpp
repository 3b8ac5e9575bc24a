#include "netindex/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace netindex {

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

}  // namespace

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    Graph g;
    g.adjacency_.resize(vertex_count);
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        const auto [u, v] = e;
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count ||
            static_cast<std::size_t>(v) >= vertex_count)
            throw std::invalid_argument("vertex id out of range in edge " + edge_str(e) +
                                        " for vertex count " + std::to_string(vertex_count));
        if (u == v) throw std::invalid_argument("self-loop " + edge_str(e));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end())
        throw std::invalid_argument("duplicate edge " + edge_str(*dup));
    for (const auto& [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

void Graph::require_vertex(VertexId v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= adjacency_.size())
        throw std::out_of_range("vertex id " + std::to_string(v) +
                                " out of range for vertex count " +
                                std::to_string(adjacency_.size()));
}

int Graph::degree(VertexId v) const {
    require_vertex(v);
    return static_cast<int>(adjacency_[v].size());
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    require_vertex(v);
    return adjacency_[v];
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack = {0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

DegreeSpectrum degree_spectrum(const Graph& g) {
    DegreeSpectrum spectrum;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        ++spectrum[g.degree(static_cast<VertexId>(v))];
    return spectrum;
}

DegreePairSpectrum degree_pair_spectrum(const Graph& g) {
    DegreePairSpectrum spectrum;
    for (const auto& [u, v] : g.edges()) {
        const int du = g.degree(u);
        const int dv = g.degree(v);
        ++spectrum[{std::min(du, dv), std::max(du, dv)}];
    }
    return spectrum;
}

}  // namespace netindex
