#pragma once

#include "netindex/graph.hpp"

#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace testsupport {

/// Seed shared by all randomized checks so every run sees the same graphs.
inline constexpr unsigned kSeed = 20260822u;

/// Connected graph on 2..max_vertices vertices: a random spanning tree plus
/// a sprinkle of extra edges.
inline netindex::Graph random_connected_graph(std::mt19937& rng, int min_vertices = 2,
                                              int max_vertices = 20) {
    std::uniform_int_distribution<int> size_dist(min_vertices, max_vertices);
    const int nv = size_dist(rng);
    std::set<netindex::Edge> edges;
    for (int v = 1; v < nv; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.insert({parent(rng), v});
    }
    std::bernoulli_distribution extra(0.25);
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v)
            if (!edges.count({u, v}) && extra(rng)) edges.insert({u, v});
    const std::vector<netindex::Edge> list(edges.begin(), edges.end());
    return netindex::Graph::from_edges(static_cast<std::size_t>(nv), list);
}

/// True when fn() throws Ex and the message contains needle.
template <typename Ex, typename Fn>
bool throws_with(Fn&& fn, std::string_view needle) {
    try {
        fn();
    } catch (const Ex& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    } catch (...) {
        return false;
    }
    return false;
}

}  // namespace testsupport
