#include "netindex/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace netindex {

namespace {

void require_dimension(int n, const char* family) {
    if (n < 1)
        throw std::invalid_argument("invalid dimension: " + std::string(family) +
                                    "_n requires n >= 1, got n = " + std::to_string(n));
}

// Axial coordinates (x, y) on the triangular lattice, z = -x - y implied.
// The hexagonal patch of radius r keeps every point with
// max(|x|, |y|, |x + y|) <= r.
bool in_patch(int x, int y, int r) {
    return std::abs(x) <= r && std::abs(y) <= r && std::abs(x + y) <= r;
}

// Patch vertices labeled in row-major (x ascending, then y ascending) order.
class HexPatch {
public:
    explicit HexPatch(int radius) : radius_(radius) {
        int next = 0;
        for (int x = -radius; x <= radius; ++x)
            for (int y = -radius; y <= radius; ++y)
                if (in_patch(x, y, radius)) ids_.emplace(std::pair{x, y}, next++);
    }

    int radius() const { return radius_; }
    int size() const { return static_cast<int>(ids_.size()); }

    // -1 when (x, y) lies outside the patch.
    int id_at(int x, int y) const {
        const auto it = ids_.find({x, y});
        return it == ids_.end() ? -1 : it->second;
    }

    const std::map<std::pair<int, int>, int>& ids() const { return ids_; }

private:
    int radius_;
    std::map<std::pair<int, int>, int> ids_;
};

}  // namespace

LabeledNetwork gen_hexagonal(int n) {
    require_dimension(n, "HX");
    const HexPatch patch(n - 1);
    // Each undirected lattice edge is generated once: of the six unit
    // directions, these three cover one member of every +/- pair.
    constexpr std::pair<int, int> kHalfDirections[] = {{1, 0}, {0, 1}, {1, -1}};
    std::vector<Edge> edges;
    for (const auto& [point, id] : patch.ids()) {
        for (const auto& [dx, dy] : kHalfDirections) {
            const int other = patch.id_at(point.first + dx, point.second + dy);
            if (other >= 0) edges.emplace_back(id, other);
        }
    }
    Graph g = Graph::from_edges(static_cast<std::size_t>(patch.size()), edges);
    return {std::move(g), {Family::HX, n},
            std::vector<VertexRole>(patch.size(), VertexRole::Plain)};
}

LabeledNetwork gen_honeycomb(int n) {
    require_dimension(n, "HC");
    // Honeycomb cells are dual to the unit triangles of the radius-n patch:
    // one vertex per triangle, one edge per shared triangle side. An upward
    // triangle at (q, r) has corners (q, r), (q+1, r), (q, r+1); a downward
    // one has corners (q+1, r), (q, r+1), (q+1, r+1).
    const int r = n;
    const auto up_in_patch = [r](int q, int s) {
        return in_patch(q, s, r) && in_patch(q + 1, s, r) && in_patch(q, s + 1, r);
    };
    const auto down_in_patch = [r](int q, int s) {
        return in_patch(q + 1, s, r) && in_patch(q, s + 1, r) && in_patch(q + 1, s + 1, r);
    };

    std::map<std::pair<int, int>, int> up_ids;
    std::map<std::pair<int, int>, int> down_ids;
    int next = 0;
    for (int q = -r - 1; q <= r; ++q) {
        for (int s = -r - 1; s <= r; ++s) {
            if (up_in_patch(q, s)) up_ids.emplace(std::pair{q, s}, next++);
            if (down_in_patch(q, s)) down_ids.emplace(std::pair{q, s}, next++);
        }
    }

    // Every shared side pairs an upward with a downward triangle, so listing
    // the (up, down) contacts covers each edge exactly once.
    std::vector<Edge> edges;
    for (const auto& [pos, id] : up_ids) {
        const auto [q, s] = pos;
        for (const auto& [dq, ds] : {std::pair{0, 0}, std::pair{-1, 0}, std::pair{0, -1}}) {
            const auto it = down_ids.find({q + dq, s + ds});
            if (it != down_ids.end()) edges.emplace_back(id, it->second);
        }
    }
    Graph g = Graph::from_edges(static_cast<std::size_t>(next), edges);
    return {std::move(g), {Family::HC, n}, std::vector<VertexRole>(next, VertexRole::Plain)};
}

LabeledNetwork gen_silicate(int n) {
    require_dimension(n, "SL");
    const LabeledNetwork base = gen_honeycomb(n);
    const Graph& hc = base.graph;
    const int silicon_count = static_cast<int>(hc.vertex_count());
    const int bridge_count = static_cast<int>(hc.edge_count());

    // Ids: silicons keep the honeycomb ids; then one bridging oxygen per
    // honeycomb edge (in canonical edge order); then one pendant oxygen per
    // boundary (degree-2) silicon, in ascending silicon order.
    std::map<Edge, int> bridge_of;
    for (int e = 0; e < bridge_count; ++e)
        bridge_of.emplace(hc.edges()[static_cast<std::size_t>(e)], silicon_count + e);

    std::vector<int> pendant_of(static_cast<std::size_t>(silicon_count), -1);
    int next = silicon_count + bridge_count;
    for (int v = 0; v < silicon_count; ++v)
        if (hc.degree(v) == 2) pendant_of[static_cast<std::size_t>(v)] = next++;

    // Each silicon and its three oxygens form a tetrahedron (a K4). Distinct
    // tetrahedra share at most one oxygen, so no edge is generated twice.
    std::vector<Edge> edges;
    for (int v = 0; v < silicon_count; ++v) {
        std::vector<int> oxygens;
        for (VertexId w : hc.neighbors(v))
            oxygens.push_back(bridge_of.at({std::min(v, w), std::max(v, w)}));
        if (pendant_of[static_cast<std::size_t>(v)] >= 0)
            oxygens.push_back(pendant_of[static_cast<std::size_t>(v)]);
        for (std::size_t i = 0; i < oxygens.size(); ++i) {
            edges.emplace_back(v, oxygens[i]);
            for (std::size_t j = i + 1; j < oxygens.size(); ++j)
                edges.emplace_back(oxygens[i], oxygens[j]);
        }
    }

    Graph g = Graph::from_edges(static_cast<std::size_t>(next), edges);
    std::vector<VertexRole> roles(static_cast<std::size_t>(next), VertexRole::Oxygen);
    for (int v = 0; v < silicon_count; ++v) roles[static_cast<std::size_t>(v)] = VertexRole::Silicon;
    return {std::move(g), {Family::SL, n}, std::move(roles)};
}

LabeledNetwork gen_oxide(int n) {
    require_dimension(n, "OX");
    const LabeledNetwork sl = gen_silicate(n);

    // Delete the silicon vertices; surviving oxygens are renumbered densely
    // in their original order.
    std::vector<int> new_id(sl.graph.vertex_count(), -1);
    int next = 0;
    for (std::size_t v = 0; v < sl.graph.vertex_count(); ++v)
        if (sl.roles[v] == VertexRole::Oxygen) new_id[v] = next++;

    std::vector<Edge> edges;
    for (const auto& [u, v] : sl.graph.edges()) {
        const int nu = new_id[static_cast<std::size_t>(u)];
        const int nv = new_id[static_cast<std::size_t>(v)];
        if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
    }

    Graph g = Graph::from_edges(static_cast<std::size_t>(next), edges);
    return {std::move(g), {Family::OX, n},
            std::vector<VertexRole>(static_cast<std::size_t>(next), VertexRole::Oxygen)};
}

LabeledNetwork gen_chain_silicate(int n) {
    require_dimension(n, "CS");
    // Tetrahedron i (1-based) is a K4 on {3i-3, 3i-2, 3i-1, 3i}; consecutive
    // tetrahedra share the single corner 3i.
    const int vertex_count = 3 * n + 1;
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        const int base = 3 * (i - 1);
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) edges.emplace_back(base + a, base + b);
    }
    Graph g = Graph::from_edges(static_cast<std::size_t>(vertex_count), edges);

    // One silicon per tetrahedron, always an unshared corner: 0 for the
    // first, 3i-2 for the rest.
    std::vector<VertexRole> roles(static_cast<std::size_t>(vertex_count), VertexRole::Oxygen);
    roles[0] = VertexRole::Silicon;
    for (int i = 2; i <= n; ++i)
        roles[static_cast<std::size_t>(3 * i - 2)] = VertexRole::Silicon;
    return {std::move(g), {Family::CS, n}, std::move(roles)};
}

LabeledNetwork generate(const NetworkSpec& spec) {
    switch (spec.family) {
        case Family::SL: return gen_silicate(spec.n);
        case Family::CS: return gen_chain_silicate(spec.n);
        case Family::HX: return gen_hexagonal(spec.n);
        case Family::OX: return gen_oxide(spec.n);
        case Family::HC: return gen_honeycomb(spec.n);
    }
    throw std::logic_error("unhandled Family value");
}

}  // namespace netindex
