#pragma once

#include "netindex/family.hpp"
#include "netindex/graph.hpp"

#include <vector>

namespace netindex {

/// Which family graph to build and at which dimension (n >= 1).
struct NetworkSpec {
    Family family;
    int n;

    bool operator==(const NetworkSpec&) const = default;
};

/// Chemical role of a vertex. Lattice families (HX, HC) tag every vertex
/// Plain; silicate-derived families distinguish silicon from oxygen atoms,
/// which is what makes the silicate -> oxide deletion well defined.
enum class VertexRole { Plain, Silicon, Oxygen };

struct LabeledNetwork {
    Graph graph;
    NetworkSpec spec;
    std::vector<VertexRole> roles;  // one per vertex id
};

/// Hexagonal lattice patch HX_n: the triangular lattice restricted to a
/// hexagon with n vertices on each side. HX_1 is a single vertex.
LabeledNetwork gen_hexagonal(int n);

/// Honeycomb lattice HC_n: n rings of hexagonal cells; HC_1 is the 6-cycle.
LabeledNetwork gen_honeycomb(int n);

/// Sheet silicate SL_n: a corner-sharing SiO4 tetrahedron on every vertex of
/// HC_n, with bridging oxygens on its edges and one pendant oxygen per
/// boundary silicon.
LabeledNetwork gen_silicate(int n);

/// Oxide network OX_n: SL_n with the silicon vertices deleted.
LabeledNetwork gen_oxide(int n);

/// Chain silicate CS_n: n corner-sharing tetrahedra in a row; CS_1 is K4.
LabeledNetwork gen_chain_silicate(int n);

LabeledNetwork generate(const NetworkSpec& spec);

}  // namespace netindex
