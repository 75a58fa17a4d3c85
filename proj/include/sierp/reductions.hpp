#pragma once

#include "sierp/graph.hpp"

#include <vector>

namespace sierp {

enum class ConflictKind { CommonNeighbor, EdgeCommon };

/// A derived graph whose proper colorings are exactly the injective
/// colorings (vertex or edge version) of the source graph.
struct ConflictGraph {
    ConflictKind kind = ConflictKind::CommonNeighbor;
    Graph graph;
    /// node_map[i] = source vertex (CommonNeighbor) or source edge index (EdgeCommon).
    std::vector<int> node_map;
};

/// Nodes are V(s); distinct u, w are joined iff they have a common neighbor.
ConflictGraph common_neighbor_graph(const Graph& s);

/// Nodes are E(s); two edges are joined iff they have a common edge, i.e. they
/// are e1 and e3 of consecutive edges e1 = xy, e2 = yz, e3 = zu (u = x allowed).
/// Throws InputError if s has no edges.
ConflictGraph tilde_graph(const Graph& s);

/// The 6-vertex lower-bound gadget for S_3^2: a pair of triangle edges and a
/// pair of edges at the far end, tied by three further edges.
Graph gadget_H();
/// The 15-vertex, 20-edge lower-bound gadget for S_3^n, n >= 3. Edge order
/// follows the gadget's edge numbering 1..20.
Graph gadget_P();
/// Edge numbering of gadget_P(): number[i] is the 1-based label of edge i.
std::vector<int> gadget_P_edge_numbers();

} // namespace sierp
