#include "sierp/reductions.hpp"

#include "sierp/errors.hpp"

#include <algorithm>
#include <numeric>

namespace sierp {

ConflictGraph common_neighbor_graph(const Graph& s) {
    std::vector<std::pair<int, int>> pairs;
    for (int z = 0; z < s.order(); ++z) {
        const auto& nb = s.neighbors(z);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                pairs.emplace_back(nb[i], nb[j]);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    ConflictGraph out;
    out.kind = ConflictKind::CommonNeighbor;
    out.graph = Graph(s.order(), pairs, s.labels());
    out.graph.set_name("N(" + s.name() + ")");
    out.node_map.resize(s.order());
    std::iota(out.node_map.begin(), out.node_map.end(), 0);
    return out;
}

ConflictGraph tilde_graph(const Graph& s) {
    if (s.size() == 0)
        throw InputError("tilde graph needs at least one edge");
    std::vector<std::pair<int, int>> pairs;
    // enumerate triples by their middle edge e2 = yz
    for (int e2 = 0; e2 < s.size(); ++e2) {
        const Edge& m = s.edge(e2);
        for (int e1 : s.incident(m.u)) {
            if (e1 == e2)
                continue;
            for (int e3 : s.incident(m.v)) {
                if (e3 == e2 || e3 == e1)
                    continue;
                pairs.emplace_back(std::min(e1, e3), std::max(e1, e3));
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<std::string> labels;
    labels.reserve(s.size());
    for (const auto& e : s.edges())
        labels.push_back(s.label(e.u) + "|" + s.label(e.v));
    ConflictGraph out;
    out.kind = ConflictKind::EdgeCommon;
    out.graph = Graph(s.size(), pairs, std::move(labels));
    out.graph.set_name("T(" + s.name() + ")");
    out.node_map.resize(s.size());
    std::iota(out.node_map.begin(), out.node_map.end(), 0);
    return out;
}

Graph gadget_H() {
    // 1-based: 23, 31, 45, 46 carry four distinct colors; 12, 34, 56 tie them together
    const std::vector<std::pair<int, int>> e1 = {{2, 3}, {3, 1}, {4, 5}, {4, 6},
                                                 {1, 2}, {3, 4}, {5, 6}};
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : e1)
        e.emplace_back(a - 1, b - 1);
    Graph g(6, e);
    g.set_name("H");
    return g;
}

namespace {

// (u, v, edge number), vertices 1-based
struct NumberedEdge {
    int u, v, number;
};

const std::vector<NumberedEdge>& p_edges() {
    static const std::vector<NumberedEdge> edges = {
        {1, 2, 3},    {1, 9, 1},    {9, 2, 2},    {2, 3, 4},    {3, 10, 5},
        {10, 4, 7},   {3, 4, 6},    {4, 8, 8},    {8, 11, 9},   {11, 14, 12},
        {14, 15, 17}, {15, 13, 18}, {13, 12, 19}, {12, 5, 20},  {5, 6, 14},
        {7, 6, 13},   {8, 7, 10},   {11, 7, 11},  {6, 12, 15},  {13, 14, 16},
    };
    return edges;
}

} // namespace

Graph gadget_P() {
    std::vector<std::pair<int, int>> e;
    for (const auto& x : p_edges())
        e.emplace_back(x.u - 1, x.v - 1);
    Graph g(15, e);
    g.set_name("P");
    return g;
}

std::vector<int> gadget_P_edge_numbers() {
    const Graph g = gadget_P();
    std::vector<int> numbers(g.size(), 0);
    for (const auto& x : p_edges())
        numbers[*g.edge_index(x.u - 1, x.v - 1)] = x.number;
    return numbers;
}

} // namespace sierp
