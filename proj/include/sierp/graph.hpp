#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sierp {

/// Unordered vertex pair stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..order-1.
///
/// Edges are kept sorted in canonical (u < v) order, so edge indices are
/// stable for a given edge set. Adjacency lists are sorted ascending.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on loops, repeated edges or out-of-range endpoints.
    Graph(int order, const std::vector<std::pair<int, int>>& edges,
          std::vector<std::string> labels = {});

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    /// Edge indices incident to v, parallel to neighbors(v).
    const std::vector<int>& incident(int v) const { return inc_.at(static_cast<std::size_t>(v)); }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const noexcept;
    bool adjacent(int a, int b) const;
    /// Index of edge {a,b}, or nullopt.
    std::optional<int> edge_index(int a, int b) const;

    /// Display label of a vertex; defaults to its 1-based index.
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool has_custom_labels() const noexcept { return custom_labels_; }
    std::optional<int> find_label(const std::string& s) const;

    /// FNV-1a over order and edge list; identifies the graph in coloring files.
    std::uint64_t fingerprint() const noexcept;

    bool is_connected() const;

    /// Short descriptive name such as "C5"; not part of the fingerprint.
    const std::string& name() const noexcept { return name_; }
    Graph& set_name(std::string n) {
        name_ = std::move(n);
        return *this;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
    std::vector<std::string> labels_;
    bool custom_labels_ = false;
    std::string name_ = "G";
};

/// The base graph G of S_G^n.
using BaseGraph = Graph;

Graph complete_graph(int p);
Graph cycle_graph(int k);
/// Path on k vertices (k-1 edges).
Graph path_graph(int k);
Graph petersen_graph();

/// Parses "K<p>", "C<k>" (k >= 3) or "P<k>". Throws InputError otherwise.
Graph parse_base_spec(const std::string& spec);

bool is_triangle_free(const Graph& g);
/// Returns a triangle (a < b < c) if one exists.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

/// Two-coloring side per vertex (0 or 1) if bipartite; the lowest vertex of
/// every component gets side 0.
std::optional<std::vector<int>> bipartition(const Graph& g);

} // namespace sierp

namespace sierp {

inline constexpr int kUnreachable = -1;

/// BFS distances from a set of sources; kUnreachable for vertices not reached.
std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& sources);

} // namespace sierp
