#pragma once

#include "sierp/graph.hpp"
#include "sierp/sierpinski.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sierp {

enum class ColoringKind { Vertex, Edge };

/// Total map vertex -> color in 1..k. colors[v] == 0 means "missing".
struct VertexColoring {
    int k = 0;
    std::vector<int> colors;
    /// Fingerprint of the graph this coloring belongs to; 0 = unspecified.
    std::uint64_t graph_fingerprint = 0;
};

/// Total map edge index -> color in 1..k, indexed like Graph::edges().
struct EdgeColoring {
    int k = 0;
    std::vector<int> colors;
    std::uint64_t graph_fingerprint = 0;
};

/// Builds a coloring bound to g. With k == 0 the palette is the largest color used.
VertexColoring make_vertex_coloring(const Graph& g, std::vector<int> colors, int k = 0);
EdgeColoring make_edge_coloring(const Graph& g, std::vector<int> colors, int k = 0);

/// A certificate that a coloring is not injective.
///
/// Vertex kind: witness = (u, w, z) with u < w, f(u) = f(w) and z a common
/// neighbor. Edge kind: witness = (e1, e2, e3) edge indices with e1 < e3,
/// e2 a common edge of e1 and e3 and c(e1) = c(e3).
struct Violation {
    ColoringKind kind = ColoringKind::Vertex;
    std::array<int, 3> witness{};
    int color = 0;
};

std::string describe(const Graph& g, const Violation& v);

/// Returns the lexicographically first violation, or nullopt if f is injective.
/// Throws InputError for a missing or out-of-range color or a size/graph mismatch.
std::optional<Violation> validate_vertex(const Graph& g, const VertexColoring& f);
std::optional<Violation> validate_edge(const Graph& g, const EdgeColoring& c);

/// Re-checks a violation against the graph and coloring by direct inspection.
bool witness_holds(const Graph& g, const VertexColoring& f, const Violation& v);
bool witness_holds(const Graph& g, const EdgeColoring& c, const Violation& v);

/// Proper coloring check for plain graphs (colors nonzero, adjacent differ).
bool is_proper(const Graph& g, std::span<const int> colors);

int used_colors(const VertexColoring& f);
int used_colors(const EdgeColoring& c);

/// Reason the extreme-vertex condition fails, or nullopt if it holds.
/// Throws like check_extreme_condition.
std::optional<std::string> extreme_condition_failure(const SierpinskiGraph& s2,
                                                     const VertexColoring& f2);

/// All extreme vertices of S_G^2 share one color which none of their
/// neighbors carries. Throws PreconditionError if f2 is not injective or
/// s2 is not two-dimensional.
bool check_extreme_condition(const SierpinskiGraph& s2, const VertexColoring& f2);

/// First offending (vertex, extreme) pair for condition i, or nullopt.
std::optional<std::string> condition_i_failure(const SierpinskiGraph& s3, const EdgeColoring& c3);
std::optional<std::string> condition_ii_failure(const SierpinskiGraph& s3, const EdgeColoring& c3,
                                                const std::vector<int>& side);

/// Every vertex incident to a color-k edge is at distance >= 3 from all
/// extreme vertices of S_G^3. Throws PreconditionError if c3 is invalid.
bool check_condition_i(const SierpinskiGraph& s3, const EdgeColoring& c3);

/// side[v] = 0 for v in A and 1 for v in B. Every edge at (u,u,u), u in A,
/// has color k, and every vertex incident to a color-k edge is at distance
/// >= 2 from all (v,v,v), v in B. Throws InputError if side is not a
/// bipartition of the base graph.
bool check_condition_ii(const SierpinskiGraph& s3, const EdgeColoring& c3,
                        const std::vector<int>& side);

/// Throws InputError unless side is a valid bipartition of g.
void require_bipartition(const Graph& g, const std::vector<int>& side);

enum class S3Type { A, B };

/// Boundary contract of the two 5-colorings of S_3^n. Extreme vertices
/// 0.0...0 (top), 1.1...1 (bottom-left) and 2.2...2 (bottom-right):
/// top sees colors {1,4}; bottom-right sees {3,5} and its 5-edge touches no
/// other 5-edge; bottom-left sees {1,4} for type A and behaves like the
/// bottom-right for type B.
bool check_s3_type(const SierpinskiGraph& s, const EdgeColoring& c, S3Type type);

/// Distance of every vertex of `materialized` (= s.materialize()) to the
/// nearest extreme vertex (b,...,b) with b in `bases`.
std::vector<int> extreme_distances(const SierpinskiGraph& s, const Graph& materialized,
                                   const std::vector<int>& bases);

} // namespace sierp
