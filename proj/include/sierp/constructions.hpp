#pragma once

#include "sierp/certificates.hpp"
#include "sierp/coloring.hpp"
#include "sierp/sierpinski.hpp"
#include "sierp/solver.hpp"

#include <utility>
#include <vector>

namespace sierp {

// Vertex colorings returned here are indexed by word index of the target
// S_G^n (= vertex index of its materialization); edge colorings by edge
// index of the materialization.

/// f1(u) = f2(u_{n-1}, u_n) if u_{n-1} != u_n, else k + 1. Needs n >= 3.
VertexColoring lift_vertex_plus_one(const SierpinskiGraph& s2, const VertexColoring& f2, int n);

/// f1(w) = f2(w_{n-1}, w_n). Needs n >= 2 and f2 satisfying the
/// extreme-vertex condition; the PreconditionError names the failing clause.
VertexColoring lift_vertex_projection(const SierpinskiGraph& s2, const VertexColoring& f2, int n);

/// Injective 3-coloring of S_{C_k}^2 with all extremes colored 3 and no
/// extreme neighbor colored 3. For k >= 5 each copy i reads, from (i,i)
/// onward, 3, 2, 2, then the repeating 1122 block, a k mod 4 dependent
/// filler of 3s, and 1, 1 back to (i,i). Throws PreconditionError for k = 3,
/// where no such coloring exists, and InputError for k < 3.
VertexColoring cycle_s2_coloring(int k);

/// Colors (u1,u2) with f(u2), extremes with k + 1.
VertexColoring extreme_plus_one_s2(const Graph& g, const VertexColoring& f);

/// Designated endpoint per base edge (indexed like Graph::edges()).
struct ChoiceFunction {
    std::vector<int> chosen;
};

/// Picks the smaller endpoint of every edge.
ChoiceFunction default_choice(const Graph& g);
/// Picks the larger endpoint of every edge.
ChoiceFunction reverse_choice(const Graph& g);
/// Throws InputError unless every entry is an endpoint of its edge.
void require_choice(const Graph& g, const ChoiceFunction& choice);

/// prefix + a, prefix + b as a canonical edge of `host`. Throws InputError
/// for an invalid prefix or if the image is not an edge of host.
std::pair<Word, Word> copy_map(const SierpinskiGraph& host, const Word& prefix, const Word& a,
                               const Word& b);

/// Upper-bound lift of an injective edge k-coloring of S_G^3 (G
/// triangle-free) to S_G^n, n >= 4, using colors 1..k+1.
EdgeColoring edge_lift_general(const SierpinskiGraph& s3, const EdgeColoring& f3, int n,
                               const ChoiceFunction& choice);
/// As edge_lift_general with color k+1 replaced by k; needs condition i.
EdgeColoring edge_lift_condition_i(const SierpinskiGraph& s3, const EdgeColoring& f3, int n,
                                   const ChoiceFunction& choice);
/// Copies inherit f3, edges between copies get k; needs condition ii.
EdgeColoring edge_lift_condition_ii(const SierpinskiGraph& s3, const EdgeColoring& f3, int n,
                                    const std::vector<int>& side);

struct TypedS3Coloring {
    int dim = 0;
    S3Type type = S3Type::A;
    EdgeColoring coloring;
};

/// Type A and type B 5-colorings of S_3^3 found by constrained search.
/// Throws std::runtime_error if the search does not succeed.
std::pair<TypedS3Coloring, TypedS3Coloring> s3_base_colorings(const SolverOptions& opts = {});

/// Three copies of S_3^{n-1} joined by color-5 edges: type A output uses
/// (top, bottom-left, bottom-right) = (B, A, A), type B uses (B, B, A).
TypedS3Coloring s3_compose(const TypedS3Coloring& prev_a, const TypedS3Coloring& prev_b,
                           S3Type want);

/// Both types at dimension n >= 3, composed upward from the given bases.
std::pair<TypedS3Coloring, TypedS3Coloring> s3_colorings(const TypedS3Coloring& base_a,
                                                         const TypedS3Coloring& base_b, int n);

} // namespace sierp
