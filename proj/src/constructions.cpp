#include "sierp/constructions.hpp"

#include "sierp/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace sierp {

namespace {

void require_injective(const Graph& g, const VertexColoring& f, const char* what) {
    if (auto v = validate_vertex(g, f))
        throw PreconditionError(std::string(what) + " is not injective: " + describe(g, *v));
}

void require_injective(const Graph& g, const EdgeColoring& c, const char* what) {
    if (auto v = validate_edge(g, c))
        throw PreconditionError(std::string(what) + " is not injective: " + describe(g, *v));
}

void require_dim(const SierpinskiGraph& s, int dim, const char* what) {
    if (s.dim() != dim)
        throw PreconditionError(std::string(what) + " must live on dimension " +
                                std::to_string(dim) + ", got " + s.name());
}

} // namespace

VertexColoring lift_vertex_plus_one(const SierpinskiGraph& s2, const VertexColoring& f2, int n) {
    require_dim(s2, 2, "input coloring");
    if (n < 3)
        throw PreconditionError("lift_vertex_plus_one needs n >= 3, got " + std::to_string(n));
    require_injective(s2.materialize(), f2, "input coloring");
    const SierpinskiGraph sn(s2.base(), n);
    const Graph g = sn.materialize();
    const auto order = static_cast<std::uint64_t>(s2.base().order());
    const std::uint64_t block = order * order;
    std::vector<int> colors(g.order());
    for (int i = 0; i < g.order(); ++i) {
        const auto tail = static_cast<std::uint64_t>(i) % block;
        colors[i] = tail / order == tail % order ? f2.k + 1 : f2.colors[tail];
    }
    return make_vertex_coloring(g, std::move(colors), f2.k + 1);
}

VertexColoring lift_vertex_projection(const SierpinskiGraph& s2, const VertexColoring& f2, int n) {
    require_dim(s2, 2, "input coloring");
    if (n < 2)
        throw PreconditionError("lift_vertex_projection needs n >= 2, got " + std::to_string(n));
    if (auto why = extreme_condition_failure(s2, f2))
        throw PreconditionError("extreme-vertex condition fails: " + *why);
    const SierpinskiGraph sn(s2.base(), n);
    const Graph g = sn.materialize();
    const auto order = static_cast<std::uint64_t>(s2.base().order());
    const std::uint64_t block = order * order;
    std::vector<int> colors(g.order());
    for (int i = 0; i < g.order(); ++i)
        colors[i] = f2.colors[static_cast<std::uint64_t>(i) % block];
    return make_vertex_coloring(g, std::move(colors), f2.k);
}

VertexColoring cycle_s2_coloring(int k) {
    if (k < 3)
        throw InputError("cycle_s2_coloring needs k >= 3, got " + std::to_string(k));
    if (k == 3)
        throw PreconditionError(
            "S_{C_3}^2 has no injective 3-coloring whose extremes share a color absent from "
            "their neighbors");
    // offset[j] = color of (i, i + j mod k), the same pattern in every copy
    std::vector<std::vector<int>> offset(k);
    if (k == 4) {
        // the +1 colors run 2,2,1,1 over the copies; the opposite vertex
        // repeats the next copy's +1 color
        const int plus[4] = {2, 2, 1, 1};
        for (int i = 0; i < 4; ++i)
            offset[i] = {3, plus[i], plus[(i + 1) % 4], 3 - plus[i]};
    } else {
        std::vector<int> row(k, 0);
        row[0] = 3;
        row[1] = row[2] = 2;
        row[k - 2] = row[k - 1] = 1;
        // offsets 3..k-3 continue the alternation 22 11 22 ... and end with
        // (k-5) mod 4 filler vertices: 3,3,2 / none / 3 / 3,3
        const int middle = k - 5;
        const int filler = middle % 4;
        const int pattern[4] = {2, 2, 1, 1};
        for (int j = 3; j < 3 + middle - filler; ++j)
            row[j] = pattern[(j - 1) % 4];
        static const std::vector<int> fill[4] = {{}, {3}, {3, 3}, {3, 3, 2}};
        for (int t = 0; t < filler; ++t)
            row[3 + middle - filler + t] = fill[filler][t];
        for (int i = 0; i < k; ++i)
            offset[i] = row;
    }
    const SierpinskiGraph s2(cycle_graph(k), 2);
    const Graph g = s2.materialize();
    std::vector<int> colors(g.order());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            colors[i * k + j] = offset[i][((j - i) % k + k) % k];
    return make_vertex_coloring(g, std::move(colors), 3);
}

VertexColoring extreme_plus_one_s2(const Graph& base, const VertexColoring& f) {
    require_injective(base, f, "base coloring");
    const SierpinskiGraph s2(base, 2);
    const Graph g = s2.materialize();
    const int order = base.order();
    std::vector<int> colors(g.order());
    for (int u1 = 0; u1 < order; ++u1)
        for (int u2 = 0; u2 < order; ++u2)
            colors[u1 * order + u2] = u1 == u2 ? f.k + 1 : f.colors[u2];
    return make_vertex_coloring(g, std::move(colors), f.k + 1);
}

ChoiceFunction default_choice(const Graph& g) {
    ChoiceFunction c;
    for (const auto& e : g.edges())
        c.chosen.push_back(e.u);
    return c;
}

ChoiceFunction reverse_choice(const Graph& g) {
    ChoiceFunction c;
    for (const auto& e : g.edges())
        c.chosen.push_back(e.v);
    return c;
}

void require_choice(const Graph& g, const ChoiceFunction& choice) {
    if (static_cast<int>(choice.chosen.size()) != g.size())
        throw InputError("choice function has " + std::to_string(choice.chosen.size()) +
                         " entries, base graph has " + std::to_string(g.size()) + " edges");
    for (int e = 0; e < g.size(); ++e)
        if (choice.chosen[e] != g.edge(e).u && choice.chosen[e] != g.edge(e).v)
            throw InputError("chosen vertex of edge " + std::to_string(e) +
                             " is not one of its endpoints");
}

std::pair<Word, Word> copy_map(const SierpinskiGraph& host, const Word& prefix, const Word& a,
                               const Word& b) {
    for (int c : prefix.coords)
        if (c < 0 || c >= host.base().order())
            throw InputError("prefix coordinate " + std::to_string(c) + " is not a base vertex");
    Word x = concat(prefix, a);
    Word y = concat(prefix, b);
    host.check(x);
    host.check(y);
    const auto nb = host.neighbors(x);
    if (!std::binary_search(nb.begin(), nb.end(), y))
        throw InputError(host.label(x) + " and " + host.label(y) + " are not adjacent in " +
                         host.name());
    if (y < x)
        std::swap(x, y);
    return {std::move(x), std::move(y)};
}

namespace {

enum class LiftMode { General, ConditionI, ConditionII };

void require_triangle_free(const Graph& base) {
    if (auto t = find_triangle(base))
        throw PreconditionError("base graph " + base.name() + " has triangle " +
                                base.label((*t)[0]) + "," + base.label((*t)[1]) + "," +
                                base.label((*t)[2]));
}

EdgeColoring edge_lift(const SierpinskiGraph& s3, const EdgeColoring& f3, int n,
                       const ChoiceFunction* choice, LiftMode mode) {
    require_dim(s3, 3, "input coloring");
    if (n < 4)
        throw PreconditionError("edge lifts need n >= 4, got " + std::to_string(n));
    const Graph& base = s3.base();
    require_triangle_free(base);
    const Graph g3 = s3.materialize();
    require_injective(g3, f3, "input coloring");
    if (choice)
        require_choice(base, *choice);

    const SierpinskiGraph sn(base, n);
    const Graph g = sn.materialize();
    const int k = f3.k;
    const int special = mode == LiftMode::General ? k + 1 : k;
    const int order = base.order();
    const int block = order * order * order;

    // vertex -> true if it is a copy extreme whose edges inside the copy are recolored
    std::vector<char> recolor(g.order(), 0);
    if (mode != LiftMode::ConditionII) {
        for (int x = 0; x < g.order(); ++x) {
            const int tail = x % block;
            const int c = tail % order;
            if (tail != c * (order * order + order + 1))
                continue;
            for (int y : g.neighbors(x)) {
                if (y / block == x / block)
                    continue;
                const int other = y % order;
                const int e = *base.edge_index(c, other);
                if (choice->chosen[e] == c)
                    recolor[x] = 1;
            }
        }
    }

    std::vector<int> colors(g.size());
    for (int e = 0; e < g.size(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.u / block != ed.v / block) {
            colors[e] = special;
            continue;
        }
        if (recolor[ed.u] || recolor[ed.v]) {
            colors[e] = special;
            continue;
        }
        const auto small = g3.edge_index(ed.u % block, ed.v % block);
        colors[e] = f3.colors[*small];
    }
    return make_edge_coloring(g, std::move(colors), special);
}

} // namespace

EdgeColoring edge_lift_general(const SierpinskiGraph& s3, const EdgeColoring& f3, int n,
                               const ChoiceFunction& choice) {
    return edge_lift(s3, f3, n, &choice, LiftMode::General);
}

EdgeColoring edge_lift_condition_i(const SierpinskiGraph& s3, const EdgeColoring& f3, int n,
                                   const ChoiceFunction& choice) {
    require_dim(s3, 3, "input coloring");
    require_triangle_free(s3.base());
    if (auto why = condition_i_failure(s3, f3))
        throw PreconditionError("condition i fails: " + *why);
    return edge_lift(s3, f3, n, &choice, LiftMode::ConditionI);
}

EdgeColoring edge_lift_condition_ii(const SierpinskiGraph& s3, const EdgeColoring& f3, int n,
                                    const std::vector<int>& side) {
    require_dim(s3, 3, "input coloring");
    if (!bipartition(s3.base()))
        throw PreconditionError("base graph " + s3.base().name() + " is not bipartite");
    require_triangle_free(s3.base());
    if (auto why = condition_ii_failure(s3, f3, side))
        throw PreconditionError("condition ii fails: " + *why);
    return edge_lift(s3, f3, n, nullptr, LiftMode::ConditionII);
}

std::pair<TypedS3Coloring, TypedS3Coloring> s3_base_colorings(const SolverOptions& opts) {
    const SierpinskiGraph s3(complete_graph(3), 3);
    auto search = [&](ConditionKind kind, S3Type type) {
        auto r = constrained_certificate_search(s3, 5, Condition{kind, {}}, opts);
        if (!r.certificate)
            throw std::runtime_error("no type " + std::string(type == S3Type::A ? "A" : "B") +
                                     " coloring of S_3^3 found (" + to_string(r.outcome.status) +
                                     ")");
        return TypedS3Coloring{3, type, std::move(*r.certificate)};
    };
    return {search(ConditionKind::TypeA, S3Type::A), search(ConditionKind::TypeB, S3Type::B)};
}

TypedS3Coloring s3_compose(const TypedS3Coloring& prev_a, const TypedS3Coloring& prev_b,
                           S3Type want) {
    if (prev_a.dim != prev_b.dim)
        throw PreconditionError("typed colorings must share a dimension");
    if (prev_a.dim < 3)
        throw PreconditionError("s3_compose needs inputs of dimension >= 3");
    if (prev_a.type != S3Type::A || prev_b.type != S3Type::B)
        throw PreconditionError("s3_compose takes a type A and a type B coloring");
    const SierpinskiGraph prev(complete_graph(3), prev_a.dim);
    if (!check_s3_type(prev, prev_a.coloring, S3Type::A))
        throw PreconditionError("input tagged A does not satisfy the type A contract");
    if (!check_s3_type(prev, prev_b.coloring, S3Type::B))
        throw PreconditionError("input tagged B does not satisfy the type B contract");

    const Graph gp = prev.materialize();
    const SierpinskiGraph next(complete_graph(3), prev_a.dim + 1);
    const Graph g = next.materialize();
    const int block = gp.order();
    // copy 0 = top, 1 = bottom-left, 2 = bottom-right
    const EdgeColoring* copies[3] = {&prev_b.coloring,
                                     want == S3Type::A ? &prev_a.coloring : &prev_b.coloring,
                                     &prev_a.coloring};
    std::vector<int> colors(g.size());
    for (int e = 0; e < g.size(); ++e) {
        const Edge& ed = g.edge(e);
        const int cu = ed.u / block, cv = ed.v / block;
        if (cu != cv) {
            colors[e] = 5;
            continue;
        }
        colors[e] = copies[cu]->colors[*gp.edge_index(ed.u % block, ed.v % block)];
    }
    return TypedS3Coloring{next.dim(), want, make_edge_coloring(g, std::move(colors), 5)};
}

std::pair<TypedS3Coloring, TypedS3Coloring> s3_colorings(const TypedS3Coloring& base_a,
                                                         const TypedS3Coloring& base_b, int n) {
    if (n < base_a.dim)
        throw PreconditionError("target dimension below the base colorings");
    TypedS3Coloring a = base_a, b = base_b;
    while (a.dim < n) {
        TypedS3Coloring na = s3_compose(a, b, S3Type::A);
        TypedS3Coloring nb = s3_compose(a, b, S3Type::B);
        a = std::move(na);
        b = std::move(nb);
    }
    return {std::move(a), std::move(b)};
}

} // namespace sierp
