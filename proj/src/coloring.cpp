#include "sierp/coloring.hpp"

#include "sierp/errors.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace sierp {

namespace {

template <class C>
void check_coloring(const Graph& g, const C& c, int expected, const char* what) {
    if (c.graph_fingerprint != 0 && c.graph_fingerprint != g.fingerprint())
        throw InputError(std::string(what) + " coloring was made for a different graph than " +
                         g.name());
    if (static_cast<int>(c.colors.size()) != expected)
        throw InputError(std::string(what) + " coloring has " + std::to_string(c.colors.size()) +
                         " entries, graph has " + std::to_string(expected));
    for (std::size_t i = 0; i < c.colors.size(); ++i) {
        const int col = c.colors[i];
        if (col == 0)
            throw InputError(std::string(what) + " " + std::to_string(i) + " has no color");
        if (col < 1 || col > c.k)
            throw InputError(std::string(what) + " " + std::to_string(i) + " has color " +
                             std::to_string(col) + " outside 1.." + std::to_string(c.k));
    }
}

int max_color(const std::vector<int>& colors) {
    int k = 0;
    for (int c : colors)
        k = std::max(k, c);
    return k;
}

int other_end(const Edge& e, int v) { return e.u == v ? e.v : e.u; }

} // namespace

VertexColoring make_vertex_coloring(const Graph& g, std::vector<int> colors, int k) {
    VertexColoring f;
    f.k = k > 0 ? k : max_color(colors);
    f.colors = std::move(colors);
    f.graph_fingerprint = g.fingerprint();
    return f;
}

EdgeColoring make_edge_coloring(const Graph& g, std::vector<int> colors, int k) {
    EdgeColoring c;
    c.k = k > 0 ? k : max_color(colors);
    c.colors = std::move(colors);
    c.graph_fingerprint = g.fingerprint();
    return c;
}

std::string describe(const Graph& g, const Violation& v) {
    const auto [a, b, m] = v.witness;
    if (v.kind == ColoringKind::Vertex)
        return "vertices " + g.label(a) + " and " + g.label(b) + " share neighbor " + g.label(m) +
               " and both have color " + std::to_string(v.color);
    auto edge_str = [&g](int e) {
        return g.label(g.edge(e).u) + "|" + g.label(g.edge(e).v);
    };
    return "edges " + edge_str(a) + " and " + edge_str(m) + " have common edge " + edge_str(b) +
           " and both have color " + std::to_string(v.color);
}

std::optional<Violation> validate_vertex(const Graph& g, const VertexColoring& f) {
    check_coloring(g, f, g.order(), "vertex");
    for (int u = 0; u < g.order(); ++u) {
        std::optional<std::pair<int, int>> best;  // (w, z)
        for (int z : g.neighbors(u))
            for (int w : g.neighbors(z))
                if (w > u && f.colors[w] == f.colors[u] &&
                    (!best || std::pair{w, z} < *best))
                    best = std::pair{w, z};
        if (best)
            return Violation{ColoringKind::Vertex, {u, best->first, best->second}, f.colors[u]};
    }
    return std::nullopt;
}

std::optional<Violation> validate_edge(const Graph& g, const EdgeColoring& c) {
    check_coloring(g, c, g.size(), "edge");
    for (int e1 = 0; e1 < g.size(); ++e1) {
        std::optional<std::pair<int, int>> best;  // (e2, e3)
        const Edge& a = g.edge(e1);
        for (int y : {a.u, a.v}) {
            for (int e2 : g.incident(y)) {
                if (e2 == e1)
                    continue;
                const int z = other_end(g.edge(e2), y);
                for (int e3 : g.incident(z)) {
                    if (e3 == e2 || e3 <= e1)
                        continue;
                    if (c.colors[e3] == c.colors[e1] && (!best || std::pair{e2, e3} < *best))
                        best = std::pair{e2, e3};
                }
            }
        }
        if (best)
            return Violation{ColoringKind::Edge, {e1, best->first, best->second}, c.colors[e1]};
    }
    return std::nullopt;
}

bool witness_holds(const Graph& g, const VertexColoring& f, const Violation& v) {
    const auto [u, w, z] = v.witness;
    if (v.kind != ColoringKind::Vertex || u == w)
        return false;
    for (int x : {u, w, z})
        if (x < 0 || x >= g.order())
            return false;
    return g.adjacent(u, z) && g.adjacent(w, z) && f.colors[u] == f.colors[w] &&
           f.colors[u] == v.color;
}

bool witness_holds(const Graph& g, const EdgeColoring& c, const Violation& v) {
    const auto [e1, e2, e3] = v.witness;
    if (v.kind != ColoringKind::Edge || e1 == e2 || e2 == e3 || e1 == e3)
        return false;
    for (int e : {e1, e2, e3})
        if (e < 0 || e >= g.size())
            return false;
    const Edge& a = g.edge(e1);
    const Edge& m = g.edge(e2);
    const Edge& b = g.edge(e3);
    // e1 = xy, e2 = yz, e3 = zu
    bool consecutive = false;
    for (int y : {m.u, m.v}) {
        const int z = other_end(m, y);
        if ((a.u == y || a.v == y) && (b.u == z || b.v == z))
            consecutive = true;
    }
    return consecutive && c.colors[e1] == c.colors[e3] && c.colors[e1] == v.color;
}

bool is_proper(const Graph& g, std::span<const int> colors) {
    if (static_cast<int>(colors.size()) != g.order())
        return false;
    for (int c : colors)
        if (c <= 0)
            return false;
    for (const auto& e : g.edges())
        if (colors[e.u] == colors[e.v])
            return false;
    return true;
}

int used_colors(const VertexColoring& f) {
    return static_cast<int>(std::set<int>(f.colors.begin(), f.colors.end()).size());
}

int used_colors(const EdgeColoring& c) {
    return static_cast<int>(std::set<int>(c.colors.begin(), c.colors.end()).size());
}

std::optional<std::string> extreme_condition_failure(const SierpinskiGraph& s2,
                                                     const VertexColoring& f2) {
    if (s2.dim() != 2)
        throw PreconditionError("extreme-vertex condition is defined on S_G^2, got " + s2.name());
    const Graph g = s2.materialize();
    if (auto v = validate_vertex(g, f2))
        throw PreconditionError("coloring is not injective: " + describe(g, *v));
    const auto extremes = s2.extreme_vertices();
    const auto first = static_cast<int>(s2.index_of(extremes.front()));
    const int color = f2.colors[first];
    for (const auto& x : extremes) {
        const auto i = static_cast<int>(s2.index_of(x));
        if (f2.colors[i] != color)
            return "extreme vertices " + g.label(first) + " and " + g.label(i) +
                   " have different colors";
        for (int w : g.neighbors(i))
            if (f2.colors[w] == color)
                return "extreme vertex " + g.label(i) + " shares color " + std::to_string(color) +
                       " with its neighbor " + g.label(w);
    }
    return std::nullopt;
}

bool check_extreme_condition(const SierpinskiGraph& s2, const VertexColoring& f2) {
    return !extreme_condition_failure(s2, f2).has_value();
}

std::vector<int> extreme_distances(const SierpinskiGraph& s, const Graph& materialized,
                                   const std::vector<int>& bases) {
    std::vector<int> sources;
    for (int b : bases)
        sources.push_back(static_cast<int>(s.index_of(Word(std::vector<int>(s.dim(), b)))));
    return bfs_distances(materialized, sources);
}

namespace {

std::vector<int> all_bases(const SierpinskiGraph& s) {
    std::vector<int> b(s.base().order());
    for (int i = 0; i < s.base().order(); ++i)
        b[i] = i;
    return b;
}

void require_valid_edge_coloring(const SierpinskiGraph& s3, const Graph& g, const EdgeColoring& c) {
    if (s3.dim() != 3)
        throw PreconditionError("condition checks are defined on S_G^3, got " + s3.name());
    if (auto v = validate_edge(g, c))
        throw PreconditionError("edge coloring is not injective: " + describe(g, *v));
}

} // namespace

namespace {

// First vertex incident to a color-k edge that lies closer than `min_dist`
// to an extreme (b,b,b) with b in bases.
std::optional<std::string> near_extreme(const SierpinskiGraph& s3, const Graph& g,
                                        const EdgeColoring& c3, const std::vector<int>& bases,
                                        int min_dist) {
    const auto dist = extreme_distances(s3, g, bases);
    for (int e = 0; e < g.size(); ++e) {
        if (c3.colors[e] != c3.k)
            continue;
        const Edge& ed = g.edge(e);
        for (int x : {ed.u, ed.v}) {
            if (dist[x] == kUnreachable || dist[x] >= min_dist)
                continue;
            for (int b : bases) {
                const Word ext(std::vector<int>(3, b));
                if (distance(s3, s3.word_at(x), ext) == dist[x])
                    return "vertex " + g.label(x) + " on color-" + std::to_string(c3.k) +
                           " edge is at distance " + std::to_string(dist[x]) +
                           " from extreme vertex " + s3.label(ext);
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::string> condition_i_failure(const SierpinskiGraph& s3, const EdgeColoring& c3) {
    const Graph g = s3.materialize();
    require_valid_edge_coloring(s3, g, c3);
    return near_extreme(s3, g, c3, all_bases(s3), 3);
}

bool check_condition_i(const SierpinskiGraph& s3, const EdgeColoring& c3) {
    return !condition_i_failure(s3, c3).has_value();
}

void require_bipartition(const Graph& g, const std::vector<int>& side) {
    if (static_cast<int>(side.size()) != g.order())
        throw InputError("bipartition has " + std::to_string(side.size()) + " entries, base has " +
                         std::to_string(g.order()) + " vertices");
    for (int s : side)
        if (s != 0 && s != 1)
            throw InputError("bipartition sides must be 0 (A) or 1 (B)");
    for (const auto& e : g.edges())
        if (side[e.u] == side[e.v])
            throw InputError("not a bipartition: edge " + g.label(e.u) + "-" + g.label(e.v) +
                             " lies inside one side");
}

std::optional<std::string> condition_ii_failure(const SierpinskiGraph& s3, const EdgeColoring& c3,
                                                const std::vector<int>& side) {
    require_bipartition(s3.base(), side);
    const Graph g = s3.materialize();
    require_valid_edge_coloring(s3, g, c3);
    std::vector<int> b_side;
    for (int v = 0; v < s3.base().order(); ++v) {
        if (side[v] != 0) {
            b_side.push_back(v);
            continue;
        }
        const auto x = static_cast<int>(s3.index_of(Word(std::vector<int>(3, v))));
        for (int e : g.incident(x))
            if (c3.colors[e] != c3.k)
                return "edge at A-extreme " + g.label(x) + " has color " +
                       std::to_string(c3.colors[e]) + ", not " + std::to_string(c3.k);
    }
    if (b_side.empty())
        return std::nullopt;
    return near_extreme(s3, g, c3, b_side, 2);
}

bool check_condition_ii(const SierpinskiGraph& s3, const EdgeColoring& c3,
                        const std::vector<int>& side) {
    return !condition_ii_failure(s3, c3, side).has_value();
}

namespace {

bool extreme_palette(const Graph& g, const EdgeColoring& c, int x, int lo, int hi) {
    std::vector<int> seen;
    for (int e : g.incident(x))
        seen.push_back(c.colors[e]);
    std::sort(seen.begin(), seen.end());
    return seen == std::vector<int>{lo, hi};
}

bool isolated_five(const Graph& g, const EdgeColoring& c, int x) {
    for (int e : g.incident(x)) {
        if (c.colors[e] != 5)
            continue;
        const Edge& ed = g.edge(e);
        for (int y : {ed.u, ed.v})
            for (int f : g.incident(y))
                if (f != e && c.colors[f] == 5)
                    return false;
    }
    return true;
}

bool quiet_five(const Graph& g, const EdgeColoring& c, int x) {
    if (!extreme_palette(g, c, x, 1, 4))
        return false;
    for (int y : g.neighbors(x))
        for (int f : g.incident(y)) {
            const Edge& ed = g.edge(f);
            if (ed.u != x && ed.v != x && c.colors[f] == 5)
                return false;
        }
    return true;
}

} // namespace

bool check_s3_type(const SierpinskiGraph& s, const EdgeColoring& c, S3Type type) {
    const Graph& base = s.base();
    if (base.order() != 3 || base.size() != 3)
        throw PreconditionError("type contracts are defined for base graph K3, got " + base.name());
    const Graph g = s.materialize();
    if (auto v = validate_edge(g, c))
        throw PreconditionError("edge coloring is not injective: " + describe(g, *v));
    auto extreme = [&s](int b) {
        return static_cast<int>(s.index_of(Word(std::vector<int>(s.dim(), b))));
    };
    const int top = extreme(0), left = extreme(1), right = extreme(2);
    if (!quiet_five(g, c, top))
        return false;
    if (!extreme_palette(g, c, right, 3, 5) || !isolated_five(g, c, right))
        return false;
    if (type == S3Type::A)
        return quiet_five(g, c, left);
    return extreme_palette(g, c, left, 3, 5) && isolated_five(g, c, left);
}

} // namespace sierp
