#include "sierp/certificates.hpp"

#include "sierp/errors.hpp"
#include "sierp/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace sierp {

std::string to_string(ConditionKind c) {
    switch (c) {
    case ConditionKind::I:
        return "i";
    case ConditionKind::II:
        return "ii";
    case ConditionKind::TypeA:
        return "typeA";
    case ConditionKind::TypeB:
        return "typeB";
    }
    return "?";
}

ConditionKind parse_condition(const std::string& s) {
    if (s == "i")
        return ConditionKind::I;
    if (s == "ii")
        return ConditionKind::II;
    if (s == "typeA")
        return ConditionKind::TypeA;
    if (s == "typeB")
        return ConditionKind::TypeB;
    throw InputError("unknown condition '" + s + "' (expected i, ii, typeA or typeB)");
}

int condition_orientations(const Condition& cond) {
    switch (cond.kind) {
    case ConditionKind::TypeA:
        return 2;
    case ConditionKind::TypeB:
        return 4;
    default:
        return 1;
    }
}

namespace {

int extreme_index(const SierpinskiGraph& s, int b) {
    return static_cast<int>(s.index_of(Word(std::vector<int>(s.dim(), b))));
}

void forbid_above_edges(ColorConstraints& cons, const Graph& g, int e, int k, int near_dist,
                        const std::vector<int>& dist) {
    const Edge& ed = g.edge(e);
    for (int x : {ed.u, ed.v})
        if (dist[x] != kUnreachable && dist[x] <= near_dist) {
            cons.forbidden[e].insert(k);
            return;
        }
}

void restrict_palette(ColorConstraints& cons, int e, int k, std::initializer_list<int> keep) {
    for (int c = 1; c <= k; ++c)
        if (std::find(keep.begin(), keep.end(), c) == keep.end())
            cons.forbidden[e].insert(c);
}

// The extreme's two edges get {3,5}; `flip` picks which one carries 5. No
// edge touching the 5-edge may carry 5.
void isolated_five_extreme(ColorConstraints& cons, const Graph& g, int x, bool flip) {
    const auto& inc = g.incident(x);
    if (inc.size() != 2)
        throw std::logic_error("extreme vertex of S_3^n without exactly two edges");
    const int five = flip ? inc[1] : inc[0];
    const int three = flip ? inc[0] : inc[1];
    cons.forced[five] = 5;
    cons.forced[three] = 3;
    const Edge& ed = g.edge(five);
    for (int y : {ed.u, ed.v})
        for (int f : g.incident(y))
            if (f != five && f != three)
                cons.forbidden[f].insert(5);
}

// The {1,4} extreme of a copy receives a 5-colored edge once copies are
// joined, so no edge one step away from it may carry 5.
void quiet_five_extreme(ColorConstraints& cons, const Graph& g, int x, int k) {
    for (int e : g.incident(x))
        restrict_palette(cons, e, k, {1, 4});
    for (int y : g.neighbors(x))
        for (int f : g.incident(y)) {
            const Edge& ed = g.edge(f);
            if (ed.u != x && ed.v != x)
                cons.forbidden[f].insert(5);
        }
}

} // namespace

ColorConstraints condition_constraints(const SierpinskiGraph& s, const Graph& g, int k,
                                       const Condition& cond, int orientation) {
    ColorConstraints cons;
    const Graph& base = s.base();
    switch (cond.kind) {
    case ConditionKind::I: {
        if (s.dim() != 3)
            throw InputError("condition i is defined on S_G^3, got " + s.name());
        std::vector<int> all(base.order());
        for (int v = 0; v < base.order(); ++v)
            all[v] = v;
        const auto dist = extreme_distances(s, g, all);
        for (int e = 0; e < g.size(); ++e)
            forbid_above_edges(cons, g, e, k, 2, dist);
        break;
    }
    case ConditionKind::II: {
        if (s.dim() != 3)
            throw InputError("condition ii is defined on S_G^3, got " + s.name());
        require_bipartition(base, cond.side);
        std::vector<int> b_side;
        for (int v = 0; v < base.order(); ++v) {
            if (cond.side[v] == 0) {
                for (int e : g.incident(extreme_index(s, v)))
                    cons.forced[e] = k;
            } else {
                b_side.push_back(v);
            }
        }
        if (!b_side.empty()) {
            const auto dist = extreme_distances(s, g, b_side);
            for (int e = 0; e < g.size(); ++e)
                forbid_above_edges(cons, g, e, k, 1, dist);
        }
        for (const auto& [e, c] : cons.forced)
            if (cons.forbidden.contains(e) && cons.forbidden[e].contains(c))
                throw InputError("condition ii is contradictory on " + s.name());
        break;
    }
    case ConditionKind::TypeA:
    case ConditionKind::TypeB: {
        if (base.order() != 3 || base.size() != 3)
            throw InputError("type conditions need base graph K3, got " + base.name());
        if (s.dim() < 2)
            throw InputError("type conditions need dimension >= 2");
        if (k < 5)
            throw InputError("type conditions use colors 1..5, got k = " + std::to_string(k));
        if (orientation < 0 || orientation >= condition_orientations(cond))
            throw InputError("orientation out of range");
        quiet_five_extreme(cons, g, extreme_index(s, 0), k);
        isolated_five_extreme(cons, g, extreme_index(s, 2), orientation & 1);
        if (cond.kind == ConditionKind::TypeA) {
            quiet_five_extreme(cons, g, extreme_index(s, 1), k);
        } else {
            isolated_five_extreme(cons, g, extreme_index(s, 1), (orientation >> 1) & 1);
        }
        for (const auto& [e, c] : cons.forced)
            if (cons.forbidden.contains(e) && cons.forbidden[e].contains(c))
                throw InputError("type boundary constraints collide on " + s.name());
        break;
    }
    }
    return cons;
}

CertificateResult constrained_certificate_search(const SierpinskiGraph& s, int k,
                                                 const Condition& cond,
                                                 const SolverOptions& opts) {
    const Graph g = s.materialize();
    const ConflictGraph tg = tilde_graph(g);
    CertificateResult res;
    std::uint64_t explored = 0;
    const int orientations = condition_orientations(cond);
    for (int o = 0; o < orientations; ++o) {
        const ColorConstraints cons = condition_constraints(s, g, k, cond, o);
        SolverOptions so = opts;
        so.budget = opts.budget > explored ? opts.budget - explored : 0;
        SolveOutcome r = k_colorable(tg.graph, k, cons, so);
        explored += r.explored;
        r.explored = explored;
        res.outcome = r;
        if (r.status == SolveStatus::Unknown)
            return res;
        if (r.status == SolveStatus::Unsat)
            continue;
        std::vector<int> colors(g.size());
        for (int i = 0; i < tg.graph.order(); ++i)
            colors[tg.node_map[i]] = r.coloring[i];
        EdgeColoring c = make_edge_coloring(g, std::move(colors), k);
        bool ok = false;
        switch (cond.kind) {
        case ConditionKind::I:
            ok = check_condition_i(s, c);
            break;
        case ConditionKind::II:
            ok = check_condition_ii(s, c, cond.side);
            break;
        case ConditionKind::TypeA:
            ok = check_s3_type(s, c, S3Type::A);
            break;
        case ConditionKind::TypeB:
            ok = check_s3_type(s, c, S3Type::B);
            break;
        }
        if (!ok)
            throw std::logic_error("constrained certificate failed its own condition check");
        res.certificate = std::move(c);
        return res;
    }
    return res;
}

} // namespace sierp
