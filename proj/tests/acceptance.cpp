// Acceptance suite: one PASS/FAIL line per criterion, with the failing
// detail underneath. Exits 0 once every criterion has been evaluated.

#include "oracles.hpp"

#include "sierp/constructions.hpp"
#include "sierp/embedding.hpp"
#include "sierp/reductions.hpp"
#include "sierp/repro.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace sierp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Criterion {
    std::vector<std::string> failures;
    int checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok)
            failures.push_back(what);
    }
};

std::string str(int v) { return std::to_string(v); }

int exact_vertex(const Graph& g, double limit, Criterion& c, const std::string& what) {
    const auto t = Clock::now();
    const auto r = injective_chromatic_number(g);
    const double s = seconds_since(t);
    c.expect(r.outcome.status == SolveStatus::Sat, what + ": solver did not finish");
    c.expect(s < limit, what + ": took " + std::to_string(s) + " s");
    return r.outcome.status == SolveStatus::Sat ? r.outcome.value : -1;
}

int exact_edge(const Graph& g, double limit, Criterion& c, const std::string& what) {
    const auto t = Clock::now();
    const auto r = injective_chromatic_index(g);
    const double s = seconds_since(t);
    c.expect(r.outcome.status == SolveStatus::Sat, what + ": solver did not finish");
    c.expect(s < limit, what + ": took " + std::to_string(s) + " s");
    return r.outcome.status == SolveStatus::Sat ? r.outcome.value : -1;
}

void criterion_1(Criterion& c) {
    for (int p = 3; p <= 5; ++p)
        for (int n = 1; n <= 3; ++n) {
            const SierpinskiGraph s(complete_graph(p), n);
            const int v = exact_vertex(s.materialize(), 60, c, s.name());
            c.expect(v == p, s.name() + ": chi_i = " + str(v) + ", expected " + str(p));
        }
}

void criterion_2(Criterion& c) {
    for (int k = 3; k <= 10; ++k)
        for (int n = 2; n <= 4; ++n) {
            const SierpinskiGraph s(cycle_graph(k), n);
            const Graph g = s.materialize();
            if (n == 2 || (n == 3 && k <= 6) || k == 3) {
                const int v = exact_vertex(g, 60, c, s.name());
                c.expect(v == 3, s.name() + ": chi_i = " + str(v));
                continue;
            }
            const VertexColoring f =
                lift_vertex_projection(SierpinskiGraph(cycle_graph(k), 2), cycle_s2_coloring(k), n);
            c.expect(!validate_vertex(g, f), s.name() + ": lifted coloring not injective");
            c.expect(used_colors(f) == 3, s.name() + ": lift uses " + str(used_colors(f)));
            // a degree-3 vertex: its three neighbors pairwise share it
            int witness = -1;
            for (int v = 0; v < g.order() && witness < 0; ++v)
                if (g.degree(v) == 3)
                    witness = v;
            c.expect(witness >= 0, s.name() + ": no degree-3 vertex");
        }
}

void criterion_3(Criterion& c) {
    for (int k = 4; k <= 16; ++k) {
        const Graph g = cycle_graph(k);
        const int v = exact_vertex(g, 1, c, g.name());
        const int want = k % 4 == 0 ? 2 : 3;
        c.expect(v == want, g.name() + ": chi_i = " + str(v) + ", expected " + str(want));
    }
}

void criterion_4(Criterion& c) {
    for (int n = 1; n <= 3; ++n) {
        const SierpinskiGraph s(complete_graph(3), n);
        const int v = exact_edge(s.materialize(), 60, c, s.name());
        c.expect(v == n + 2, s.name() + ": chi_i' = " + str(v) + ", expected " + str(n + 2));
    }
    const Graph tp = tilde_graph(gadget_P()).graph;
    const auto at4 = k_colorable(tp, 4);
    const auto chi = chromatic_number(tp);
    c.expect(at4.status == SolveStatus::Unsat,
             "T(P) is " + to_string(at4.status) + " at k = 4 (the 20-edge gadget P has an "
             "injective edge 4-coloring)");
    c.expect(chi.value == 5, "chi(T(P)) = " + str(chi.value) + ", expected 5");

    const GoldenStore store;
    const SierpinskiGraph s3(complete_graph(3), 3);
    const Graph g3 = s3.materialize();
    const Graph p = gadget_P();
    const auto pm = golden_embedding(store, kPEmbeddingFile, p, g3, [&] {
        return find_embedding(p, g3, default_budget()).mapping;
    });
    c.expect(is_embedding(p, g3, pm), "stored P embedding does not validate");

    const int lower3 = exact_edge(g3, 60, c, s3.name());
    auto load = [&](const char* file, ConditionKind kind) {
        return golden_edge_coloring(store, file, g3, [&] {
            return *constrained_certificate_search(s3, 5, Condition{kind, {}}).certificate;
        });
    };
    TypedS3Coloring a{3, S3Type::A, load(kTypeAFile, ConditionKind::TypeA)};
    TypedS3Coloring b{3, S3Type::B, load(kTypeBFile, ConditionKind::TypeB)};
    c.expect(!validate_edge(g3, a.coloring) && check_s3_type(s3, a.coloring, S3Type::A),
             "stored type A coloring fails");
    c.expect(!validate_edge(g3, b.coloring) && check_s3_type(s3, b.coloring, S3Type::B),
             "stored type B coloring fails");
    for (int n = 4; n <= 6; ++n) {
        const SierpinskiGraph s(complete_graph(3), n);
        const auto t = Clock::now();
        const TypedS3Coloring na = s3_compose(a, b, S3Type::A);
        const TypedS3Coloring nb = s3_compose(a, b, S3Type::B);
        const Graph g = s.materialize();
        const bool valid = !validate_edge(g, na.coloring) && !validate_edge(g, nb.coloring) &&
                           check_s3_type(s, na.coloring, S3Type::A) &&
                           check_s3_type(s, nb.coloring, S3Type::B);
        const double secs = seconds_since(t);
        c.expect(valid, s.name() + ": composed colorings fail");
        c.expect(secs < 10, s.name() + ": composition took " + std::to_string(secs) + " s");
        c.expect(used_colors(na.coloring) == 5, s.name() + ": upper bound is not 5");
        // S_3^3 sits in S_3^n as the copy with prefix 1...1
        std::vector<int> copy(g3.order());
        for (int i = 0; i < g3.order(); ++i)
            copy[i] = i;
        c.expect(is_embedding(g3, g, copy), s.name() + ": S(K3,3) copy is not a subgraph");
        c.expect(lower3 == 5, s.name() + ": lower bound " + str(lower3));
        a = na;
        b = nb;
    }
}

void criterion_5(Criterion& c) {
    const GoldenStore store;
    const int top[] = {0, 0, 0, 0, 6, 5, 4};
    for (int k = 4; k <= 6; ++k) {
        const Graph base = cycle_graph(k);
        const int want = cycle_edge_value(k);
        const SierpinskiGraph s2(base, 2);
        const int lower = exact_edge(s2.materialize(), 60, c, s2.name());
        c.expect(lower == want, s2.name() + ": chi_i' = " + str(lower) + ", expected " + str(want));

        const SierpinskiGraph s3(base, 3);
        const Graph g3 = s3.materialize();
        const Condition cond = cycle_condition(k);
        const auto t = Clock::now();
        const EdgeColoring cert = golden_edge_coloring(store, cycle_certificate_file(k), g3, [&] {
            auto r = constrained_certificate_search(s3, want, cond);
            return r.certificate ? *r.certificate : EdgeColoring{};
        });
        c.expect(seconds_since(t) < 600, s3.name() + ": certificate search over 10 minutes");
        if (cert.colors.empty() || validate_edge(g3, cert)) {
            c.expect(false, s3.name() + ": no valid condition certificate");
            continue;
        }
        const bool holds = cond.kind == ConditionKind::II ? check_condition_ii(s3, cert, cond.side)
                                                          : check_condition_i(s3, cert);
        c.expect(holds, s3.name() + ": certificate misses its condition");
        c.expect(used_colors(cert) == want, s3.name() + ": certificate uses " + str(used_colors(cert)));
        for (int n = 4; n <= top[k]; ++n) {
            const SierpinskiGraph s(base, n);
            const EdgeColoring lifted = cond.kind == ConditionKind::II
                                            ? edge_lift_condition_ii(s3, cert, n, cond.side)
                                            : edge_lift_condition_i(s3, cert, n, default_choice(base));
            c.expect(!validate_edge(s.materialize(), lifted), s.name() + ": lift not injective");
            c.expect(used_colors(lifted) == want, s.name() + ": lift uses " + str(used_colors(lifted)));
        }
    }
}

void criterion_6(Criterion& c) {
    std::vector<Graph> corpus;
    for (int order = 1; order <= 5; ++order)
        for (auto& g : oracle::all_connected(order))
            corpus.push_back(std::move(g));
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        corpus.push_back(oracle::random_connected(6 + seed % 2, 0.25 + 0.05 * (seed % 6), 7000 + seed));
    c.expect(corpus.size() >= 500, "corpus has only " + str(static_cast<int>(corpus.size())));
    for (const Graph& g : corpus) {
        const int cv = chromatic_number(common_neighbor_graph(g).graph).value;
        const int bv = oracle::injective_chromatic_number(g);
        c.expect(cv == bv, "vertex discrepancy on a graph with " + str(g.order()) + " vertices");
        if (g.size() == 0)
            continue;
        const int ce = chromatic_number(tilde_graph(g).graph).value;
        const int be = oracle::injective_chromatic_index(g);
        c.expect(ce == be, "edge discrepancy on a graph with " + str(g.order()) + " vertices");
    }
}

void criterion_7(Criterion& c) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph g = oracle::random_connected(3 + seed % 5, 0.3 + 0.05 * (seed % 5), 9000 + seed);
        const int base = oracle::injective_chromatic_number(g);
        for (int n = 2; n <= 3; ++n) {
            const SierpinskiGraph s(g, n);
            const int v = exact_vertex(s.materialize(), 120, c, s.name());
            c.expect(v == base || v == base + 1,
                     "seed " + std::to_string(seed) + " n = " + str(n) + ": chi_i(S) = " + str(v) +
                         ", chi_i(G) = " + str(base));
        }
    }
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = oracle::random_triangle_free(3 + seed % 5, 9500 + seed);
        const SierpinskiGraph s3(g, 3);
        const auto r3 = injective_chromatic_index(s3.materialize());
        c.expect(r3.outcome.status == SolveStatus::Sat, "seed " + std::to_string(seed) + ": no S^3 value");
        const int v3 = r3.outcome.value;
        const SierpinskiGraph s4(g, 4);
        const Graph g4 = s4.materialize();
        if (s4.vertex_count() <= 256) {
            const int v4 = exact_edge(g4, 120, c, s4.name());
            c.expect(v4 == v3 || v4 == v3 + 1, "seed " + std::to_string(seed) + ": chi_i'(S^4) = " +
                                                   str(v4) + ", chi_i'(S^3) = " + str(v3));
        } else {
            const EdgeColoring lifted = edge_lift_general(s3, r3.certificate, 4, default_choice(g));
            c.expect(!validate_edge(g4, lifted) && used_colors(lifted) <= v3 + 1,
                     "seed " + std::to_string(seed) + ": lift bound fails");
        }
    }
}

void criterion_8(Criterion& c) {
    const auto start = Clock::now();
    std::vector<Graph> corpus;
    for (int order = 2; order <= 5; ++order)
        for (auto& g : oracle::all_connected(order))
            corpus.push_back(std::move(g));
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        corpus.push_back(oracle::random_connected(6 + seed % 2, 0.35, 8000 + seed));
    for (const Graph& base : corpus) {
        const std::uint64_t p = base.order();
        for (int n = 1; n <= 4; ++n) {
            const SierpinskiGraph s(base, n);
            if (s.vertex_count() > 1300)
                break;
            const Graph g = s.materialize();
            std::uint64_t pn = 1;
            for (int i = 0; i < n; ++i)
                pn *= p;
            c.expect(static_cast<std::uint64_t>(g.order()) == pn, s.name() + ": vertex count");
            c.expect(static_cast<std::uint64_t>(g.size()) == base.size() * (pn - 1) / (p - 1),
                     s.name() + ": edge count");
            if (n >= 2)
                c.expect(g.max_degree() == base.max_degree() + 1, s.name() + ": max degree");
        }
        const SierpinskiGraph s2(base, 2);
        const auto ext = s2.extreme_vertices();
        for (std::size_t i = 0; i < ext.size(); ++i)
            for (std::size_t j = i + 1; j < ext.size(); ++j)
                c.expect(distance(s2, ext[i], ext[j]) >= 3, s2.name() + ": extremes too close");
    }
    const double secs = seconds_since(start);
    c.expect(secs < 300, "structural suite took " + std::to_string(secs) + " s");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
        {"vertex values chi_i(S(K_p,n)) = p, p in 3..5, n in 1..3", criterion_1},
        {"chi_i(S(C_k,n)) = 3, k in 3..10, n in 2..4", criterion_2},
        {"chi_i(C_k) = 2 iff k = 0 mod 4, k in 4..16", criterion_3},
        {"edge values of S(K3,n) and chi(T(P)) = 5", criterion_4},
        {"edge values of S(C4,n), S(C5,n), S(C6,n)", criterion_5},
        {"brute force equals the conflict-graph chromatic number", criterion_6},
        {"sandwich bounds for random base graphs", criterion_7},
        {"structural invariants", criterion_8},
    };
    int passed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        const auto t = Clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.failures.empty();
        passed += ok;
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
             << " (" << c.checks << " checks, " << std::fixed;
        line.precision(1);
        line << seconds_since(t) << " s)";
        std::cout << line.str() << "\n";
        for (std::size_t f = 0; f < c.failures.size() && f < 10; ++f)
            std::cout << "    " << c.failures[f] << "\n";
        std::cout.flush();
    }
    std::cout << passed << " of " << criteria.size() << " criteria pass\n";
    return 0;
}
