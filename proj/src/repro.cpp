#include "sierp/repro.hpp"

#include "sierp/constructions.hpp"
#include "sierp/embedding.hpp"
#include "sierp/errors.hpp"
#include "sierp/io.hpp"
#include "sierp/reductions.hpp"

#include <atomic>
#include <filesystem>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace sierp {

std::string to_string(RowStatus s) {
    switch (s) {
    case RowStatus::Match: return "MATCH";
    case RowStatus::Mismatch: return "MISMATCH";
    case RowStatus::SkippedBudget: return "SKIPPED-budget";
    }
    return "?";
}

bool GoldenStore::has(const std::string& name) const {
    return std::filesystem::exists(path(name));
}

std::string cycle_certificate_file(int k) {
    return "C" + std::to_string(k) + "_3_" + (k % 2 == 0 ? "ii" : "i") + ".json";
}

Condition cycle_condition(int k) {
    if (k % 2 != 0)
        return Condition{ConditionKind::I, {}};
    std::vector<int> side(k);
    for (int v = 0; v < k; ++v)
        side[v] = v % 2;
    return Condition{ConditionKind::II, side};
}

int cycle_edge_value(int k) { return k % 2 == 0 ? 3 : 4; }

namespace {

std::mutex golden_mutex;

} // namespace

EdgeColoring golden_edge_coloring(const GoldenStore& store, const std::string& name,
                                  const Graph& g, const std::function<EdgeColoring()>& compute) {
    std::lock_guard lock(golden_mutex);
    if (store.has(name))
        return edge_coloring_from_json(read_json_file(store.path(name)), g);
    EdgeColoring c = compute();
    if (store.write_missing)
        write_text_file(store.path(name), coloring_to_json(g, c).dump(1) + "\n");
    return c;
}

std::vector<int> golden_embedding(const GoldenStore& store, const std::string& name,
                                  const Graph& pattern, const Graph& host,
                                  const std::function<std::vector<int>()>& compute) {
    std::lock_guard lock(golden_mutex);
    if (store.has(name))
        return embedding_from_json(read_json_file(store.path(name)), pattern, host);
    std::vector<int> m = compute();
    if (store.write_missing)
        write_text_file(store.path(name), embedding_to_json(pattern, host, m).dump(1) + "\n");
    return m;
}

namespace {

using Task = std::function<ReproRow()>;

ReproRow make_row(std::string suite, std::string instance, std::string claim, int claimed,
                  std::string method) {
    ReproRow r;
    r.suite = std::move(suite);
    r.instance = std::move(instance);
    r.claim = std::move(claim);
    r.claimed = claimed;
    r.method = std::move(method);
    return r;
}

void settle(ReproRow& r) {
    r.status = r.computed && *r.computed == r.claimed ? RowStatus::Match : RowStatus::Mismatch;
}

/// Runs body, mapping exhausted budgets to SKIPPED and any other failure to
/// MISMATCH with the message as note.
Task guarded(ReproRow proto, std::function<void(ReproRow&)> body) {
    return [proto = std::move(proto), body = std::move(body)]() {
        ReproRow r = proto;
        try {
            body(r);
        } catch (const ResourceError& e) {
            r.status = RowStatus::SkippedBudget;
            r.note = e.what();
        } catch (const std::exception& e) {
            r.computed.reset();
            r.status = RowStatus::Mismatch;
            r.note = e.what();
        }
        return r;
    };
}

struct BudgetExhausted : ResourceError {
    using ResourceError::ResourceError;
};

int exact_value(const SolveOutcome& o, const std::string& what) {
    if (o.status != SolveStatus::Sat)
        throw BudgetExhausted("budget exhausted on " + what + " (bounds " +
                              std::to_string(o.lower) + ".." + std::to_string(o.upper) + ")");
    return o.value;
}

int exact_vertex(const Graph& g, const SolverOptions& opts) {
    return exact_value(injective_chromatic_number(g, opts).outcome, g.name());
}

int exact_edge(const Graph& g, const SolverOptions& opts) {
    return exact_value(injective_chromatic_index(g, opts).outcome, g.name());
}

void require_valid(const Graph& g, const EdgeColoring& c, const std::string& what) {
    if (auto v = validate_edge(g, c))
        throw std::runtime_error(what + " is not injective: " + describe(g, *v));
}

void require_valid(const Graph& g, const VertexColoring& f, const std::string& what) {
    if (auto v = validate_vertex(g, f))
        throw std::runtime_error(what + " is not injective: " + describe(g, *v));
}

/// Sets computed when the bounds meet, otherwise notes the gap.
void from_bounds(ReproRow& r, int lower, int upper) {
    if (lower == upper)
        r.computed = lower;
    else
        r.note = "bounds " + std::to_string(lower) + ".." + std::to_string(upper);
    settle(r);
}

void vertex_tasks(const ReproOptions& opts, std::vector<Task>& tasks) {
    const SolverOptions so = opts.solver;
    for (int p = 3; p <= 5; ++p)
        for (int n = 1; n <= 3; ++n) {
            SierpinskiGraph s(complete_graph(p), n);
            tasks.push_back(guarded(make_row("vertex", s.name(), "chi_i = p", p, "exact"),
                                    [s, so](ReproRow& r) {
                                        r.computed = exact_vertex(s.materialize(), so);
                                        settle(r);
                                    }));
        }
    for (int k = 3; k <= 10; ++k)
        for (int n = 2; n <= 4; ++n) {
            SierpinskiGraph s(cycle_graph(k), n);
            const bool exact = n == 2 || (n == 3 && k <= 6) || k == 3;
            if (exact) {
                tasks.push_back(guarded(make_row("vertex", s.name(), "chi_i = 3", 3, "exact"),
                                        [s, so](ReproRow& r) {
                                            r.computed = exact_vertex(s.materialize(), so);
                                            settle(r);
                                        }));
                continue;
            }
            tasks.push_back(guarded(
                make_row("vertex", s.name(), "chi_i = 3", 3, "construction+lower-bound"),
                [s, k, n](ReproRow& r) {
                    const SierpinskiGraph s2(cycle_graph(k), 2);
                    const Graph g = s.materialize();
                    const VertexColoring f = lift_vertex_projection(s2, cycle_s2_coloring(k), n);
                    require_valid(g, f, "lifted coloring");
                    // the neighbors of a vertex pairwise share it
                    from_bounds(r, g.max_degree(), used_colors(f));
                }));
        }
    for (int k = 4; k <= 16; ++k) {
        const Graph c = cycle_graph(k);
        const int claimed = k % 4 == 0 ? 2 : 3;
        tasks.push_back(guarded(
            make_row("vertex", c.name(), k % 4 == 0 ? "chi_i = 2" : "chi_i = 3", claimed, "exact"),
            [c, so](ReproRow& r) {
                r.computed = exact_vertex(c, so);
                settle(r);
            }));
    }
}

/// S_G^3 onto the copy with prefix (0,...,0) in S_G^n: leading zero
/// coordinates leave the word index unchanged.
std::vector<int> copy_embedding(int copy_order) {
    std::vector<int> m(copy_order);
    std::iota(m.begin(), m.end(), 0);
    return m;
}

void edge_tasks(const ReproOptions& opts, std::vector<Task>& tasks) {
    const SolverOptions so = opts.solver;
    const GoldenStore store = opts.golden;
    for (int n = 1; n <= 3; ++n) {
        SierpinskiGraph s(complete_graph(3), n);
        tasks.push_back(guarded(make_row("edge", s.name(), "chi_i' = " + std::to_string(n + 2),
                                         n + 2, "exact"),
                                [s, so](ReproRow& r) {
                                    r.computed = exact_edge(s.materialize(), so);
                                    settle(r);
                                }));
    }
    tasks.push_back(guarded(make_row("edge", "T(P)", "chi = 5", 5, "exact"), [so, store](ReproRow& r) {
        const Graph p = gadget_P();
        const Graph host = SierpinskiGraph(complete_graph(3), 3).materialize();
        const auto m = golden_embedding(store, kPEmbeddingFile, p, host, [&] {
            auto e = find_embedding(p, host, so.budget);
            if (e.status != EmbeddingStatus::Found)
                throw BudgetExhausted("no embedding of P found");
            return e.mapping;
        });
        if (!is_embedding(p, host, m))
            throw std::runtime_error(std::string(kPEmbeddingFile) + " is not an embedding");
        r.certificates.push_back(kPEmbeddingFile);
        r.computed = exact_value(chromatic_number(tilde_graph(p).graph, {}, so), "T(P)");
        settle(r);
    }));
    for (int n = 4; n <= 6; ++n) {
        SierpinskiGraph s(complete_graph(3), n);
        tasks.push_back(guarded(
            make_row("edge", s.name(), "chi_i' = 5", 5, "construction+lower-bound"),
            [s, n, so, store](ReproRow& r) {
                const SierpinskiGraph s3(complete_graph(3), 3);
                const Graph g3 = s3.materialize();
                auto load = [&](const char* file, ConditionKind kind, S3Type type) {
                    EdgeColoring c = golden_edge_coloring(store, file, g3, [&] {
                        auto res = constrained_certificate_search(s3, 5, Condition{kind, {}}, so);
                        if (!res.certificate)
                            throw BudgetExhausted(std::string("no certificate for ") + file);
                        return *res.certificate;
                    });
                    require_valid(g3, c, file);
                    if (!check_s3_type(s3, c, type))
                        throw std::runtime_error(std::string(file) + " breaks its type contract");
                    r.certificates.push_back(file);
                    return TypedS3Coloring{3, type, std::move(c)};
                };
                const auto a = load(kTypeAFile, ConditionKind::TypeA, S3Type::A);
                const auto b = load(kTypeBFile, ConditionKind::TypeB, S3Type::B);
                const auto [ta, tb] = s3_colorings(a, b, n);
                const Graph g = s.materialize();
                require_valid(g, ta.coloring, "composed type A coloring");
                require_valid(g, tb.coloring, "composed type B coloring");
                if (!check_s3_type(s, ta.coloring, S3Type::A) ||
                    !check_s3_type(s, tb.coloring, S3Type::B))
                    throw std::runtime_error("composition breaks the type contract");
                const int lower3 = exact_edge(g3, so);
                if (!is_embedding(g3, g, copy_embedding(g3.order())))
                    throw std::runtime_error("S(K3,3) copy is not an embedding");
                from_bounds(r, lower3, std::max(used_colors(ta.coloring), used_colors(tb.coloring)));
            }));
    }
    const int top[] = {0, 0, 0, 0, 6, 5, 4};
    for (int k = 4; k <= 6; ++k)
        for (int n = 2; n <= top[k]; ++n) {
            SierpinskiGraph s(cycle_graph(k), n);
            const int claimed = cycle_edge_value(k);
            const std::string claim = "chi_i' = " + std::to_string(claimed);
            if (n == 2) {
                tasks.push_back(guarded(make_row("edge", s.name(), claim, claimed, "exact"),
                                        [s, so](ReproRow& r) {
                                            r.computed = exact_edge(s.materialize(), so);
                                            settle(r);
                                        }));
                continue;
            }
            tasks.push_back(guarded(
                make_row("edge", s.name(), claim, claimed, "construction+lower-bound"),
                [s, k, n, so, store](ReproRow& r) {
                    const Graph base = cycle_graph(k);
                    const SierpinskiGraph s3(base, 3);
                    const Graph g3 = s3.materialize();
                    const Condition cond = cycle_condition(k);
                    const std::string file = cycle_certificate_file(k);
                    EdgeColoring c = golden_edge_coloring(store, file, g3, [&] {
                        auto res = constrained_certificate_search(s3, cycle_edge_value(k), cond, so);
                        if (!res.certificate)
                            throw BudgetExhausted("no certificate for " + file);
                        return *res.certificate;
                    });
                    require_valid(g3, c, file);
                    r.certificates.push_back(file);
                    EdgeColoring lifted;
                    if (n == 3) {
                        const bool ok = cond.kind == ConditionKind::II
                                            ? check_condition_ii(s3, c, cond.side)
                                            : check_condition_i(s3, c);
                        if (!ok)
                            throw std::runtime_error(file + " does not satisfy its condition");
                        lifted = c;
                    } else if (cond.kind == ConditionKind::II) {
                        lifted = edge_lift_condition_ii(s3, c, n, cond.side);
                    } else {
                        lifted = edge_lift_condition_i(s3, c, n, default_choice(base));
                    }
                    require_valid(s.materialize(), lifted, "lifted coloring");
                    const int lower = exact_edge(SierpinskiGraph(base, 2).materialize(), so);
                    from_bounds(r, lower, used_colors(lifted));
                }));
        }
}

} // namespace

std::vector<ReproRow> run_repro(const ReproOptions& opts) {
    if (opts.suite != "vertex" && opts.suite != "edge" && opts.suite != "all")
        throw InputError("suite must be vertex, edge or all, got \"" + opts.suite + "\"");
    std::vector<Task> tasks;
    if (opts.suite != "edge")
        vertex_tasks(opts, tasks);
    if (opts.suite != "vertex")
        edge_tasks(opts, tasks);

    std::vector<ReproRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < tasks.size();)
            rows[i] = tasks[i]();
    };
    const int jobs = std::max(1, opts.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return rows;
}

std::string repro_tsv(const std::vector<ReproRow>& rows) {
    std::ostringstream os;
    os << "suite\tinstance\tclaim\tclaimed\tcomputed\tmethod\tcertificates\tstatus\tnote\n";
    for (const auto& r : rows) {
        std::string certs;
        for (const auto& c : r.certificates)
            certs += (certs.empty() ? "" : ",") + c;
        os << r.suite << '\t' << r.instance << '\t' << r.claim << '\t' << r.claimed << '\t'
           << (r.computed ? std::to_string(*r.computed) : "-") << '\t' << r.method << '\t'
           << (certs.empty() ? "-" : certs) << '\t' << to_string(r.status) << '\t'
           << (r.note.empty() ? "-" : r.note) << '\n';
    }
    return os.str();
}

bool any_mismatch(const std::vector<ReproRow>& rows) {
    for (const auto& r : rows)
        if (r.status == RowStatus::Mismatch)
            return true;
    return false;
}

} // namespace sierp
