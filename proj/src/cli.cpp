#include "sierp/cli.hpp"

#include "sierp/constructions.hpp"
#include "sierp/embedding.hpp"
#include "sierp/errors.hpp"
#include "sierp/io.hpp"
#include "sierp/reductions.hpp"
#include "sierp/repro.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

namespace sierp {

namespace {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Options shared by the commands that act on one graph.
struct GraphArgs {
    std::string base;
    std::string graph_file;
    int n = 1;
    std::uint64_t vertex_budget = kDefaultVertexBudget;
};

void add_graph_options(CLI::App* app, GraphArgs& g) {
    app->add_option("--base", g.base, "base graph: K<p>, C<k>, P<k>, H, P or petersen");
    app->add_option("--graph", g.graph_file, "base graph as a JSON file");
    app->add_option("--n", g.n, "dimension of S_G^n")->check(CLI::PositiveNumber);
    app->add_option("--vertex-budget", g.vertex_budget, "largest S_G^n to materialize");
}

Graph named_graph(const std::string& spec) {
    if (spec == "H")
        return gadget_H();
    if (spec == "P")
        return gadget_P();
    if (spec == "petersen")
        return petersen_graph();
    return parse_base_spec(spec);
}

Graph base_graph(const GraphArgs& a) {
    if (a.base.empty() == a.graph_file.empty())
        throw InputError("give exactly one of --base and --graph");
    if (!a.base.empty())
        return named_graph(a.base);
    return graph_from_json(read_json_file(a.graph_file));
}

SierpinskiGraph sierpinski(const GraphArgs& a) { return SierpinskiGraph(base_graph(a), a.n); }

std::string summary(const Graph& g) {
    return g.name() + " (" + std::to_string(g.order()) + " vertices, " +
           std::to_string(g.size()) + " edges)";
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty())
        out << text;
    else
        write_text_file(path, text);
}

std::string format_graph(const Graph& g, const std::string& format) {
    if (format == "json")
        return graph_json_text(g);
    if (format == "dot")
        return graph_dot_text(g);
    throw InputError("format must be json or dot, got \"" + format + "\"");
}

std::vector<int> parse_side(const Graph& base, const std::string& a_list) {
    if (a_list.empty()) {
        auto side = bipartition(base);
        if (!side)
            throw InputError(base.name() + " is not bipartite");
        return *side;
    }
    std::vector<int> side(base.order(), 1);
    std::stringstream ss(a_list);
    for (std::string item; std::getline(ss, item, ',');) {
        auto v = base.find_label(item);
        if (!v)
            throw InputError("unknown base vertex \"" + item + "\" in --bipartition");
        side[*v] = 0;
    }
    return side;
}

// ---- gen ----

struct GenArgs {
    GraphArgs g;
    std::string format = "json";
    std::string out;
};

void cmd_gen(const GenArgs& a, std::ostream& out) {
    const Graph g = sierpinski(a.g).materialize(a.g.vertex_budget);
    emit(out, a.out, format_graph(g, a.format));
}

// ---- reduce ----

struct ReduceArgs {
    GraphArgs g;
    std::string kind = "vertex";
    std::string format = "json";
    std::string out;
    std::string map;
};

void cmd_reduce(const ReduceArgs& a, std::ostream& out) {
    const Graph g = sierpinski(a.g).materialize(a.g.vertex_budget);
    ConflictGraph c;
    if (a.kind == "vertex")
        c = common_neighbor_graph(g);
    else if (a.kind == "edge")
        c = tilde_graph(g);
    else
        throw InputError("--kind must be vertex or edge");
    emit(out, a.out, format_graph(c.graph, a.format));
    if (!a.map.empty()) {
        std::ostringstream os;
        os << "node\tsource\n";
        for (int i = 0; i < c.graph.order(); ++i) {
            const int src = c.node_map[i];
            os << c.graph.label(i) << '\t'
               << (a.kind == "vertex" ? g.label(src)
                                      : g.label(g.edge(src).u) + "|" + g.label(g.edge(src).v))
               << '\n';
        }
        write_text_file(a.map, os.str());
    }
}

// ---- solve ----

struct SolveArgs {
    GraphArgs g;
    std::string variant = "vertex";
    int k = 0;
    std::uint64_t budget = default_budget();
    std::string condition;
    std::string bipartition;
    std::string certificate;
    int portfolio = 1;
    std::uint64_t seed = 0;
};

void report(std::ostream& out, const SolveOutcome& o) {
    out << "status: " << to_string(o.status) << "\n";
    if (o.status == SolveStatus::Sat)
        out << "value: " << o.value << "\n";
    if (o.upper > 0)
        out << "bounds: " << o.lower << ".." << o.upper << "\n";
    out << "explored: " << o.explored << " of " << o.budget << "\n";
}

void cmd_solve(const SolveArgs& a, std::ostream& out) {
    const SierpinskiGraph s = sierpinski(a.g);
    const Graph g = s.materialize(a.g.vertex_budget);
    SolverOptions opts;
    opts.budget = a.budget;
    opts.portfolio = a.portfolio;
    opts.seed = a.seed;
    out << "graph: " << summary(g) << "\n";

    if (!a.condition.empty()) {
        if (a.k < 1)
            throw InputError("--condition needs --k");
        Condition cond{parse_condition(a.condition), {}};
        if (cond.kind == ConditionKind::II)
            cond.side = parse_side(s.base(), a.bipartition);
        out << "variant: edge\ncondition: " << to_string(cond.kind) << "\n";
        auto r = constrained_certificate_search(s, a.k, cond, opts);
        report(out, r.outcome);
        if (r.certificate && !a.certificate.empty()) {
            write_text_file(a.certificate, coloring_to_json(g, *r.certificate).dump(1) + "\n");
            out << "certificate: " << a.certificate << "\n";
        }
        if (r.outcome.status == SolveStatus::Unknown)
            throw BudgetError("budget exhausted");
        return;
    }

    if (a.variant != "vertex" && a.variant != "edge")
        throw InputError("--variant must be vertex or edge");
    const bool vertex = a.variant == "vertex";
    out << "variant: " << a.variant << "\n";
    const ConflictGraph c = vertex ? common_neighbor_graph(g) : tilde_graph(g);
    const SolveOutcome o = a.k > 0 ? k_colorable(c.graph, a.k, ColorConstraints{}, opts)
                                   : chromatic_number(c.graph, ColorConstraints{}, opts);
    report(out, o);
    if (o.status == SolveStatus::Sat && !a.certificate.empty()) {
        std::vector<int> colors(vertex ? g.order() : g.size());
        for (int i = 0; i < c.graph.order(); ++i)
            colors[c.node_map[i]] = o.coloring[i];
        json j;
        if (vertex) {
            const auto f = make_vertex_coloring(g, colors, o.value);
            if (auto v = validate_vertex(g, f))
                throw std::logic_error("solver certificate failed validation: " + describe(g, *v));
            j = coloring_to_json(g, f);
        } else {
            const auto e = make_edge_coloring(g, colors, o.value);
            if (auto v = validate_edge(g, e))
                throw std::logic_error("solver certificate failed validation: " + describe(g, *v));
            j = coloring_to_json(g, e);
        }
        write_text_file(a.certificate, j.dump(1) + "\n");
        out << "certificate: " << a.certificate << "\n";
    }
    if (o.status == SolveStatus::Unknown)
        throw BudgetError("budget exhausted");
}

// ---- construct ----

struct ConstructArgs {
    GraphArgs g;
    std::string theorem;
    std::string in;
    std::string out;
    std::string choice = "default";
    std::string bipartition;
    int k = 0;
    std::uint64_t budget = default_budget();
};

ChoiceFunction pick_choice(const Graph& base, const std::string& name) {
    if (name == "default")
        return default_choice(base);
    if (name == "reverse")
        return reverse_choice(base);
    throw InputError("--choice must be default or reverse");
}

VertexColoring solve_vertex(const Graph& g, std::uint64_t budget) {
    SolverOptions opts;
    opts.budget = budget;
    auto r = injective_chromatic_number(g, opts);
    if (r.outcome.status != SolveStatus::Sat)
        throw BudgetError("budget exhausted computing an input coloring of " + g.name());
    return r.certificate;
}

void cmd_construct(const ConstructArgs& a, std::ostream& out) {
    const Graph base = base_graph(a.g);
    const int n = a.g.n;
    const std::string& t = a.theorem;
    SolverOptions opts;
    opts.budget = a.budget;

    auto write = [&](const Graph& g, const json& j, int used, int k) {
        emit(out, a.out, j.dump(1) + "\n");
        if (!a.out.empty())
            out << "graph: " << summary(g) << "\ncolors: " << used << " of " << k
                << "\nvalid: yes\nwritten: " << a.out << "\n";
    };
    auto vertex_out = [&](const SierpinskiGraph& s, const VertexColoring& f) {
        const Graph g = s.materialize(a.g.vertex_budget);
        if (auto v = validate_vertex(g, f))
            throw std::logic_error("construction produced an invalid coloring: " + describe(g, *v));
        write(g, coloring_to_json(g, f), used_colors(f), f.k);
    };
    auto edge_out = [&](const SierpinskiGraph& s, const EdgeColoring& c) {
        const Graph g = s.materialize(a.g.vertex_budget);
        if (auto v = validate_edge(g, c))
            throw std::logic_error("construction produced an invalid coloring: " + describe(g, *v));
        write(g, coloring_to_json(g, c), used_colors(c), c.k);
    };
    auto input_s2 = [&](const SierpinskiGraph& s2) {
        const Graph g2 = s2.materialize();
        if (!a.in.empty())
            return vertex_coloring_from_json(read_json_file(a.in), g2);
        return solve_vertex(g2, a.budget);
    };
    auto input_s3 = [&](const SierpinskiGraph& s3, std::optional<Condition> cond) {
        const Graph g3 = s3.materialize();
        if (!a.in.empty())
            return edge_coloring_from_json(read_json_file(a.in), g3);
        if (!cond) {
            auto r = injective_chromatic_index(g3, opts);
            if (r.outcome.status != SolveStatus::Sat)
                throw BudgetError("budget exhausted computing an input coloring of " + g3.name());
            return r.certificate;
        }
        if (a.k < 1)
            throw InputError("without --in, --theorem " + t + " needs --k");
        auto r = constrained_certificate_search(s3, a.k, *cond, opts);
        if (r.outcome.status == SolveStatus::Unknown)
            throw BudgetError("budget exhausted searching a condition certificate");
        if (!r.certificate)
            throw InputError("no edge " + std::to_string(a.k) + "-coloring of " + s3.name() +
                             " satisfies condition " + to_string(cond->kind));
        return *r.certificate;
    };

    if (t == "vlift+1") {
        const SierpinskiGraph s2(base, 2);
        vertex_out(SierpinskiGraph(base, n), lift_vertex_plus_one(s2, input_s2(s2), n));
    } else if (t == "vlift-proj") {
        const SierpinskiGraph s2(base, 2);
        VertexColoring f2;
        if (a.in.empty() && a.g.base.size() > 1 && a.g.base[0] == 'C')
            f2 = cycle_s2_coloring(base.order());
        else
            f2 = input_s2(s2);
        vertex_out(SierpinskiGraph(base, n), lift_vertex_projection(s2, f2, n));
    } else if (t == "cycle-s2") {
        if (a.g.base.empty() || a.g.base[0] != 'C')
            throw InputError("cycle-s2 needs --base C<k>");
        vertex_out(SierpinskiGraph(base, 2), cycle_s2_coloring(base.order()));
    } else if (t == "extreme+1") {
        const VertexColoring f = a.in.empty() ? solve_vertex(base, a.budget)
                                              : vertex_coloring_from_json(read_json_file(a.in), base);
        vertex_out(SierpinskiGraph(base, 2), extreme_plus_one_s2(base, f));
    } else if (t == "elift") {
        const SierpinskiGraph s3(base, 3);
        edge_out(SierpinskiGraph(base, n),
                 edge_lift_general(s3, input_s3(s3, std::nullopt), n, pick_choice(base, a.choice)));
    } else if (t == "elift-i") {
        const SierpinskiGraph s3(base, 3);
        const EdgeColoring f3 = input_s3(s3, Condition{ConditionKind::I, {}});
        edge_out(SierpinskiGraph(base, n),
                 edge_lift_condition_i(s3, f3, n, pick_choice(base, a.choice)));
    } else if (t == "elift-ii") {
        const SierpinskiGraph s3(base, 3);
        const auto side = parse_side(base, a.bipartition);
        const EdgeColoring f3 = input_s3(s3, Condition{ConditionKind::II, side});
        edge_out(SierpinskiGraph(base, n), edge_lift_condition_ii(s3, f3, n, side));
    } else if (t == "s3-typeA" || t == "s3-typeB") {
        if (base.order() != 3 || base.size() != 3)
            throw InputError(t + " needs --base K3");
        if (n < 3)
            throw InputError(t + " needs --n >= 3");
        const auto [a3, b3] = s3_base_colorings(opts);
        const auto [an, bn] = s3_colorings(a3, b3, n);
        const SierpinskiGraph s(complete_graph(3), n);
        const EdgeColoring& c = t == "s3-typeA" ? an.coloring : bn.coloring;
        if (!check_s3_type(s, c, t == "s3-typeA" ? S3Type::A : S3Type::B))
            throw std::logic_error("composed coloring breaks its type contract");
        edge_out(s, c);
    } else {
        throw InputError("unknown --theorem \"" + t + "\"");
    }
}

// ---- verify ----

struct VerifyArgs {
    GraphArgs g;
    std::string coloring;
    std::string condition;
    std::string bipartition;
};

void cmd_verify(const VerifyArgs& a, std::ostream& out) {
    if (a.coloring.empty())
        throw InputError("verify needs --coloring");
    const SierpinskiGraph s = sierpinski(a.g);
    const Graph g = s.materialize(a.g.vertex_budget);
    const json j = read_json_file(a.coloring);
    std::optional<Violation> violation;
    std::optional<EdgeColoring> edge;
    if (coloring_kind(j) == ColoringKind::Vertex) {
        violation = validate_vertex(g, vertex_coloring_from_json(j, g));
    } else {
        edge = edge_coloring_from_json(j, g);
        violation = validate_edge(g, *edge);
    }
    if (violation) {
        out << "VIOLATION: " << describe(g, *violation) << "\n";
        throw MismatchError("coloring is not injective");
    }
    out << "OK: injective " << j.at("kind").get<std::string>() << " coloring of " << summary(g)
        << "\n";
    if (a.condition.empty())
        return;
    if (!edge)
        throw InputError("--condition applies to edge colorings");
    const ConditionKind kind = parse_condition(a.condition);
    std::optional<std::string> failure;
    switch (kind) {
    case ConditionKind::I:
        failure = condition_i_failure(s, *edge);
        break;
    case ConditionKind::II:
        failure = condition_ii_failure(s, *edge, parse_side(s.base(), a.bipartition));
        break;
    case ConditionKind::TypeA:
    case ConditionKind::TypeB:
        if (!check_s3_type(s, *edge, kind == ConditionKind::TypeA ? S3Type::A : S3Type::B))
            failure = "type contract does not hold";
        break;
    }
    if (failure) {
        out << "CONDITION " << to_string(kind) << " FAILS: " << *failure << "\n";
        throw MismatchError("condition fails");
    }
    out << "condition " << to_string(kind) << ": holds\n";
}

// ---- repro ----

struct ReproArgs {
    std::string suite = "all";
    std::uint64_t budget = default_budget();
    int jobs = 1;
    std::string out;
    std::string golden = SIERP_GOLDEN_DIR;
    bool write_golden = false;
};

void cmd_repro(const ReproArgs& a, std::ostream& out) {
    ReproOptions opts;
    opts.suite = a.suite;
    opts.solver.budget = a.budget;
    opts.golden.dir = a.golden;
    opts.golden.write_missing = a.write_golden;
    opts.jobs = a.jobs;
    const auto rows = run_repro(opts);
    const std::string table = repro_tsv(rows);
    out << table;
    if (!a.out.empty())
        write_text_file(a.out, table);
    if (any_mismatch(rows))
        throw MismatchError("reproduction table has MISMATCH rows");
}

// ---- embed ----

struct EmbedArgs {
    std::string pattern;
    GraphArgs host;
    std::uint64_t budget = default_budget();
    std::string out;
};

void cmd_embed(const EmbedArgs& a, std::ostream& out) {
    if (a.pattern.empty())
        throw InputError("embed needs --pattern");
    const Graph pattern = a.pattern.ends_with(".json") ? graph_from_json(read_json_file(a.pattern))
                                                        : named_graph(a.pattern);
    const Graph host = sierpinski(a.host).materialize(a.host.vertex_budget);
    const EmbeddingOutcome e = find_embedding(pattern, host, a.budget);
    out << "pattern: " << summary(pattern) << "\nhost: " << summary(host) << "\n";
    switch (e.status) {
    case EmbeddingStatus::Found:
        out << "status: FOUND\nexplored: " << e.explored << "\n";
        emit(out, a.out, embedding_to_json(pattern, host, e.mapping).dump(1) + "\n");
        break;
    case EmbeddingStatus::None:
        out << "status: NONE\nexplored: " << e.explored << "\n";
        break;
    case EmbeddingStatus::Unknown:
        out << "status: UNKNOWN\nexplored: " << e.explored << "\n";
        throw BudgetError("budget exhausted");
    }
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Sierpinski graphs and their injective colorings"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "emit S_G^n as JSON or DOT");
    add_graph_options(gen_cmd, gen.g);
    gen_cmd->add_option("--format", gen.format, "json or dot");
    gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

    ReduceArgs red;
    auto* red_cmd = app.add_subcommand("reduce", "emit the conflict graph of S_G^n");
    add_graph_options(red_cmd, red.g);
    red_cmd->add_option("--kind", red.kind, "vertex (common neighbors) or edge (common edges)");
    red_cmd->add_option("--format", red.format, "json or dot");
    red_cmd->add_option("--out", red.out, "output file (default stdout)");
    red_cmd->add_option("--map", red.map, "TSV file mapping conflict nodes to sources");

    SolveArgs sol;
    auto* sol_cmd = app.add_subcommand("solve", "exact injective chromatic number or index");
    add_graph_options(sol_cmd, sol.g);
    sol_cmd->add_option("--variant", sol.variant, "vertex or edge");
    sol_cmd->add_option("--k", sol.k, "decide k-colorability instead of minimizing");
    sol_cmd->add_option("--budget", sol.budget, "search-step budget");
    sol_cmd->add_option("--condition", sol.condition, "i, ii, typeA or typeB");
    sol_cmd->add_option("--bipartition", sol.bipartition, "comma-separated base labels of side A");
    sol_cmd->add_option("--certificate", sol.certificate, "write the coloring found here");
    sol_cmd->add_option("--portfolio", sol.portfolio, "parallel differently ordered searches");
    sol_cmd->add_option("--seed", sol.seed, "seed of the portfolio orderings");

    ConstructArgs con;
    auto* con_cmd = app.add_subcommand("construct", "build a coloring by one of the constructions");
    add_graph_options(con_cmd, con.g);
    con_cmd->add_option("--theorem", con.theorem,
                        "vlift+1, vlift-proj, cycle-s2, extreme+1, elift, elift-i, elift-ii, "
                        "s3-typeA or s3-typeB")
        ->required();
    con_cmd->add_option("--in", con.in, "input coloring");
    con_cmd->add_option("--out", con.out, "output coloring (default stdout)");
    con_cmd->add_option("--choice", con.choice, "chosen endpoints for edge lifts: default or reverse");
    con_cmd->add_option("--bipartition", con.bipartition, "comma-separated base labels of side A");
    con_cmd->add_option("--k", con.k, "colors of a searched input certificate");
    con_cmd->add_option("--budget", con.budget, "search-step budget for searched inputs");

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "check a coloring file against a graph");
    add_graph_options(ver_cmd, ver.g);
    ver_cmd->add_option("--coloring,--in", ver.coloring, "coloring JSON")->required();
    ver_cmd->add_option("--condition", ver.condition, "also check i, ii, typeA or typeB");
    ver_cmd->add_option("--bipartition", ver.bipartition, "comma-separated base labels of side A");

    ReproArgs rep;
    auto* rep_cmd = app.add_subcommand("repro", "recompute every claimed value as a TSV table");
    rep_cmd->add_option("--suite", rep.suite, "vertex, edge or all");
    rep_cmd->add_option("--budget", rep.budget, "search-step budget per search");
    rep_cmd->add_option("--jobs", rep.jobs, "rows evaluated concurrently")->check(CLI::PositiveNumber);
    rep_cmd->add_option("--out", rep.out, "also write the table here");
    rep_cmd->add_option("--golden", rep.golden, "directory of cached certificates");
    rep_cmd->add_flag("--write-golden", rep.write_golden, "cache certificates missing from --golden");

    EmbedArgs emb;
    auto* emb_cmd = app.add_subcommand("embed", "find a subgraph embedding into S_G^n");
    emb_cmd->add_option("--pattern", emb.pattern, "H, P, a base spec, or a graph JSON file")
        ->required();
    add_graph_options(emb_cmd, emb.host);
    emb_cmd->add_option("--budget", emb.budget, "search-step budget");
    emb_cmd->add_option("--out", emb.out, "embedding certificate (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*gen_cmd)
            cmd_gen(gen, out);
        else if (*red_cmd)
            cmd_reduce(red, out);
        else if (*sol_cmd)
            cmd_solve(sol, out);
        else if (*con_cmd)
            cmd_construct(con, out);
        else if (*ver_cmd)
            cmd_verify(ver, out);
        else if (*rep_cmd)
            cmd_repro(rep, out);
        else if (*emb_cmd)
            cmd_embed(emb, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const MismatchError& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

} // namespace sierp
