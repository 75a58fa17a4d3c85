#include "sierp/io.hpp"

#include "sierp/errors.hpp"

#include <fstream>
#include <sstream>

namespace sierp {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::string edge_name(const Graph& g, int e) {
    return g.label(g.edge(e).u) + "|" + g.label(g.edge(e).v);
}

json descriptor(const Graph& g) {
    return json{{"name", g.name()},
                {"order", g.order()},
                {"size", g.size()},
                {"fingerprint", hex64(g.fingerprint())}};
}

void check_descriptor(const json& j, const Graph& g) {
    if (!j.contains("graph"))
        return;
    const json& d = j.at("graph");
    if (d.contains("fingerprint") && d.at("fingerprint") != hex64(g.fingerprint())) {
        std::string made = d.contains("name") ? d.at("name").get<std::string>() : "?";
        throw InputError("coloring was made for a different graph (" + made + ", fingerprint " +
                         d.at("fingerprint").get<std::string>() + ") than " + g.name() +
                         " (fingerprint " + hex64(g.fingerprint()) + ")");
    }
}

int read_k(const json& j) {
    const int k = as_int(field(j, "k"), "k");
    if (k < 1)
        throw InputError("k must be positive");
    return k;
}

} // namespace

std::string hex64(std::uint64_t x) {
    std::ostringstream os;
    os << std::hex << x;
    return os.str();
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v});
    json j{{"order", g.order()}, {"edges", std::move(edges)}};
    if (g.has_custom_labels())
        j["labels"] = g.labels();
    return j;
}

Graph graph_from_json(const json& j) {
    const int order = as_int(field(j, "order"), "order");
    if (order < 0)
        throw InputError("order must be nonnegative");
    const json& ej = field(j, "edges");
    if (!ej.is_array())
        throw InputError("\"edges\" must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : ej) {
        if (!e.is_array() || e.size() != 2)
            throw InputError("every edge must be a pair [i, j]");
        edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const json& lj = j.at("labels");
        if (!lj.is_array() || static_cast<int>(lj.size()) != order)
            throw InputError("\"labels\" must list one string per vertex");
        for (const auto& l : lj) {
            if (!l.is_string())
                throw InputError("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    Graph g(order, edges, std::move(labels));
    if (j.contains("name") && j.at("name").is_string())
        g.set_name(j.at("name").get<std::string>());
    return g;
}

std::string graph_json_text(const Graph& g) { return graph_to_json(g).dump() + "\n"; }

std::string graph_dot_text(const Graph& g) {
    std::ostringstream os;
    os << "graph " << json(g.name()).dump() << " {\n";
    for (int v = 0; v < g.order(); ++v)
        os << "  " << json(g.label(v)).dump() << ";\n";
    for (const auto& e : g.edges())
        os << "  " << json(g.label(e.u)).dump() << " -- " << json(g.label(e.v)).dump() << ";\n";
    os << "}\n";
    return os.str();
}

json coloring_to_json(const Graph& g, const VertexColoring& f) {
    json colors = json::array();
    for (int v = 0; v < g.order() && v < static_cast<int>(f.colors.size()); ++v)
        colors.push_back({g.label(v), f.colors[v]});
    return json{{"kind", "vertex"}, {"k", f.k}, {"colors", std::move(colors)},
                {"graph", descriptor(g)}};
}

json coloring_to_json(const Graph& g, const EdgeColoring& c) {
    json colors = json::array();
    for (int e = 0; e < g.size() && e < static_cast<int>(c.colors.size()); ++e)
        colors.push_back({edge_name(g, e), c.colors[e]});
    return json{{"kind", "edge"}, {"k", c.k}, {"colors", std::move(colors)},
                {"graph", descriptor(g)}};
}

ColoringKind coloring_kind(const json& j) {
    const json& kind = field(j, "kind");
    if (kind == "vertex")
        return ColoringKind::Vertex;
    if (kind == "edge")
        return ColoringKind::Edge;
    throw InputError("\"kind\" must be \"vertex\" or \"edge\"");
}

namespace {

template <class Resolve>
std::vector<int> read_colors(const json& j, int slots, Resolve resolve) {
    const json& cj = field(j, "colors");
    if (!cj.is_array())
        throw InputError("\"colors\" must be an array");
    std::vector<int> colors(slots, 0);
    for (const auto& entry : cj) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string())
            throw InputError("every color entry must be [name, color]");
        const int idx = resolve(entry[0].get<std::string>());
        colors[idx] = as_int(entry[1], "color");
    }
    return colors;
}

} // namespace

VertexColoring vertex_coloring_from_json(const json& j, const Graph& g) {
    if (coloring_kind(j) != ColoringKind::Vertex)
        throw InputError("expected a vertex coloring");
    check_descriptor(j, g);
    VertexColoring f;
    f.k = read_k(j);
    f.colors = read_colors(j, g.order(), [&](const std::string& name) {
        auto v = g.find_label(name);
        if (!v)
            throw InputError("unknown vertex \"" + name + "\"");
        return *v;
    });
    f.graph_fingerprint = g.fingerprint();
    return f;
}

EdgeColoring edge_coloring_from_json(const json& j, const Graph& g) {
    if (coloring_kind(j) != ColoringKind::Edge)
        throw InputError("expected an edge coloring");
    check_descriptor(j, g);
    EdgeColoring c;
    c.k = read_k(j);
    c.colors = read_colors(j, g.size(), [&](const std::string& name) {
        const auto bar = name.find('|');
        if (bar == std::string::npos)
            throw InputError("edge \"" + name + "\" must be written as a|b");
        auto a = g.find_label(name.substr(0, bar));
        auto b = g.find_label(name.substr(bar + 1));
        if (!a || !b)
            throw InputError("unknown vertex in edge \"" + name + "\"");
        auto e = g.edge_index(*a, *b);
        if (!e)
            throw InputError("\"" + name + "\" is not an edge of " + g.name());
        return *e;
    });
    c.graph_fingerprint = g.fingerprint();
    return c;
}

json embedding_to_json(const Graph& pattern, const Graph& host, const std::vector<int>& mapping) {
    json m = json::array();
    for (int p = 0; p < pattern.order(); ++p)
        m.push_back({pattern.label(p), host.label(mapping.at(p))});
    return json{{"pattern", pattern.name()}, {"host", host.name()}, {"mapping", std::move(m)}};
}

std::vector<int> embedding_from_json(const json& j, const Graph& pattern, const Graph& host) {
    const json& mj = field(j, "mapping");
    if (!mj.is_array())
        throw InputError("\"mapping\" must be an array");
    std::vector<int> mapping(pattern.order(), -1);
    for (const auto& entry : mj) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
            !entry[1].is_string())
            throw InputError("mapping entries must be [pattern label, host label]");
        auto p = pattern.find_label(entry[0].get<std::string>());
        auto h = host.find_label(entry[1].get<std::string>());
        if (!p || !h)
            throw InputError("unknown vertex in mapping entry " + entry.dump());
        mapping[*p] = *h;
    }
    for (int x : mapping)
        if (x < 0)
            throw InputError("mapping does not cover every pattern vertex");
    return mapping;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json read_json_file(const std::string& path) {
    try {
        return json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
    if (!out)
        throw InputError("write failed for " + path);
}

} // namespace sierp
