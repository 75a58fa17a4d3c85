#pragma once

#include "sierp/coloring.hpp"
#include "sierp/graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sierp {

using json = nlohmann::json;

/// {"order": N, "edges": [[i,j],...], "labels": [...]}; labels are written
/// only when the graph has custom ones.
json graph_to_json(const Graph& g);
/// Throws InputError on malformed input.
Graph graph_from_json(const json& j);

/// One line of compact JSON followed by a newline; canonical for a given graph.
std::string graph_json_text(const Graph& g);
/// Undirected DOT with vertex labels as node names.
std::string graph_dot_text(const Graph& g);

/// {"kind","k","colors":[[label, color],...],"graph":{...}}. Vertices are
/// named by label, edges by "a|b" with a < b in vertex order.
json coloring_to_json(const Graph& g, const VertexColoring& f);
json coloring_to_json(const Graph& g, const EdgeColoring& c);

ColoringKind coloring_kind(const json& j);
/// Entries not mentioned stay 0 (missing). Throws InputError for unknown
/// labels, a kind mismatch, or a "graph" descriptor that does not match g.
VertexColoring vertex_coloring_from_json(const json& j, const Graph& g);
EdgeColoring edge_coloring_from_json(const json& j, const Graph& g);

/// {"pattern":name,"host":name,"mapping":[[pattern label, host label],...]}
json embedding_to_json(const Graph& pattern, const Graph& host, const std::vector<int>& mapping);
std::vector<int> embedding_from_json(const json& j, const Graph& pattern, const Graph& host);

json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string hex64(std::uint64_t x);

} // namespace sierp
