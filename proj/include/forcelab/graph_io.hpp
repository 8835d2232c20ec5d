#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "forcelab/graph.hpp"

namespace forcelab::io {

// Edge-list text: first non-comment line "n e", then e lines "u v" (0-based).
// Lines starting with '#' are comments; "# name: X" sets the graph name.
Graph read_edge_list(std::istream& in, std::string default_name = {});
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

// Sidecar {"labels": ["c", "u1", "v1_1_1", ...]}.
nlohmann::json labels_json(const Graph& g);
Graph with_labels(const Graph& g, const nlohmann::json& sidecar);

// Single-document form {"name", "n", "edges": [[u,v],...], "labels": [...]}.
nlohmann::json to_json(const Graph& g);
Graph from_json(const nlohmann::json& doc);

std::filesystem::path sidecar_path(const std::filesystem::path& graph_path);

// Reads a graph from a file ("-" is stdin). JSON documents are detected by a
// leading '{'. For edge lists, an explicit labels path wins, otherwise
// "<path>.labels.json" is used when present.
Graph load_graph(const std::string& path, const std::string& labels_path = {});

nlohmann::json to_json(const VertexSet& s);

}  // namespace forcelab::io
