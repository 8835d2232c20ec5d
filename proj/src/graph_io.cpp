#include "forcelab/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "forcelab/errors.hpp"

namespace forcelab::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_pair(std::string_view line, long long& a, long long& b) {
  std::istringstream ss{std::string(line)};
  std::string extra;
  if (!(ss >> a >> b)) return false;
  return !(ss >> extra);
}

}  // namespace

Graph read_edge_list(std::istream& in, std::string default_name) {
  std::string name = std::move(default_name);
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  long long n = 0, e = 0;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++lineno;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto body = trim(line.substr(1));
      if (body.starts_with("name:")) name = std::string(trim(body.substr(5)));
      continue;
    }
    long long a = 0, b = 0;
    if (!parse_pair(line, a, b)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected two integers, got '" +
                       std::string(line) + "'");
    }
    if (!have_header) {
      if (a < 0 || b < 0) throw ParseError("line " + std::to_string(lineno) + ": negative header");
      n = a;
      e = b;
      have_header = true;
      edges.reserve(static_cast<std::size_t>(e));
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError("line " + std::to_string(lineno) + ": endpoint out of range 0.." +
                       std::to_string(n - 1));
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!have_header) throw ParseError("missing 'n e' header line");
  if (static_cast<long long>(edges.size()) != e) {
    throw ParseError("header declares " + std::to_string(e) + " edges but " +
                     std::to_string(edges.size()) + " were read");
  }
  try {
    return Graph(static_cast<std::size_t>(n), edges, {}, std::move(name));
  } catch (const DomainError& err) {
    throw ParseError(err.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  if (!g.name().empty()) out << "# name: " << g.name() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream ss;
  write_edge_list(ss, g);
  return ss.str();
}

nlohmann::json labels_json(const Graph& g) {
  nlohmann::json labels = nlohmann::json::array();
  for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v).to_string());
  return {{"labels", labels}};
}

Graph with_labels(const Graph& g, const nlohmann::json& sidecar) {
  if (!sidecar.is_object() || !sidecar.contains("labels") || !sidecar["labels"].is_array()) {
    throw ParseError("label sidecar must be an object with a 'labels' array");
  }
  std::vector<VertexLabel> labels;
  for (const auto& item : sidecar["labels"]) {
    if (!item.is_string()) throw ParseError("labels must be strings");
    labels.push_back(VertexLabel::parse(item.get<std::string>()));
  }
  if (labels.size() != g.order()) {
    throw ParseError("sidecar has " + std::to_string(labels.size()) + " labels for " +
                     std::to_string(g.order()) + " vertices");
  }
  const auto edges = g.edges();
  return Graph(g.order(), edges, std::move(labels), g.name());
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  nlohmann::json doc = {{"name", g.name()}, {"n", g.order()}, {"edges", edges}};
  doc["labels"] = labels_json(g)["labels"];
  return doc;
}

Graph from_json(const nlohmann::json& doc) {
  try {
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& pair : doc.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("edge entries must be [u, v]");
      edges.push_back({pair[0].get<Vertex>(), pair[1].get<Vertex>()});
    }
    Graph g(n, edges, {}, doc.value("name", std::string{}));
    if (doc.contains("labels")) return with_labels(g, doc);
    return g;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("malformed graph JSON: ") + err.what());
  } catch (const DomainError& err) {
    throw ParseError(err.what());
  }
}

std::filesystem::path sidecar_path(const std::filesystem::path& graph_path) {
  return graph_path.string() + ".labels.json";
}

Graph load_graph(const std::string& path, const std::string& labels_path) {
  std::string text;
  std::string default_name;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    default_name = "stdin";
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
    default_name = std::filesystem::path(path).stem().string();
  }

  const auto body = trim(text);
  Graph g;
  if (!body.empty() && body.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& err) {
      throw ParseError(std::string("invalid JSON: ") + err.what());
    }
    if (!doc.contains("name")) doc["name"] = default_name;
    g = from_json(doc);
  } else {
    std::istringstream in(text);
    g = read_edge_list(in, default_name);
  }

  std::filesystem::path sidecar;
  if (!labels_path.empty()) {
    sidecar = labels_path;
  } else if (path != "-" && std::filesystem::exists(sidecar_path(path))) {
    sidecar = sidecar_path(path);
  }
  if (!sidecar.empty()) {
    std::ifstream in(sidecar);
    if (!in) throw ParseError("cannot open label sidecar '" + sidecar.string() + "'");
    try {
      g = with_labels(g, nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& err) {
      throw ParseError(std::string("invalid label sidecar: ") + err.what());
    }
  }
  return g;
}

nlohmann::json to_json(const VertexSet& s) { return s.to_vector(); }

}  // namespace forcelab::io
