#include "forcelab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "forcelab/errors.hpp"

namespace forcelab {

namespace {

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

std::vector<std::string_view> split_underscores(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find('_', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::string VertexLabel::to_string() const {
  switch (kind) {
    case Kind::Center:
      return "c";
    case Kind::Hub:
      return "u" + std::to_string(i);
    case Kind::Spoke:
      return "v" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
    case Kind::Pendant:
      return "p" + std::to_string(i);
    case Kind::Grid:
      return "v" + std::to_string(i) + "_" + std::to_string(j);
    case Kind::Plain:
      return std::to_string(i);
  }
  return {};
}

VertexLabel VertexLabel::parse(std::string_view text) {
  auto fail = [&]() -> VertexLabel {
    throw ParseError("unrecognised vertex label '" + std::string(text) + "'");
  };
  if (text == "c") return center();
  if (text.empty()) return fail();
  int a = 0;
  if (parse_int(text, a)) return plain(a);
  const char head = text.front();
  const auto rest = text.substr(1);
  if (head == 'u' || head == 'p') {
    if (!parse_int(rest, a)) return fail();
    return head == 'u' ? hub(a) : pendant(a);
  }
  if (head == 'v') {
    const auto parts = split_underscores(rest);
    int b = 0, c = 0;
    if (parts.size() == 2 && parse_int(parts[0], a) && parse_int(parts[1], b)) return grid(a, b);
    if (parts.size() == 3 && parse_int(parts[0], a) && parse_int(parts[1], b) &&
        parse_int(parts[2], c))
      return spoke(a, b, c);
  }
  return fail();
}

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::vector<VertexLabel> labels,
             std::string name)
    : labels_(std::move(labels)), name_(std::move(name)) {
  if (!labels_.empty() && labels_.size() != n) {
    throw DomainError("label count " + std::to_string(labels_.size()) +
                      " does not match vertex count " + std::to_string(n));
  }
  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges) {
    targets_[fill[e.u]++] = e.v;
    targets_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw DomainError("duplicate edge (" + std::to_string(v) + "," + std::to_string(*dup) +
                        ")");
    }
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for graph of order " +
                      std::to_string(order()));
  }
}

void Graph::check_set(const VertexSet& s) const {
  if (s.universe() != order()) {
    throw DomainError("vertex set universe " + std::to_string(s.universe()) +
                      " does not match graph order " + std::to_string(order()));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  check_vertex(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

VertexLabel Graph::label(Vertex v) const {
  check_vertex(v);
  return labels_.empty() ? VertexLabel::plain(static_cast<int>(v)) : labels_[v];
}

std::optional<Vertex> Graph::find(const VertexLabel& label) const {
  if (labels_.empty()) {
    if (label.kind == VertexLabel::Kind::Plain && label.i >= 0 &&
        static_cast<std::size_t>(label.i) < order())
      return static_cast<Vertex>(label.i);
    return std::nullopt;
  }
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

std::size_t degree(const Graph& g, Vertex v) { return g.neighbors(v).size(); }

std::size_t neighbors_in(const Graph& g, Vertex v, const VertexSet& s) {
  g.check_set(s);
  std::size_t c = 0;
  for (Vertex w : g.neighbors(v))
    if (s.contains(w)) ++c;
  return c;
}

VertexSet InducedSubgraph::lift(const VertexSet& sub) const {
  if (sub.universe() != to_parent.size()) {
    throw DomainError("subgraph vertex set has the wrong universe");
  }
  VertexSet out(from_parent.size());
  sub.for_each([&](Vertex v) { out.insert(to_parent[v]); });
  return out;
}

VertexSet InducedSubgraph::project(const VertexSet& parent) const {
  if (parent.universe() != from_parent.size()) {
    throw DomainError("parent vertex set has the wrong universe");
  }
  VertexSet out(to_parent.size());
  parent.for_each([&](Vertex v) {
    if (from_parent[v]) out.insert(*from_parent[v]);
  });
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  InducedSubgraph out;
  out.to_parent = s.to_vector();
  out.from_parent.assign(g.order(), std::nullopt);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    out.from_parent[out.to_parent[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  std::vector<VertexLabel> labels;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    const Vertex old = out.to_parent[i];
    if (g.has_labels()) labels.push_back(g.label(old));
    for (Vertex w : g.neighbors(old)) {
      if (w > old && out.from_parent[w]) edges.push_back({static_cast<Vertex>(i), *out.from_parent[w]});
    }
  }
  out.graph = Graph(out.to_parent.size(), edges, std::move(labels), g.name());
  return out;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b)
      : a_(a), b_(b), map_(a.order(), kUnset), used_(b.order(), false) {
    // Place high-degree vertices first; they constrain the search most.
    order_.resize(a.order());
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex x, Vertex y) { return degree(a, x) > degree(a, y); });
  }

  bool run() { return place(0); }

 private:
  static constexpr Vertex kUnset = ~Vertex{0};

  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex x = order_[depth];
    for (Vertex y = 0; y < b_.order(); ++y) {
      if (used_[y] || degree(b_, y) != degree(a_, x)) continue;
      if (!consistent(x, y)) continue;
      map_[x] = y;
      used_[y] = true;
      if (place(depth + 1)) return true;
      used_[y] = false;
      map_[x] = kUnset;
    }
    return false;
  }

  bool consistent(Vertex x, Vertex y) const {
    for (Vertex z = 0; z < a_.order(); ++z) {
      if (map_[z] == kUnset) continue;
      if (a_.adjacent(x, z) != b_.adjacent(y, map_[z])) return false;
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = degree(g, v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool is_isomorphic_small(const Graph& a, const Graph& b, std::size_t cutoff) {
  if (a.order() > cutoff || b.order() > cutoff) {
    throw UnsupportedError("isomorphism test limited to " + std::to_string(cutoff) +
                           " vertices");
  }
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return IsomorphismSearch(a, b).run();
}

bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map) {
  if (a.order() != b.order() || map.size() != a.order() || a.size() != b.size()) return false;
  std::vector<bool> hit(b.order(), false);
  for (Vertex y : map) {
    if (y >= b.order() || hit[y]) return false;
    hit[y] = true;
  }
  for (const auto& e : a.edges())
    if (!b.adjacent(map[e.u], map[e.v])) return false;
  return true;
}

}  // namespace forcelab
