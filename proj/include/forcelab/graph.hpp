#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forcelab/vertex_set.hpp"

namespace forcelab {

// Semantic role of a vertex in a generated family: c, u_i, v_{i,j,k}, p_i, v_{i,j}.
// Indices are 1-based, matching the usual names of the families.
struct VertexLabel {
  enum class Kind { Center, Hub, Spoke, Pendant, Grid, Plain };

  Kind kind = Kind::Plain;
  int i = 0;
  int j = 0;
  int k = 0;

  static VertexLabel center() { return {Kind::Center}; }
  static VertexLabel hub(int i) { return {Kind::Hub, i}; }
  static VertexLabel spoke(int i, int j, int k) { return {Kind::Spoke, i, j, k}; }
  static VertexLabel pendant(int i) { return {Kind::Pendant, i}; }
  static VertexLabel grid(int i, int j) { return {Kind::Grid, i, j}; }
  static VertexLabel plain(int index) { return {Kind::Plain, index}; }

  // "c", "u3", "v1_2_3", "p4", "v2_1", or the plain index as decimal.
  std::string to_string() const;
  static VertexLabel parse(std::string_view text);

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency (CSR).
class Graph {
 public:
  Graph() = default;
  // Throws DomainError on self-loops, duplicate edges, out-of-range endpoints,
  // or a label vector whose length is neither 0 nor n.
  Graph(std::size_t n, std::span<const Edge> edges, std::vector<VertexLabel> labels = {},
        std::string name = {});

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  // Plain(v) when the graph carries no labels.
  VertexLabel label(Vertex v) const;
  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
  std::optional<Vertex> find(const VertexLabel& label) const;

  const std::string& name() const noexcept { return name_; }

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet all_vertices() const { return VertexSet::full(order()); }

  void check_vertex(Vertex v) const;
  void check_set(const VertexSet& s) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<VertexLabel> labels_;
  std::string name_;
};

std::size_t degree(const Graph& g, Vertex v);

// |N(v) ∩ s|
std::size_t neighbors_in(const Graph& g, Vertex v, const VertexSet& s);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;                  // new id -> old id
  std::vector<std::optional<Vertex>> from_parent;  // old id -> new id

  VertexSet lift(const VertexSet& sub) const;     // subgraph ids -> parent ids
  VertexSet project(const VertexSet& parent) const;  // parent ids -> subgraph ids (drops outsiders)
};

// New ids follow increasing old id. Labels and name carry over.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

inline constexpr std::size_t kDefaultIsomorphismCutoff = 12;

// Backtracking bijection search with degree pruning; throws UnsupportedError above cutoff.
bool is_isomorphic_small(const Graph& a, const Graph& b,
                         std::size_t cutoff = kDefaultIsomorphismCutoff);

// True iff map (a-ids -> b-ids) is a bijection preserving adjacency and non-adjacency.
bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> map);

}  // namespace forcelab
