#pragma once

// Test-support generators; not part of the public API.

#include <random>
#include <string>
#include <vector>

#include "forcelab/forcing.hpp"
#include "forcelab/graph.hpp"

namespace forcelab::testing {

// Erdős–Rényi G(n, p).
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) edges.push_back({u, v});
  return Graph(n, edges, {}, "G(" + std::to_string(n) + "," + std::to_string(p).substr(0, 4) + ")");
}

inline Graph random_graph_between(std::size_t lo, std::size_t hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(lo, hi);
  std::uniform_real_distribution<double> density(0.15, 0.7);
  const std::size_t n = size(rng);
  return random_graph(n, density(rng), rng);
}

// Each vertex with probability p.
inline VertexSet random_subset(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (keep(rng)) s.insert(v);
  return s;
}

// A random subset grown by random white vertices until it forces.
inline VertexSet random_zero_forcing_set(const Graph& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density(0.0, 0.4);
  VertexSet b = random_subset(g.order(), density(rng), rng);
  while (true) {
    const VertexSet closed = closure(g, b);
    if (closed.count() == g.order()) return b;
    const auto white = closed.complement().to_vector();
    std::uniform_int_distribution<std::size_t> pick(0, white.size() - 1);
    b.insert(white[pick(rng)]);
  }
}

}  // namespace forcelab::testing
