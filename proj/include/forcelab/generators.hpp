#pragma once

#include <string>

#include "forcelab/graph.hpp"

namespace forcelab {

// Py(m,r,s): center c, hubs u_1..u_m, and for each station i, r layers of s
// spoke vertices v_{i,j,1..s} forming a path from u_i to u_{i+1} (indices mod m).
struct PeonyParams {
  int m = 3;
  int r = 2;
  int s = 1;

  // Throws ParameterError naming the violated bound (m >= 3, r >= 2, s >= 1).
  void validate() const;
  std::size_t vertex_count() const;
  std::string name() const;
};

// Wb(m,r): C_m □ P_r on v_{i,j} plus a pendant p_i on every v_{i,1}.
struct WebParams {
  int m = 3;
  int r = 1;

  void validate() const;
  std::size_t vertex_count() const;
  std::string name() const;
};

// Vertex order: c, u_1..u_m, then v_{i,j,k} lexicographic in (i,j,k).
Graph make_peony(const PeonyParams& p);
// Vertex order: v_{i,j} lexicographic in (i,j), then p_1..p_m.
Graph make_web(const WebParams& p);
// Vertex order: (i,j) lexicographic, labelled Grid(i,j); same ids as the web grid.
Graph make_cycle_path_product(int m, int r);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);

// Index arithmetic for the canonical orders. All indices are 1-based;
// hub and pendant indices wrap modulo m.
namespace peony {
Vertex center();
Vertex hub(const PeonyParams& p, int i);
Vertex spoke(const PeonyParams& p, int i, int j, int k);
}  // namespace peony

namespace web {
Vertex grid(const WebParams& p, int i, int j);
Vertex pendant(const WebParams& p, int i);
}  // namespace web

// S_i = {u_i} ∪ {v_{i,j,k}}; requires 1 <= i <= m.
VertexSet station(const PeonyParams& p, int i);
// S_{i,j} = {v_{i,j,k}}_{k=1..s}; requires 1 <= i <= m, 1 <= j <= r.
VertexSet layer(const PeonyParams& p, int i, int j);

}  // namespace forcelab
