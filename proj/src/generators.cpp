#include "forcelab/generators.hpp"

#include <vector>

#include "forcelab/errors.hpp"

namespace forcelab {

namespace {

int wrap(int i, int m) { return ((i - 1) % m + m) % m + 1; }

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

void check_index(int value, int lo, int hi, const char* name) {
  if (value < lo || value > hi) {
    throw DomainError(std::string(name) + " = " + std::to_string(value) + " outside " +
                      std::to_string(lo) + ".." + std::to_string(hi));
  }
}

}  // namespace

void PeonyParams::validate() const {
  require(m >= 3, "peony parameter m = " + std::to_string(m) + " violates m >= 3");
  require(r >= 2, "peony parameter r = " + std::to_string(r) + " violates r >= 2");
  require(s >= 1, "peony parameter s = " + std::to_string(s) + " violates s >= 1");
}

std::size_t PeonyParams::vertex_count() const {
  return 1 + static_cast<std::size_t>(m) + static_cast<std::size_t>(m) * r * s;
}

std::string PeonyParams::name() const {
  return "Py(" + std::to_string(m) + "," + std::to_string(r) + "," + std::to_string(s) + ")";
}

void WebParams::validate() const {
  require(m >= 3, "web parameter m = " + std::to_string(m) + " violates m >= 3");
  require(r >= 1, "web parameter r = " + std::to_string(r) + " violates r >= 1");
}

std::size_t WebParams::vertex_count() const {
  return static_cast<std::size_t>(m) * r + static_cast<std::size_t>(m);
}

std::string WebParams::name() const {
  return "Wb(" + std::to_string(m) + "," + std::to_string(r) + ")";
}

namespace peony {

Vertex center() { return 0; }

Vertex hub(const PeonyParams& p, int i) { return static_cast<Vertex>(wrap(i, p.m)); }

Vertex spoke(const PeonyParams& p, int i, int j, int k) {
  check_index(j, 1, p.r, "layer index j");
  check_index(k, 1, p.s, "position index k");
  const int ii = wrap(i, p.m);
  return static_cast<Vertex>(1 + p.m + ((ii - 1) * p.r + (j - 1)) * p.s + (k - 1));
}

}  // namespace peony

namespace web {

Vertex grid(const WebParams& p, int i, int j) {
  check_index(j, 1, p.r, "radial index j");
  return static_cast<Vertex>((wrap(i, p.m) - 1) * p.r + (j - 1));
}

Vertex pendant(const WebParams& p, int i) {
  return static_cast<Vertex>(p.m * p.r + wrap(i, p.m) - 1);
}

}  // namespace web

Graph make_peony(const PeonyParams& p) {
  p.validate();
  const std::size_t n = p.vertex_count();
  std::vector<VertexLabel> labels;
  labels.reserve(n);
  labels.push_back(VertexLabel::center());
  for (int i = 1; i <= p.m; ++i) labels.push_back(VertexLabel::hub(i));
  for (int i = 1; i <= p.m; ++i)
    for (int j = 1; j <= p.r; ++j)
      for (int k = 1; k <= p.s; ++k) labels.push_back(VertexLabel::spoke(i, j, k));

  std::vector<Edge> edges;
  for (int i = 1; i <= p.m; ++i) {
    edges.push_back({peony::center(), peony::hub(p, i)});
    for (int j = 1; j <= p.r; ++j) {
      edges.push_back({peony::hub(p, i), peony::spoke(p, i, j, 1)});
      // u_i is joined to v_{i-1,j,s}; equivalently the layer S_{i,j} ends at u_{i+1}.
      edges.push_back({peony::hub(p, i), peony::spoke(p, i - 1, j, p.s)});
      for (int k = 1; k < p.s; ++k)
        edges.push_back({peony::spoke(p, i, j, k), peony::spoke(p, i, j, k + 1)});
    }
  }
  return Graph(n, edges, std::move(labels), p.name());
}

namespace {

void append_grid(int m, int r, std::vector<Edge>& edges, std::vector<VertexLabel>& labels) {
  const WebParams shape{m, r};
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= r; ++j) labels.push_back(VertexLabel::grid(i, j));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= r; ++j) {
      if (j < r) edges.push_back({web::grid(shape, i, j), web::grid(shape, i, j + 1)});
      edges.push_back({web::grid(shape, i, j), web::grid(shape, i + 1, j)});
    }
  }
}

}  // namespace

Graph make_web(const WebParams& p) {
  p.validate();
  std::vector<Edge> edges;
  std::vector<VertexLabel> labels;
  append_grid(p.m, p.r, edges, labels);
  for (int i = 1; i <= p.m; ++i) {
    labels.push_back(VertexLabel::pendant(i));
    edges.push_back({web::pendant(p, i), web::grid(p, i, 1)});
  }
  return Graph(p.vertex_count(), edges, std::move(labels), p.name());
}

Graph make_cycle_path_product(int m, int r) {
  require(m >= 3, "prism parameter m = " + std::to_string(m) + " violates m >= 3");
  require(r >= 1, "prism parameter r = " + std::to_string(r) + " violates r >= 1");
  std::vector<Edge> edges;
  std::vector<VertexLabel> labels;
  append_grid(m, r, edges, labels);
  return Graph(static_cast<std::size_t>(m) * r, edges, std::move(labels),
               "C" + std::to_string(m) + "xP" + std::to_string(r));
}

Graph make_path(int n) {
  require(n >= 1, "path parameter n = " + std::to_string(n) + " violates n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + 1)});
  return Graph(static_cast<std::size_t>(n), edges, {}, "P" + std::to_string(n));
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle parameter n = " + std::to_string(n) + " violates n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n)});
  return Graph(static_cast<std::size_t>(n), edges, {}, "C" + std::to_string(n));
}

Graph make_complete(int n) {
  require(n >= 1, "complete graph parameter n = " + std::to_string(n) + " violates n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  return Graph(static_cast<std::size_t>(n), edges, {}, "K" + std::to_string(n));
}

VertexSet station(const PeonyParams& p, int i) {
  p.validate();
  check_index(i, 1, p.m, "station index i");
  VertexSet out(p.vertex_count());
  out.insert(peony::hub(p, i));
  for (int j = 1; j <= p.r; ++j)
    for (int k = 1; k <= p.s; ++k) out.insert(peony::spoke(p, i, j, k));
  return out;
}

VertexSet layer(const PeonyParams& p, int i, int j) {
  p.validate();
  check_index(i, 1, p.m, "station index i");
  check_index(j, 1, p.r, "layer index j");
  VertexSet out(p.vertex_count());
  for (int k = 1; k <= p.s; ++k) out.insert(peony::spoke(p, i, j, k));
  return out;
}

}  // namespace forcelab
