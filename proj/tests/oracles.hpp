#pragma once

// Naive reference computations for tests. Deliberately share nothing with the
// library kernels beyond Graph adjacency.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "forcelab/graph.hpp"

namespace oracle {

using forcelab::Graph;
using forcelab::Vertex;

// Repeats full sweeps of the color change rule until nothing changes.
inline std::vector<bool> closure(const Graph& g, std::vector<bool> blue) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (!blue[u]) continue;
      int whites = 0;
      Vertex last = 0;
      for (Vertex w : g.neighbors(u))
        if (!blue[w]) {
          ++whites;
          last = w;
        }
      if (whites == 1) {
        blue[last] = true;
        changed = true;
      }
    }
  }
  return blue;
}

inline std::vector<bool> from_bits(std::uint64_t bits, std::size_t n) {
  std::vector<bool> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = (bits >> v) & 1U;
  return out;
}

inline bool forces(const Graph& g, std::uint64_t bits) {
  const auto c = closure(g, from_bits(bits, g.order()));
  return std::all_of(c.begin(), c.end(), [](bool b) { return b; });
}

// Minimum zero forcing set size by scanning all 2^n subsets.
inline std::size_t zero_forcing_number(const Graph& g) {
  std::size_t best = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(s));
    if (size < best && forces(g, s)) best = size;
  }
  return best;
}

inline bool is_fort(const Graph& g, std::uint64_t s) {
  if (s == 0) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    if ((s >> u) & 1U) continue;
    int hits = 0;
    for (Vertex w : g.neighbors(u)) hits += static_cast<int>((s >> w) & 1U);
    if (hits == 1) return false;
  }
  return true;
}

// All inclusion-minimal forts as bitmasks, sorted numerically.
inline std::vector<std::uint64_t> minimal_forts(const Graph& g) {
  std::vector<std::uint64_t> forts;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.order()); ++s)
    if (is_fort(g, s)) forts.push_back(s);
  std::vector<std::uint64_t> minimal;
  for (auto f : forts) {
    bool has_smaller = false;
    for (auto h : forts)
      if (h != f && (h & ~f) == 0) has_smaller = true;
    if (!has_smaller) minimal.push_back(f);
  }
  return minimal;
}

// Isomorphism by trying every permutation (n <= 8).
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool ok = true;
    for (const auto& e : a.edges())
      if (!b.adjacent(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
