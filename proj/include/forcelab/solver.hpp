#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forcelab/forts.hpp"
#include "forcelab/graph.hpp"

namespace forcelab {

enum class Algorithm { Exhaustive, FortBB };

std::string to_string(Algorithm a);

struct SolveStats {
  std::uint64_t nodes = 0;     // subsets examined or search-tree nodes
  std::uint64_t closures = 0;  // forcing closures computed
  double wall_ms = 0.0;
};

struct SolveReport {
  std::size_t z = 0;
  VertexSet witness;
  // Fort collection whose minimum hitting set certifies z (fortbb only).
  std::vector<Fort> lower_bound_forts;
  Algorithm algorithm = Algorithm::Exhaustive;
  SolveStats stats;
  // False when fortbb was interrupted; z is then the best known upper bound.
  bool complete = true;
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
};

inline constexpr std::size_t kDefaultExhaustiveCap = 30;
inline constexpr std::size_t kDefaultPathCoverCap = 15;
inline constexpr std::size_t kDefaultEnumerationCap = 16;

struct SolveOptions {
  std::size_t cap = kDefaultExhaustiveCap;
  int threads = 1;
  std::optional<std::chrono::milliseconds> time_limit;
  std::uint64_t node_limit = 0;  // 0 = unlimited
};

// Sizes 0,1,2,... and lex order within a size; the witness is the lex-first
// forcing set of minimum size. The scan over each size class is split across
// OpenMP workers; the result does not depend on the worker count.
// Throws UnsupportedError when g.order() > options.cap (max 64).
SolveReport solve_exhaustive(const Graph& g, const SolveOptions& options = {});

// Single-threaded reference using the general closure kernel.
SolveReport solve_exhaustive_serial(const Graph& g, std::size_t cap = kDefaultExhaustiveCap);

// Lazy fort generation: search for a hitting set of the known forts with at
// most k vertices; a hitting set that fails to force yields a new fort
// disjoint from it. k grows until a forcing hitting set appears.
SolveReport solve_fortbb(const Graph& g, const SolveOptions& options = {});

SolveReport solve(const Graph& g, Algorithm algorithm, const SolveOptions& options = {});

// Greedy packing of pairwise-disjoint forts (smallest first). Each needs its
// own vertex in any zero forcing set, so this never exceeds Z(g).
std::size_t lower_bound_disjoint_forts(const Graph& g, std::span<const Fort> forts);

struct PathCover {
  std::size_t count = 0;
  std::vector<std::vector<Vertex>> paths;  // each in path order
};

// Exact minimum partition of V(g) into induced paths; subset DP.
PathCover path_cover_number(const Graph& g, std::size_t cap = kDefaultPathCoverCap);

// All minimum zero forcing sets in lex order.
std::vector<VertexSet> min_zfs_enumerate(const Graph& g,
                                         std::size_t cap = kDefaultEnumerationCap,
                                         int threads = 1);

}  // namespace forcelab
