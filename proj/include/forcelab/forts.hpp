#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "forcelab/generators.hpp"
#include "forcelab/graph.hpp"

namespace forcelab {

enum class FortKind { Type1, Type2, Type3, Type4, Extracted, Enumerated };

std::string to_string(FortKind kind);

// A nonempty set S with |N(u) ∩ S| != 1 for every u outside S.
struct Fort {
  VertexSet vertices;
  FortKind kind = FortKind::Extracted;
  // Generating indices, flattened: type 1 (i, j1, j2); type 2 (j_1..j_m);
  // type 3 (i0, j_i for i != i0); type 4 (k_{1,1}, k_{1,2}, ..., k_{m,r}).
  std::vector<int> params;
};

// Throws DomainError on an empty set.
bool is_fort(const Graph& g, const VertexSet& s);

// S_{i,j1} ∪ S_{i,j2}.
Fort fort_type1(const PeonyParams& p, int i, int j1, int j2);
// ∪_i S_{i, j_choice[i-1]}; j_choice has m entries in 1..r.
Fort fort_type2(const PeonyParams& p, std::span<const int> j_choice);
// {c} ∪ ∪_{i != i0} S_{i,j_i}; j_choice lists j_i for the other stations in
// increasing i (length m-1).
Fort fort_type3(const PeonyParams& p, int i0, std::span<const int> j_choice);
// V minus ({c} ∪ {v_{i,j,k_choice[i-1][j-1]}}); k_choice is m x r with entries in 1..s.
Fort fort_type4(const PeonyParams& p, const std::vector<std::vector<int>>& k_choice);

// V \ closure(g, b). Throws PreconditionError when b is already forcing.
Fort extract_fort_from_failure(const Graph& g, const VertexSet& b);

inline constexpr std::size_t kDefaultFortEnumerationCap = 20;

// All inclusion-minimal forts with at most max_size vertices, ordered by size
// then lexicographically. Throws UnsupportedError when g.order() > cap.
// Size classes are scanned in parallel over `threads` OpenMP workers.
std::vector<Fort> enumerate_minimal_forts(const Graph& g, std::size_t max_size,
                                          std::size_t cap = kDefaultFortEnumerationCap,
                                          int threads = 1);
// Single-threaded reference of the same enumeration.
std::vector<Fort> enumerate_minimal_forts_serial(const Graph& g, std::size_t max_size,
                                                 std::size_t cap = kDefaultFortEnumerationCap);
// Every fort (minimal or not) with at most max_size vertices, same order.
std::vector<Fort> enumerate_forts(const Graph& g, std::size_t max_size,
                                  std::size_t cap = kDefaultFortEnumerationCap, int threads = 1);

bool hits_all(const VertexSet& b, std::span<const Fort> forts);

// Computes is_zero_forcing_set(g, b) and "b meets every minimal fort" and
// returns whether the two agree.
bool verify_duality(const Graph& g, const VertexSet& b,
                    std::size_t cap = kDefaultFortEnumerationCap);
bool verify_duality(const Graph& g, const VertexSet& b, std::span<const Fort> minimal_forts);

struct DualitySweep {
  std::size_t subsets = 0;
  std::size_t disagreements = 0;
  std::vector<VertexSet> counterexamples;  // capped at a handful
};

// Checks every subset of V(g).
DualitySweep verify_duality_exhaustive(const Graph& g,
                                       std::size_t cap = kDefaultFortEnumerationCap);

}  // namespace forcelab
