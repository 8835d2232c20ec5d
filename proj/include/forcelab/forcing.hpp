#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "forcelab/graph.hpp"

namespace forcelab {

// Least superset of `blue` closed under the color change rule: a blue vertex
// whose only white neighbour is w forces w. Worklist over white-neighbour
// counts, O(V + E).
VertexSet closure(const Graph& g, const VertexSet& blue);

bool is_zero_forcing_set(const Graph& g, const VertexSet& b);

struct Force {
  Vertex from;
  Vertex to;
  friend bool operator==(const Force&, const Force&) = default;
};

// Relaxed chronology: steps[k-1] holds the forces performed at time-step k.
struct Chronology {
  VertexSet initial;
  std::vector<std::vector<Force>> steps;

  std::size_t graph_size() const noexcept { return initial.universe(); }
  // E^[0..K]; expansion()[k] is the blue set after time-step k.
  std::vector<VertexSet> expansion() const;
  VertexSet final_blue() const;
};

enum class ForcePolicy {
  // Every forceable white vertex is forced at each step, by its lowest-id forcer.
  AllEager,
  // Every valid force at each step, one per white vertex (lowest-id forcer).
  MaxConcurrent,
  // One force per step: the lowest-id forcer with a unique white neighbour.
  Sequential,
};

Chronology run_chronology(const Graph& g, const VertexSet& blue,
                          ForcePolicy policy = ForcePolicy::AllEager);

// Each step performs a random nonempty subset of the currently valid forces
// (one per white vertex, forcer chosen at random among candidates).
Chronology run_random_chronology(const Graph& g, const VertexSet& blue, std::mt19937_64& rng);

struct ChronologyCheck {
  bool valid = true;
  std::optional<std::size_t> step;  // 1-based time-step of the first violation
  std::string message;

  explicit operator bool() const noexcept { return valid; }
};

// Checks every force against S(G, E^[k-1]), that no vertex is forced twice or
// forced while already blue, and that no vertex performs two forces.
// Forces are validated; completeness (E^[K] = V) is not required.
ChronologyCheck validate_chronology(const Graph& g, const Chronology& c);

struct ChainSet {
  std::vector<std::vector<Vertex>> chains;
};

// One chain per initial vertex, in increasing initial-vertex order. Throws
// DomainError when the forces are not chain-shaped (vertex forced twice, a
// forcer used twice, or an id out of range).
ChainSet chain_set(const Chronology& c);

// Vertices that perform no force.
VertexSet terminus(const Chronology& c);

struct RestrictedChronology {
  InducedSubgraph sub;
  // Chronology on sub.graph ids; its initial set is the set of initial
  // vertices of the forcing subpaths inside H.
  Chronology chronology;
};

// Keeps forces with both endpoints in H and seeds H with (B ∩ V(H)) plus every
// H-vertex forced from outside H. Throws PreconditionError unless c is a valid
// chronology whose final blue set is V(g).
RestrictedChronology restrict_chronology(const Graph& g, const VertexSet& h_vertices,
                                         const Chronology& c);

}  // namespace forcelab
