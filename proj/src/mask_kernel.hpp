#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "forcelab/graph.hpp"

namespace forcelab::detail {

inline constexpr std::size_t kMaskLimit = 64;

// Graph with n <= 64 as neighbour bitmasks; the inner kernel of the exhaustive
// searches. Vertex v is bit v.
class MaskGraph {
 public:
  explicit MaskGraph(const Graph& g);

  std::size_t order() const noexcept { return nbr_.size(); }
  std::uint64_t all() const noexcept { return all_; }
  std::uint64_t neighbors(Vertex v) const noexcept { return nbr_[v]; }

  // Sweeps blue vertices with exactly one white neighbour until no change.
  std::uint64_t closure(std::uint64_t blue) const noexcept {
    std::uint64_t active = blue;
    while (true) {
      std::uint64_t grown = blue;
      for (std::uint64_t scan = active; scan != 0; scan &= scan - 1) {
        const int u = std::countr_zero(scan);
        const std::uint64_t white = nbr_[static_cast<std::size_t>(u)] & ~grown;
        if (white != 0 && (white & (white - 1)) == 0) grown |= white;
      }
      if (grown == blue) return blue;
      // Only vertices next to a newly blue vertex (or newly blue themselves)
      // can gain a unique white neighbour.
      const std::uint64_t fresh = grown & ~blue;
      std::uint64_t touched = fresh;
      for (std::uint64_t scan = fresh; scan != 0; scan &= scan - 1)
        touched |= nbr_[static_cast<std::size_t>(std::countr_zero(scan))];
      blue = grown;
      active = touched & blue;
    }
  }

  bool forces(std::uint64_t blue) const noexcept { return closure(blue) == all_; }

  // |N(u) ∩ s| != 1 for every u outside s.
  bool is_fort(std::uint64_t s) const noexcept {
    for (std::uint64_t out = all_ & ~s; out != 0; out &= out - 1) {
      const std::uint64_t hit = nbr_[static_cast<std::size_t>(std::countr_zero(out))] & s;
      if (hit != 0 && (hit & (hit - 1)) == 0) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> nbr_;
  std::uint64_t all_ = 0;
};

std::uint64_t to_mask(const VertexSet& s);
VertexSet from_mask(std::uint64_t mask, std::size_t universe);

// Lexicographic k-combinations of {0..n-1}, ranked 0..C(n,k)-1.
std::uint64_t binomial(std::size_t n, std::size_t k);
std::vector<Vertex> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank);
// Advances to the next combination in lex order; false after the last one.
bool next_combination(std::vector<Vertex>& combo, std::size_t n);

}  // namespace forcelab::detail
