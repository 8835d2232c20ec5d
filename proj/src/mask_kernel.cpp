#include "mask_kernel.hpp"

#include <limits>

#include "forcelab/errors.hpp"

namespace forcelab::detail {

MaskGraph::MaskGraph(const Graph& g) : nbr_(g.order(), 0) {
  if (g.order() > kMaskLimit) {
    throw UnsupportedError("bitmask kernel supports at most 64 vertices");
  }
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) nbr_[v] |= std::uint64_t{1} << w;
  all_ = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
}

std::uint64_t to_mask(const VertexSet& s) {
  if (s.universe() > kMaskLimit) throw UnsupportedError("set too large for a bitmask");
  return s.words().empty() ? 0 : s.words()[0];
}

VertexSet from_mask(std::uint64_t mask, std::size_t universe) {
  VertexSet out(universe);
  for (; mask != 0; mask &= mask - 1) out.insert(static_cast<Vertex>(std::countr_zero(mask)));
  return out;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // acc * (n-k+i) is divisible by i; saturate instead of overflowing.
    const std::uint64_t factor = n - k + i;
    if (acc > kMax / factor) return kMax;
    acc = acc * factor / i;
  }
  return acc;
}

std::vector<Vertex> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
  std::vector<Vertex> combo;
  combo.reserve(k);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    while (true) {
      // Combinations starting with `next` at this slot.
      const std::uint64_t block = binomial(n - next - 1, k - slot - 1);
      if (rank < block) break;
      rank -= block;
      ++next;
    }
    combo.push_back(static_cast<Vertex>(next));
    ++next;
  }
  return combo;
}

bool next_combination(std::vector<Vertex>& combo, std::size_t n) {
  const std::size_t k = combo.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace forcelab::detail
