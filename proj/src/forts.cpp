#include "forcelab/forts.hpp"

#include <algorithm>
#include <omp.h>

#include "forcelab/errors.hpp"
#include "forcelab/forcing.hpp"
#include "mask_kernel.hpp"

namespace forcelab {

std::string to_string(FortKind kind) {
  switch (kind) {
    case FortKind::Type1: return "type1";
    case FortKind::Type2: return "type2";
    case FortKind::Type3: return "type3";
    case FortKind::Type4: return "type4";
    case FortKind::Extracted: return "extracted";
    case FortKind::Enumerated: return "enumerated";
  }
  return "unknown";
}

bool is_fort(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  if (s.empty()) throw DomainError("a fort must be nonempty");
  for (Vertex u = 0; u < g.order(); ++u) {
    if (s.contains(u)) continue;
    if (neighbors_in(g, u, s) == 1) return false;
  }
  return true;
}

namespace {

void check_range(int value, int lo, int hi, const std::string& what) {
  if (value < lo || value > hi) {
    throw DomainError(what + " = " + std::to_string(value) + " outside " + std::to_string(lo) +
                      ".." + std::to_string(hi));
  }
}

}  // namespace

Fort fort_type1(const PeonyParams& p, int i, int j1, int j2) {
  p.validate();
  check_range(i, 1, p.m, "station index i");
  check_range(j1, 1, p.r, "layer index j1");
  check_range(j2, 1, p.r, "layer index j2");
  if (j1 == j2) throw DomainError("type-1 fort needs two distinct layers");
  return {layer(p, i, j1) | layer(p, i, j2), FortKind::Type1, {i, j1, j2}};
}

Fort fort_type2(const PeonyParams& p, std::span<const int> j_choice) {
  p.validate();
  if (j_choice.size() != static_cast<std::size_t>(p.m)) {
    throw DomainError("type-2 fort needs " + std::to_string(p.m) + " layer choices, got " +
                      std::to_string(j_choice.size()));
  }
  VertexSet s(p.vertex_count());
  for (int i = 1; i <= p.m; ++i) {
    const int j = j_choice[static_cast<std::size_t>(i - 1)];
    check_range(j, 1, p.r, "layer choice for station " + std::to_string(i));
    s |= layer(p, i, j);
  }
  return {std::move(s), FortKind::Type2, {j_choice.begin(), j_choice.end()}};
}

Fort fort_type3(const PeonyParams& p, int i0, std::span<const int> j_choice) {
  p.validate();
  check_range(i0, 1, p.m, "omitted station i0");
  if (j_choice.size() != static_cast<std::size_t>(p.m - 1)) {
    throw DomainError("type-3 fort needs " + std::to_string(p.m - 1) + " layer choices, got " +
                      std::to_string(j_choice.size()));
  }
  VertexSet s(p.vertex_count());
  s.insert(peony::center());
  std::size_t next = 0;
  for (int i = 1; i <= p.m; ++i) {
    if (i == i0) continue;
    const int j = j_choice[next++];
    check_range(j, 1, p.r, "layer choice for station " + std::to_string(i));
    s |= layer(p, i, j);
  }
  std::vector<int> params{i0};
  params.insert(params.end(), j_choice.begin(), j_choice.end());
  return {std::move(s), FortKind::Type3, std::move(params)};
}

Fort fort_type4(const PeonyParams& p, const std::vector<std::vector<int>>& k_choice) {
  p.validate();
  if (k_choice.size() != static_cast<std::size_t>(p.m)) {
    throw DomainError("type-4 choice needs one row per station");
  }
  VertexSet s = VertexSet::full(p.vertex_count());
  s.erase(peony::center());
  std::vector<int> params;
  for (int i = 1; i <= p.m; ++i) {
    const auto& row = k_choice[static_cast<std::size_t>(i - 1)];
    if (row.size() != static_cast<std::size_t>(p.r)) {
      throw DomainError("type-4 choice row " + std::to_string(i) + " needs " +
                        std::to_string(p.r) + " entries");
    }
    for (int j = 1; j <= p.r; ++j) {
      const int k = row[static_cast<std::size_t>(j - 1)];
      check_range(k, 1, p.s, "position choice for layer (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
      s.erase(peony::spoke(p, i, j, k));
      params.push_back(k);
    }
  }
  return {std::move(s), FortKind::Type4, std::move(params)};
}

Fort extract_fort_from_failure(const Graph& g, const VertexSet& b) {
  const VertexSet closed = closure(g, b);
  if (closed.count() == g.order()) {
    throw PreconditionError("set is zero forcing; there is no stalled closure to extract from");
  }
  return {closed.complement(), FortKind::Extracted, {}};
}

namespace {

// Forts of exactly `size` vertices in lex order, optionally skipping supersets
// of `known` (masks of forts already proven minimal).
std::vector<std::uint64_t> scan_size_class(const detail::MaskGraph& mg, std::size_t size,
                                           const std::vector<std::uint64_t>& known,
                                           bool minimal_only, int threads) {
  const std::size_t n = mg.order();
  const std::uint64_t total = detail::binomial(n, size);
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint64_t>> found(chunks);

#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(chunks); ++chunk) {
    const std::uint64_t first = static_cast<std::uint64_t>(chunk) * kChunk;
    const std::uint64_t last = std::min(total, first + kChunk);
    auto combo = detail::unrank_combination(n, size, first);
    for (std::uint64_t rank = first; rank < last; ++rank) {
      std::uint64_t mask = 0;
      for (Vertex v : combo) mask |= std::uint64_t{1} << v;
      bool skip = false;
      if (minimal_only) {
        for (std::uint64_t f : known) {
          if ((f & ~mask) == 0) {
            skip = true;
            break;
          }
        }
      }
      if (!skip && mg.is_fort(mask)) found[static_cast<std::size_t>(chunk)].push_back(mask);
      detail::next_combination(combo, n);
    }
  }
  std::vector<std::uint64_t> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::vector<Fort> enumerate_impl(const Graph& g, std::size_t max_size, std::size_t cap,
                                 bool minimal_only, int threads) {
  if (g.order() > cap) {
    throw UnsupportedError("fort enumeration limited to " + std::to_string(cap) +
                           " vertices (graph has " + std::to_string(g.order()) + ")");
  }
  const detail::MaskGraph mg(g);
  std::vector<std::uint64_t> known;
  std::vector<Fort> out;
  for (std::size_t size = 1; size <= std::min(max_size, g.order()); ++size) {
    const auto forts = scan_size_class(mg, size, known, minimal_only, std::max(threads, 1));
    for (std::uint64_t f : forts) {
      out.push_back({detail::from_mask(f, g.order()), FortKind::Enumerated, {}});
    }
    // Same-size forts cannot contain one another, so the class is merged after the scan.
    known.insert(known.end(), forts.begin(), forts.end());
  }
  return out;
}

}  // namespace

std::vector<Fort> enumerate_minimal_forts(const Graph& g, std::size_t max_size, std::size_t cap,
                                          int threads) {
  return enumerate_impl(g, max_size, cap, true, threads);
}

std::vector<Fort> enumerate_minimal_forts_serial(const Graph& g, std::size_t max_size,
                                                 std::size_t cap) {
  if (g.order() > cap) {
    throw UnsupportedError("fort enumeration limited to " + std::to_string(cap) + " vertices");
  }
  // Plain subset loop over VertexSet and is_fort, independent of the mask kernel.
  std::vector<Fort> out;
  const std::size_t n = g.order();
  for (std::size_t size = 1; size <= std::min(max_size, n); ++size) {
    std::vector<Vertex> combo(size);
    for (std::size_t i = 0; i < size; ++i) combo[i] = static_cast<Vertex>(i);
    std::vector<Fort> this_size;
    do {
      VertexSet s(n, combo);
      const bool contains_known = std::any_of(out.begin(), out.end(), [&](const Fort& f) {
        return f.vertices.is_subset_of(s);
      });
      if (!contains_known && is_fort(g, s)) this_size.push_back({s, FortKind::Enumerated, {}});
    } while (detail::next_combination(combo, n));
    out.insert(out.end(), this_size.begin(), this_size.end());
  }
  return out;
}

std::vector<Fort> enumerate_forts(const Graph& g, std::size_t max_size, std::size_t cap,
                                  int threads) {
  return enumerate_impl(g, max_size, cap, false, threads);
}

bool hits_all(const VertexSet& b, std::span<const Fort> forts) {
  return std::all_of(forts.begin(), forts.end(),
                     [&](const Fort& f) { return b.intersects(f.vertices); });
}

bool verify_duality(const Graph& g, const VertexSet& b, std::span<const Fort> minimal_forts) {
  return is_zero_forcing_set(g, b) == hits_all(b, minimal_forts);
}

bool verify_duality(const Graph& g, const VertexSet& b, std::size_t cap) {
  const auto forts = enumerate_minimal_forts(g, g.order(), cap);
  return verify_duality(g, b, forts);
}

DualitySweep verify_duality_exhaustive(const Graph& g, std::size_t cap) {
  const auto forts = enumerate_minimal_forts(g, g.order(), cap);
  DualitySweep sweep;
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const VertexSet b = detail::from_mask(mask, g.order());
    ++sweep.subsets;
    if (!verify_duality(g, b, forts)) {
      ++sweep.disagreements;
      if (sweep.counterexamples.size() < 8) sweep.counterexamples.push_back(b);
    }
  }
  return sweep;
}

}  // namespace forcelab
