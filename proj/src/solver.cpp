#include "forcelab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <omp.h>

#include "forcelab/errors.hpp"
#include "forcelab/forcing.hpp"
#include "mask_kernel.hpp"

namespace forcelab {

std::string to_string(Algorithm a) {
  return a == Algorithm::Exhaustive ? "exhaustive" : "fortbb";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_exhaustive_cap(const Graph& g, std::size_t cap) {
  const std::size_t limit = std::min(cap, detail::kMaskLimit);
  if (g.order() > limit) {
    throw UnsupportedError("exhaustive search limited to " + std::to_string(limit) +
                           " vertices (graph has " + std::to_string(g.order()) +
                           "); use the fortbb algorithm or raise the cap");
  }
}

std::uint64_t mask_of(const std::vector<Vertex>& combo) {
  std::uint64_t m = 0;
  for (Vertex v : combo) m |= std::uint64_t{1} << v;
  return m;
}

constexpr std::uint64_t kNoRank = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kChunk = 2048;

// Lowest lex rank of a forcing k-subset, or kNoRank.
std::uint64_t first_forcing_rank(const detail::MaskGraph& mg, std::size_t k, int threads,
                                 SolveStats& stats) {
  const std::size_t n = mg.order();
  const std::uint64_t total = detail::binomial(n, k);
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::atomic<std::uint64_t> best{kNoRank};
  std::uint64_t examined = 0;

#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1) \
    reduction(+ : examined)
  for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(chunks); ++chunk) {
    const std::uint64_t first = static_cast<std::uint64_t>(chunk) * kChunk;
    if (first >= best.load(std::memory_order_relaxed)) continue;
    const std::uint64_t last = std::min(total, first + kChunk);
    auto combo = detail::unrank_combination(n, k, first);
    for (std::uint64_t rank = first; rank < last; ++rank) {
      ++examined;
      if (mg.forces(mask_of(combo))) {
        std::uint64_t seen = best.load();
        while (rank < seen && !best.compare_exchange_weak(seen, rank)) {
        }
        break;
      }
      detail::next_combination(combo, n);
    }
  }
  stats.nodes += examined;
  stats.closures += examined;
  return best.load();
}

}  // namespace

SolveReport solve_exhaustive(const Graph& g, const SolveOptions& options) {
  check_exhaustive_cap(g, options.cap);
  const auto start = Clock::now();
  const detail::MaskGraph mg(g);
  const int threads = std::max(options.threads, 1);
  SolveReport report;
  report.algorithm = Algorithm::Exhaustive;
  for (std::size_t k = 0; k <= g.order(); ++k) {
    const std::uint64_t rank = first_forcing_rank(mg, k, threads, report.stats);
    if (rank == kNoRank) continue;
    const auto combo = detail::unrank_combination(g.order(), k, rank);
    report.z = k;
    report.witness = VertexSet(g.order(), combo);
    break;
  }
  report.lower_bound = report.upper_bound = report.z;
  report.stats.wall_ms = elapsed_ms(start);
  return report;
}

SolveReport solve_exhaustive_serial(const Graph& g, std::size_t cap) {
  check_exhaustive_cap(g, cap);
  const auto start = Clock::now();
  SolveReport report;
  report.algorithm = Algorithm::Exhaustive;
  const std::size_t n = g.order();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Vertex> combo(k);
    std::iota(combo.begin(), combo.end(), Vertex{0});
    do {
      ++report.stats.nodes;
      ++report.stats.closures;
      VertexSet b(n, combo);
      if (is_zero_forcing_set(g, b)) {
        report.z = k;
        report.witness = std::move(b);
        report.lower_bound = report.upper_bound = k;
        report.stats.wall_ms = elapsed_ms(start);
        return report;
      }
    } while (detail::next_combination(combo, n));
  }
  report.stats.wall_ms = elapsed_ms(start);
  return report;  // unreachable for n >= 0: V(g) always forces
}

namespace {

// Forcing oracle over word-packed sets: bitmask kernel up to 64 vertices,
// the general worklist closure beyond.
class Propagator {
 public:
  explicit Propagator(const Graph& g) : g_(g) {
    if (g.order() <= detail::kMaskLimit) mask_.emplace(g);
  }

  VertexSet closure_of(const VertexSet& b) const {
    if (mask_) return detail::from_mask(mask_->closure(detail::to_mask(b)), g_.order());
    return closure(g_, b);
  }

  bool forces(const VertexSet& b) const {
    if (mask_) return mask_->forces(detail::to_mask(b));
    return is_zero_forcing_set(g_, b);
  }

 private:
  const Graph& g_;
  std::optional<detail::MaskGraph> mask_;
};

class FortSearch {
 public:
  FortSearch(const Graph& g, const SolveOptions& options)
      : g_(g), n_(g.order()), prop_(g), options_(options), start_(Clock::now()),
        chosen_(n_), forbidden_(n_), forts_containing_(n_) {}

  SolveReport run() {
    SolveReport report;
    report.algorithm = Algorithm::FortBB;
    if (n_ == 0) {
      report.witness = VertexSet(0);
      return finish(report);
    }

    const VertexSet greedy = greedy_forcing_set();
    seed_forts();
    std::size_t k = std::max<std::size_t>(1, pack(all_indices()));
    while (true) {
      if (k >= greedy.count()) {
        // No smaller hitting set forces, so the greedy set is optimal.
        report.z = greedy.count();
        report.witness = greedy;
        break;
      }
      budget_ = k;
      if (search()) {
        report.z = k;
        report.witness = chosen_;
        break;
      }
      if (interrupted_) {
        report.complete = false;
        report.z = greedy.count();
        report.witness = greedy;
        report.lower_bound = k;
        report.upper_bound = greedy.count();
        return finish(report);
      }
      ++k;
    }
    return finish(report);
  }

 private:
  SolveReport finish(SolveReport& report) {
    if (report.complete) report.lower_bound = report.upper_bound = report.z;
    for (const auto& f : forts_) report.lower_bound_forts.push_back({f, FortKind::Extracted, {}});
    report.stats = stats_;
    report.stats.wall_ms = elapsed_ms(start_);
    return report;
  }

  // Start from V and drop vertices (highest id first) while the rest still forces.
  VertexSet greedy_forcing_set() {
    VertexSet b = VertexSet::full(n_);
    for (Vertex v = static_cast<Vertex>(n_); v-- > 0;) {
      b.erase(v);
      ++stats_.closures;
      if (!prop_.forces(b)) b.insert(v);
    }
    return b;
  }

  // Grow b to a maximal closed non-forcing set; its complement is a minimal
  // fort disjoint from b. Scans vertices from `offset` cyclically.
  VertexSet stall_fort(const VertexSet& b, std::size_t offset) {
    VertexSet closed = prop_.closure_of(b);
    ++stats_.closures;
    for (std::size_t t = 0; t < n_; ++t) {
      const auto v = static_cast<Vertex>((offset + t) % n_);
      if (closed.contains(v)) continue;
      VertexSet trial = closed;
      trial.insert(v);
      trial = prop_.closure_of(trial);
      ++stats_.closures;
      if (trial.count() != n_) closed = std::move(trial);
    }
    return closed.complement();
  }

  bool add_fort(VertexSet f) {
    if (std::find(forts_.begin(), forts_.end(), f) != forts_.end()) return false;
    const auto index = static_cast<std::uint32_t>(forts_.size());
    std::uint32_t hits = 0;
    f.for_each([&](Vertex v) {
      forts_containing_[v].push_back(index);
      if (chosen_.contains(v)) ++hits;
    });
    forts_.push_back(std::move(f));
    hit_.push_back(hits);
    return true;
  }

  void seed_forts() {
    const VertexSet none(n_);
    const std::size_t seeds = std::min<std::size_t>(n_, 16);
    for (std::size_t s = 0; s < seeds; ++s) add_fort(stall_fort(none, s * n_ / seeds));
  }

  std::vector<std::uint32_t> all_indices() const {
    std::vector<std::uint32_t> idx(forts_.size());
    std::iota(idx.begin(), idx.end(), 0U);
    return idx;
  }

  // Greedy disjoint packing over the allowed part of the given forts.
  std::size_t pack(const std::vector<std::uint32_t>& indices) const {
    std::vector<std::pair<std::size_t, std::uint32_t>> order;
    order.reserve(indices.size());
    for (auto f : indices) order.emplace_back((forts_[f] - forbidden_).count(), f);
    std::sort(order.begin(), order.end());
    VertexSet used(n_);
    std::size_t count = 0;
    for (const auto& [size, f] : order) {
      VertexSet allowed = forts_[f] - forbidden_;
      if (allowed.intersects(used)) continue;
      used |= allowed;
      ++count;
    }
    return count;
  }

  void choose(Vertex v) {
    chosen_.insert(v);
    for (auto f : forts_containing_[v]) ++hit_[f];
  }

  void unchoose(Vertex v) {
    chosen_.erase(v);
    for (auto f : forts_containing_[v]) --hit_[f];
  }

  bool out_of_budget() {
    if (options_.node_limit != 0 && stats_.nodes >= options_.node_limit) interrupted_ = true;
    if (options_.time_limit && (stats_.nodes & 255U) == 0 &&
        Clock::now() - start_ >= *options_.time_limit)
      interrupted_ = true;
    return interrupted_;
  }

  bool search() {
    ++stats_.nodes;
    if (out_of_budget()) return false;

    std::vector<std::uint32_t> unhit;
    std::int64_t branch = -1;
    std::size_t branch_size = 0;
    while (true) {
      unhit.clear();
      branch = -1;
      for (std::uint32_t f = 0; f < forts_.size(); ++f) {
        if (hit_[f] != 0) continue;
        unhit.push_back(f);
        const std::size_t allowed = (forts_[f] - forbidden_).count();
        if (allowed == 0) return false;
        if (branch < 0 || allowed < branch_size) {
          branch = f;
          branch_size = allowed;
        }
      }
      if (branch >= 0) break;
      ++stats_.closures;
      if (prop_.forces(chosen_)) return true;
      add_fort(stall_fort(chosen_, forts_.size()));
    }

    if (chosen_.count() >= budget_) return false;
    if (chosen_.count() + pack(unhit) > budget_) return false;

    // Branch on the members of the most constrained unhit fort, preferring
    // vertices that hit many unhit forts.
    std::vector<std::pair<std::size_t, Vertex>> members;
    (forts_[static_cast<std::size_t>(branch)] - forbidden_).for_each([&](Vertex v) {
      std::size_t score = 0;
      for (auto f : forts_containing_[v])
        if (hit_[f] == 0) ++score;
      members.emplace_back(score, v);
    });
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    std::vector<Vertex> banned;
    bool found = false;
    for (const auto& [score, v] : members) {
      choose(v);
      found = search();
      if (found) break;
      unchoose(v);
      if (interrupted_) break;
      forbidden_.insert(v);
      banned.push_back(v);
    }
    for (Vertex v : banned) forbidden_.erase(v);
    return found;
  }

  const Graph& g_;
  std::size_t n_;
  Propagator prop_;
  SolveOptions options_;
  Clock::time_point start_;
  SolveStats stats_;

  VertexSet chosen_;
  VertexSet forbidden_;
  std::vector<VertexSet> forts_;
  std::vector<std::uint32_t> hit_;
  std::vector<std::vector<std::uint32_t>> forts_containing_;
  std::size_t budget_ = 0;
  bool interrupted_ = false;
};

}  // namespace

SolveReport solve_fortbb(const Graph& g, const SolveOptions& options) {
  return FortSearch(g, options).run();
}

SolveReport solve(const Graph& g, Algorithm algorithm, const SolveOptions& options) {
  return algorithm == Algorithm::Exhaustive ? solve_exhaustive(g, options)
                                            : solve_fortbb(g, options);
}

std::size_t lower_bound_disjoint_forts(const Graph& g, std::span<const Fort> forts) {
  std::vector<const Fort*> order;
  for (const auto& f : forts) {
    g.check_set(f.vertices);
    order.push_back(&f);
  }
  std::stable_sort(order.begin(), order.end(), [](const Fort* a, const Fort* b) {
    return a->vertices.count() < b->vertices.count();
  });
  VertexSet used(g.order());
  std::size_t count = 0;
  for (const Fort* f : order) {
    if (f->vertices.empty() || f->vertices.intersects(used)) continue;
    used |= f->vertices;
    ++count;
  }
  return count;
}

PathCover path_cover_number(const Graph& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap || n > 24) {
    throw UnsupportedError("path cover number limited to " + std::to_string(std::min<std::size_t>(cap, 24)) +
                           " vertices (graph has " + std::to_string(n) + ")");
  }
  PathCover out;
  if (n == 0) return out;
  const detail::MaskGraph mg(g);
  const std::uint32_t full = (1U << n) - 1;

  // is_path[s]: G[s] is connected, has |s|-1 edges and maximum degree <= 2.
  std::vector<bool> is_path(std::size_t{1} << n, false);
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::size_t edges2 = 0;
    bool ok = true;
    for (std::uint32_t scan = s; scan != 0; scan &= scan - 1) {
      const auto d = std::popcount(mg.neighbors(static_cast<Vertex>(std::countr_zero(scan))) & s);
      if (d > 2) {
        ok = false;
        break;
      }
      edges2 += static_cast<std::size_t>(d);
    }
    if (!ok || edges2 / 2 + 1 != static_cast<std::size_t>(std::popcount(s))) continue;
    std::uint64_t reach = s & (~s + 1);
    while (true) {
      std::uint64_t grown = reach;
      for (std::uint64_t scan = reach; scan != 0; scan &= scan - 1)
        grown |= mg.neighbors(static_cast<Vertex>(std::countr_zero(scan))) & s;
      if (grown == reach) break;
      reach = grown;
    }
    is_path[s] = reach == s;
  }

  constexpr std::uint8_t kInf = 0xFF;
  std::vector<std::uint8_t> best(std::size_t{1} << n, kInf);
  std::vector<std::uint32_t> pick(std::size_t{1} << n, 0);
  best[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    // Submasks of `rest`, each joined with the lowest vertex.
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t part = sub | low;
      if (is_path[part] && best[mask ^ part] != kInf &&
          best[mask ^ part] + 1 < best[mask]) {
        best[mask] = static_cast<std::uint8_t>(best[mask ^ part] + 1);
        pick[mask] = part;
      }
      if (sub == 0) break;
    }
  }

  out.count = best[full];
  for (std::uint32_t mask = full; mask != 0; mask ^= pick[mask]) {
    const std::uint32_t part = pick[mask];
    // Walk the path from an endpoint (degree <= 1 inside the part).
    Vertex start = static_cast<Vertex>(std::countr_zero(part));
    for (std::uint32_t scan = part; scan != 0; scan &= scan - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(scan));
      if (std::popcount(mg.neighbors(v) & part) <= 1) {
        start = v;
        break;
      }
    }
    std::vector<Vertex> path{start};
    std::uint64_t seen = std::uint64_t{1} << start;
    while (true) {
      const std::uint64_t next = mg.neighbors(path.back()) & part & ~seen;
      if (next == 0) break;
      const auto v = static_cast<Vertex>(std::countr_zero(next));
      path.push_back(v);
      seen |= std::uint64_t{1} << v;
    }
    out.paths.push_back(std::move(path));
  }
  return out;
}

std::vector<VertexSet> min_zfs_enumerate(const Graph& g, std::size_t cap, int threads) {
  if (g.order() > cap) {
    throw UnsupportedError("minimum zero forcing set enumeration limited to " +
                           std::to_string(cap) + " vertices");
  }
  SolveOptions options;
  options.cap = cap;
  options.threads = threads;
  const std::size_t z = solve_exhaustive(g, options).z;
  const std::size_t n = g.order();
  const detail::MaskGraph mg(g);
  const std::uint64_t total = detail::binomial(n, z);
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint64_t>> found(chunks);

#pragma omp parallel for schedule(dynamic) num_threads(std::max(threads, 1)) if (threads > 1)
  for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(chunks); ++chunk) {
    const std::uint64_t first = static_cast<std::uint64_t>(chunk) * kChunk;
    const std::uint64_t last = std::min(total, first + kChunk);
    auto combo = detail::unrank_combination(n, z, first);
    for (std::uint64_t rank = first; rank < last; ++rank) {
      const std::uint64_t m = mask_of(combo);
      if (mg.forces(m)) found[static_cast<std::size_t>(chunk)].push_back(m);
      detail::next_combination(combo, n);
    }
  }
  std::vector<VertexSet> out;
  for (const auto& part : found)
    for (std::uint64_t m : part) out.push_back(detail::from_mask(m, n));
  return out;
}

}  // namespace forcelab
