#include "forcelab/forcing.hpp"

#include <algorithm>

#include "forcelab/errors.hpp"

namespace forcelab {

VertexSet closure(const Graph& g, const VertexSet& blue) {
  g.check_set(blue);
  const std::size_t n = g.order();
  VertexSet out = blue;
  std::vector<std::uint32_t> white_count(n, 0);
  std::vector<Vertex> work;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v))
      if (!blue.contains(w)) ++white_count[v];
    if (blue.contains(v) && white_count[v] == 1) work.push_back(v);
  }

  while (!work.empty()) {
    const Vertex u = work.back();
    work.pop_back();
    if (white_count[u] != 1) continue;
    Vertex target = 0;
    for (Vertex w : g.neighbors(u)) {
      if (!out.contains(w)) {
        target = w;
        break;
      }
    }
    out.insert(target);
    for (Vertex x : g.neighbors(target)) {
      if (--white_count[x] == 1 && out.contains(x)) work.push_back(x);
    }
    if (white_count[target] == 1) work.push_back(target);
  }
  return out;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& b) {
  return closure(g, b).count() == g.order();
}

std::vector<VertexSet> Chronology::expansion() const {
  std::vector<VertexSet> out;
  out.reserve(steps.size() + 1);
  out.push_back(initial);
  for (const auto& step : steps) {
    VertexSet next = out.back();
    for (const auto& f : step) next.insert(f.to);
    out.push_back(std::move(next));
  }
  return out;
}

VertexSet Chronology::final_blue() const {
  VertexSet out = initial;
  for (const auto& step : steps)
    for (const auto& f : step) out.insert(f.to);
  return out;
}

namespace {

// For each white vertex that some blue vertex can force, the candidate forcers
// in increasing id order.
std::vector<std::pair<Vertex, std::vector<Vertex>>> valid_forces(const Graph& g,
                                                                 const VertexSet& blue) {
  std::vector<std::vector<Vertex>> by_target(g.order());
  blue.for_each([&](Vertex u) {
    std::optional<Vertex> only;
    std::size_t whites = 0;
    for (Vertex w : g.neighbors(u)) {
      if (!blue.contains(w)) {
        only = w;
        if (++whites > 1) break;
      }
    }
    if (whites == 1) by_target[*only].push_back(u);
  });
  std::vector<std::pair<Vertex, std::vector<Vertex>>> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!by_target[v].empty()) out.emplace_back(v, std::move(by_target[v]));
  return out;
}

}  // namespace

Chronology run_chronology(const Graph& g, const VertexSet& blue, ForcePolicy policy) {
  g.check_set(blue);
  Chronology c{blue, {}};
  VertexSet current = blue;
  while (true) {
    auto candidates = valid_forces(g, current);
    if (candidates.empty()) break;
    std::vector<Force> step;
    if (policy == ForcePolicy::Sequential) {
      // Lowest forcer overall, then its (unique) target.
      auto best = std::min_element(candidates.begin(), candidates.end(),
                                   [](const auto& a, const auto& b) {
                                     return a.second.front() < b.second.front();
                                   });
      step.push_back({best->second.front(), best->first});
    } else {
      for (const auto& [target, forcers] : candidates) step.push_back({forcers.front(), target});
      std::sort(step.begin(), step.end(),
                [](const Force& a, const Force& b) { return a.from < b.from; });
    }
    for (const auto& f : step) current.insert(f.to);
    c.steps.push_back(std::move(step));
  }
  return c;
}

Chronology run_random_chronology(const Graph& g, const VertexSet& blue, std::mt19937_64& rng) {
  g.check_set(blue);
  Chronology c{blue, {}};
  VertexSet current = blue;
  std::bernoulli_distribution coin(0.5);
  while (true) {
    auto candidates = valid_forces(g, current);
    if (candidates.empty()) break;
    std::vector<Force> step;
    for (const auto& [target, forcers] : candidates) {
      if (!coin(rng)) continue;
      std::uniform_int_distribution<std::size_t> pick(0, forcers.size() - 1);
      step.push_back({forcers[pick(rng)], target});
    }
    if (step.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      const auto& [target, forcers] = candidates[pick(rng)];
      std::uniform_int_distribution<std::size_t> who(0, forcers.size() - 1);
      step.push_back({forcers[who(rng)], target});
    }
    for (const auto& f : step) current.insert(f.to);
    c.steps.push_back(std::move(step));
  }
  return c;
}

ChronologyCheck validate_chronology(const Graph& g, const Chronology& c) {
  auto fail = [](std::size_t step, std::string msg) {
    return ChronologyCheck{false, step, std::move(msg)};
  };
  if (c.initial.universe() != g.order()) {
    return ChronologyCheck{false, std::nullopt, "initial set universe does not match graph"};
  }
  VertexSet blue = c.initial;
  std::vector<bool> has_forced(g.order(), false);
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const std::size_t step = k + 1;
    VertexSet forced_now(g.order());
    for (const auto& f : c.steps[k]) {
      const std::string tag = std::to_string(f.from) + "->" + std::to_string(f.to);
      if (f.from >= g.order() || f.to >= g.order()) return fail(step, "force " + tag + " out of range");
      if (!blue.contains(f.from)) return fail(step, "force " + tag + ": source is white");
      if (blue.contains(f.to)) return fail(step, "force " + tag + ": target already blue");
      if (forced_now.contains(f.to)) return fail(step, "force " + tag + ": target forced twice");
      if (has_forced[f.from]) return fail(step, "force " + tag + ": source forces twice");
      if (!g.adjacent(f.from, f.to)) return fail(step, "force " + tag + ": not an edge");
      for (Vertex w : g.neighbors(f.from)) {
        if (w != f.to && !blue.contains(w)) {
          return fail(step, "force " + tag + ": source has another white neighbour " +
                                std::to_string(w));
        }
      }
      has_forced[f.from] = true;
      forced_now.insert(f.to);
    }
    blue |= forced_now;
  }
  return {};
}

ChainSet chain_set(const Chronology& c) {
  const std::size_t n = c.graph_size();
  constexpr Vertex kNone = ~Vertex{0};
  std::vector<Vertex> next(n, kNone);
  std::vector<bool> forced(n, false);
  for (const auto& step : c.steps) {
    for (const auto& f : step) {
      if (f.from >= n || f.to >= n) throw DomainError("force refers to a vertex out of range");
      if (next[f.from] != kNone) throw DomainError("vertex " + std::to_string(f.from) + " forces twice");
      if (forced[f.to] || c.initial.contains(f.to))
        throw DomainError("vertex " + std::to_string(f.to) + " forced twice or while initial");
      next[f.from] = f.to;
      forced[f.to] = true;
    }
  }
  ChainSet out;
  c.initial.for_each([&](Vertex b) {
    std::vector<Vertex> chain{b};
    for (Vertex v = next[b]; v != kNone; v = next[v]) chain.push_back(v);
    out.chains.push_back(std::move(chain));
  });
  return out;
}

VertexSet terminus(const Chronology& c) {
  chain_set(c);  // structural validation
  VertexSet out = VertexSet::full(c.graph_size());
  for (const auto& step : c.steps)
    for (const auto& f : step) out.erase(f.from);
  return out;
}

RestrictedChronology restrict_chronology(const Graph& g, const VertexSet& h_vertices,
                                         const Chronology& c) {
  g.check_set(h_vertices);
  if (auto check = validate_chronology(g, c); !check) {
    throw PreconditionError("restriction needs a valid chronology: " + check.message);
  }
  if (c.final_blue().count() != g.order()) {
    throw PreconditionError("restriction needs a chronology that forces all of V(G)");
  }
  RestrictedChronology out{induced_subgraph(g, h_vertices), {}};
  const auto& map = out.sub.from_parent;
  VertexSet initial = out.sub.project(c.initial);
  for (const auto& step : c.steps) {
    std::vector<Force> kept;
    for (const auto& f : step) {
      if (!map[f.to]) continue;
      if (map[f.from]) {
        kept.push_back({*map[f.from], *map[f.to]});
      } else {
        initial.insert(*map[f.to]);
      }
    }
    out.chronology.steps.push_back(std::move(kept));
  }
  out.chronology.initial = std::move(initial);
  return out;
}

}  // namespace forcelab
