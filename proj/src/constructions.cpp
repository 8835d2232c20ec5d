#include "forcelab/constructions.hpp"

#include <algorithm>

#include "forcelab/errors.hpp"

namespace forcelab {

std::string to_string(ConstructionFamily family) {
  switch (family) {
    case ConstructionFamily::PeonyEquality: return "peony-equality";
    case ConstructionFamily::WebSmallM: return "web-small-m";
    case ConstructionFamily::WebMidM: return "web-mid-m";
    case ConstructionFamily::WebLargeM: return "web-large-m";
  }
  return "unknown";
}

bool ConstructionReport::ok() const {
  return forces && set.count() == expected_size &&
         std::all_of(step_assertions.begin(), step_assertions.end(),
                     [](const StepAssertion& a) { return a.pass; });
}

namespace {

int ceil_half(int m) { return (m + 1) / 2; }

// Runs MaxConcurrent from the report's set and evaluates the claims.
void finalize(const Graph& g, ConstructionReport& report) {
  report.chronology = run_chronology(g, report.set, ForcePolicy::MaxConcurrent);
  const auto expansion = report.chronology.expansion();
  report.forces = expansion.back().count() == g.order();
  for (auto& claim : report.step_assertions) {
    const auto& blue = expansion[std::min(claim.step, expansion.size() - 1)];
    claim.pass = claim.expected.is_subset_of(blue);
  }
}

VertexSet web_block(const WebParams& p, int first, int last) {
  VertexSet out(p.vertex_count());
  for (int i = first; i <= last; ++i) {
    out.insert(web::pendant(p, i));
    for (int j = 1; j <= p.r; ++j) out.insert(web::grid(p, i, j));
  }
  return out;
}

void require_regime(const WebParams& p, WebRegime wanted, const char* condition) {
  p.validate();
  if (web_regime(p.m, p.r) != wanted) {
    throw PreconditionError(p.name() + " does not satisfy " + condition);
  }
}

}  // namespace

WebRegime web_regime(int m, int r) {
  if (m <= 2 * r) return WebRegime::SmallM;
  if (ceil_half(m) < 2 * r) return WebRegime::MidM;
  return WebRegime::LargeM;
}

std::size_t web_formula(int m, int r) {
  return static_cast<std::size_t>(std::max(ceil_half(m), std::min(m, 2 * r)));
}

std::size_t peony_formula(const PeonyParams& p) {
  return static_cast<std::size_t>(p.m * (p.r - 1) + 3);
}

std::size_t prism_formula(int m, int r) { return static_cast<std::size_t>(std::min(m, 2 * r)); }

ConstructionReport peony_construction(const PeonyParams& p) {
  p.validate();
  const Graph g = make_peony(p);
  ConstructionReport report;
  report.family = ConstructionFamily::PeonyEquality;
  report.params = p.name();
  report.expected_size = peony_formula(p);
  report.set = VertexSet(g.order());
  // Stations 1..m-1 start with the first vertex of every layer but the first,
  // so u_1 begins with the single white neighbour v_{1,1,1}.
  for (int i = 1; i < p.m; ++i)
    for (int j = 2; j <= p.r; ++j) report.set.insert(peony::spoke(p, i, j, 1));
  for (int j = 1; j <= p.r; ++j) report.set.insert(peony::spoke(p, p.m, j, p.s));
  report.set.insert(peony::center());
  report.set.insert(peony::hub(p, 1));

  const auto s = static_cast<std::size_t>(p.s);
  report.step_assertions.push_back(
      {s, station(p, 1), false, "station 1 blue after time-step s"});
  report.step_assertions.push_back({s + 1, station(p, 1) | station(p, p.m), false,
                                    "stations 1 and m blue after time-step s+1"});
  finalize(g, report);
  return report;
}

ConstructionReport web_construction_small_m(const WebParams& p) {
  require_regime(p, WebRegime::SmallM, "m <= 2r");
  const Graph g = make_web(p);
  ConstructionReport report;
  report.family = ConstructionFamily::WebSmallM;
  report.params = p.name();
  report.expected_size = static_cast<std::size_t>(p.m);
  report.set = VertexSet(g.order());
  for (int i = 1; i <= p.m; ++i) report.set.insert(web::pendant(p, i));
  report.step_assertions.push_back({static_cast<std::size_t>(p.r), g.all_vertices(), false,
                                    "all vertices blue after time-step r"});
  finalize(g, report);
  return report;
}

ConstructionReport web_construction_mid_m(const WebParams& p) {
  require_regime(p, WebRegime::MidM, "ceil(m/2) < 2r < m");
  const Graph g = make_web(p);
  ConstructionReport report;
  report.family = ConstructionFamily::WebMidM;
  report.params = p.name();
  report.expected_size = static_cast<std::size_t>(2 * p.r);
  report.set = VertexSet(g.order());
  for (int i = 1; i <= 2 * p.r; ++i) report.set.insert(web::pendant(p, i));
  report.step_assertions.push_back({static_cast<std::size_t>(2 * p.r - 1),
                                    web_block(p, 1, 2 * p.r), false,
                                    "columns 1..2r and their pendants blue after time-step 2r-1"});
  finalize(g, report);
  return report;
}

ConstructionReport web_construction_large_m(const WebParams& p) {
  require_regime(p, WebRegime::LargeM, "2r <= ceil(m/2)");
  const Graph g = make_web(p);
  const int m = p.m;
  const int r = p.r;
  ConstructionReport report;
  report.family = ConstructionFamily::WebLargeM;
  report.params = p.name();
  report.expected_size = static_cast<std::size_t>(ceil_half(m));
  report.set = VertexSet(g.order());
  for (int i = 1; i <= 2 * r; ++i) report.set.insert(web::pendant(p, i));
  const int extra = (m % 2 == 0) ? (m - 4 * r) / 2 : (m - 1 - 4 * r) / 2;
  for (int i = 1; i <= extra; ++i) report.set.insert(web::pendant(p, 2 * r + 2 * i));
  if (m % 2 == 1) report.set.insert(web::pendant(p, m - 2 * r));

  report.step_assertions.push_back({static_cast<std::size_t>(2 * r - 1), web_block(p, 1, 2 * r),
                                    false,
                                    "columns 1..2r and their pendants blue after time-step 2r-1"});
  // The sweep and seam timings need the first block and the mirrored block
  // to be separate (m >= 4r); at m = 4r-1 the set is just {p_1..p_2r}.
  if (m >= 4 * r) {
    report.step_assertions.push_back({static_cast<std::size_t>(m - 2 * r - 1),
                                      web_block(p, 1, m - 2 * r), false,
                                      "columns 1..m-2r blue after time-step m-2r-1"});
    VertexSet seam(g.order());
    for (int j = 1; j <= r; ++j) {
      seam.insert(web::grid(p, m, j));
      seam.insert(web::grid(p, m - 2 * r + 1, j));
    }
    report.step_assertions.push_back({static_cast<std::size_t>(m - 2 * r), seam, false,
                                      "columns m and m-2r+1 blue after time-step m-2r"});
  }
  finalize(g, report);
  return report;
}

ConstructionReport web_construction(const WebParams& p) {
  p.validate();
  switch (web_regime(p.m, p.r)) {
    case WebRegime::SmallM: return web_construction_small_m(p);
    case WebRegime::MidM: return web_construction_mid_m(p);
    case WebRegime::LargeM: return web_construction_large_m(p);
  }
  throw PreconditionError("unreachable web regime");
}

StageSets peony_lower_bound_stage_sets(const PeonyParams& p, const StageChoices& choices) {
  p.validate();
  const Graph g = make_peony(p);
  const auto m = static_cast<std::size_t>(p.m);
  const auto r = static_cast<std::size_t>(p.r);

  std::vector<int> skipped = choices.skipped_layer.empty() ? std::vector<int>(m, 1)
                                                           : choices.skipped_layer;
  std::vector<std::vector<int>> position =
      choices.position.empty() ? std::vector<std::vector<int>>(m, std::vector<int>(r, 1))
                               : choices.position;
  if (skipped.size() != m) throw DomainError("skipped_layer needs one entry per station");
  if (position.size() != m) throw DomainError("position needs one row per station");
  for (std::size_t i = 0; i < m; ++i) {
    if (skipped[i] < 1 || skipped[i] > p.r) throw DomainError("skipped layer index out of range");
    if (position[i].size() != r) throw DomainError("position rows need one entry per layer");
    for (int k : position[i])
      if (k < 1 || k > p.s) throw DomainError("position index out of range");
  }
  auto check = [&](int v, int hi, const char* what) {
    if (v < 1 || v > hi) throw DomainError(std::string(what) + " out of range");
  };
  check(choices.i2, p.m, "i2");
  check(choices.k2, p.s, "k2");
  if (!choices.third_is_center) {
    check(choices.i3, p.m, "i3");
    check(choices.k3, p.s, "k3");
    if (choices.i3 == choices.i2) throw DomainError("i3 must differ from i2");
  }

  StageSets out;
  // One vertex from every layer except S_{i, j_i}, at every station.
  out.b1 = VertexSet(g.order());
  std::vector<std::vector<int>> pick(m, std::vector<int>(r, 0));
  for (int i = 1; i <= p.m; ++i) {
    for (int j = 1; j <= p.r; ++j) {
      if (j == skipped[static_cast<std::size_t>(i - 1)]) continue;
      const int k = position[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      out.b1.insert(peony::spoke(p, i, j, k));
      pick[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = k;
    }
  }
  out.missed.push_back(fort_type2(p, skipped));

  const int j2 = skipped[static_cast<std::size_t>(choices.i2 - 1)];
  out.b2 = out.b1;
  out.b2.insert(peony::spoke(p, choices.i2, j2, choices.k2));
  pick[static_cast<std::size_t>(choices.i2 - 1)][static_cast<std::size_t>(j2 - 1)] = choices.k2;
  std::vector<int> others;
  for (int i = 1; i <= p.m; ++i)
    if (i != choices.i2) others.push_back(skipped[static_cast<std::size_t>(i - 1)]);
  out.missed.push_back(fort_type3(p, choices.i2, others));

  out.b3 = out.b2;
  if (choices.third_is_center) {
    out.b3.insert(peony::center());
  } else {
    const int j3 = skipped[static_cast<std::size_t>(choices.i3 - 1)];
    out.b3.insert(peony::spoke(p, choices.i3, j3, choices.k3));
    pick[static_cast<std::size_t>(choices.i3 - 1)][static_cast<std::size_t>(j3 - 1)] = choices.k3;
  }
  // B_3 has at most one vertex per layer (plus possibly c), so the complement
  // of {c} ∪ one vertex per layer, agreeing with B_3, is a type-4 fort it misses.
  for (auto& row : pick)
    for (int& k : row)
      if (k == 0) k = 1;
  out.missed.push_back(fort_type4(p, pick));

  const VertexSet* stages[] = {&out.b1, &out.b2, &out.b3};
  for (std::size_t t = 0; t < 3; ++t) {
    if (!is_fort(g, out.missed[t].vertices) || out.missed[t].vertices.intersects(*stages[t])) {
      throw DomainError("stage " + std::to_string(t + 1) + " fort check failed");
    }
  }
  return out;
}

}  // namespace forcelab
