#include "forcelab/verify.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "forcelab/constructions.hpp"
#include "forcelab/errors.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/forts.hpp"
#include "forcelab/generators.hpp"
#include "forcelab/solver.hpp"
#include "random_graph.hpp"

namespace forcelab::verify {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Range Range::parse(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  Range r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.lo > r.hi) throw ParseError("empty range '" + std::string(text) + "'");
  return r;
}

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

void Report::append(const Report& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

nlohmann::json Report::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : cases) {
    rows.push_back({{"suite", c.suite},
                    {"case", c.name},
                    {"expected", c.expected},
                    {"actual", c.actual},
                    {"pass", c.pass},
                    {"ms", c.ms}});
  }
  return {{"cases", rows}, {"total", cases.size()}, {"failures", failures()},
          {"all_pass", all_pass()}};
}

std::string Report::to_text() const {
  std::size_t w_suite = 5, w_name = 4, w_exp = 8, w_act = 6;
  for (const auto& c : cases) {
    w_suite = std::max(w_suite, c.suite.size());
    w_name = std::max(w_name, c.name.size());
    w_exp = std::max(w_exp, c.expected.size());
    w_act = std::max(w_act, c.actual.size());
  }
  std::ostringstream out;
  auto row = [&](const std::string& a, const std::string& b, const std::string& c,
                 const std::string& d, const std::string& e, const std::string& f) {
    out << std::left << std::setw(static_cast<int>(w_suite)) << a << "  "
        << std::setw(static_cast<int>(w_name)) << b << "  " << std::setw(static_cast<int>(w_exp))
        << c << "  " << std::setw(static_cast<int>(w_act)) << d << "  " << std::setw(6) << e
        << "  " << f << '\n';
  };
  row("suite", "case", "expected", "actual", "result", "ms");
  for (const auto& c : cases) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << c.ms;
    row(c.suite, c.name, c.expected, c.actual, c.pass ? "PASS" : "FAIL", ms.str());
  }
  out << cases.size() << " cases, " << failures() << " failed\n";
  return out.str();
}

namespace {

// Fort solver, cross-checked exhaustively on small graphs.
CaseResult solve_case(const std::string& suite, const Graph& g, std::size_t expected,
                      const Options& options) {
  const auto start = Clock::now();
  SolveOptions so;
  so.threads = options.threads;
  const auto fort = solve_fortbb(g, so);
  std::string actual = std::to_string(fort.z);
  bool pass = fort.complete && fort.z == expected && fort.witness.count() == fort.z &&
              is_zero_forcing_set(g, fort.witness) && hits_all(fort.witness, fort.lower_bound_forts);
  if (g.order() <= options.cross_check_limit) {
    so.cap = options.cross_check_limit;
    const auto brute = solve_exhaustive(g, so);
    actual += " (exhaustive " + std::to_string(brute.z) + ")";
    pass = pass && brute.z == expected;
  }
  return {suite, "Z(" + g.name() + ")", std::to_string(expected), actual, pass, since(start)};
}

CaseResult construction_case(const std::string& suite, const ConstructionReport& report) {
  std::string actual = "|B|=" + std::to_string(report.set.count()) +
                       (report.forces ? " forces" : " stalls");
  for (const auto& a : report.step_assertions)
    if (!a.pass) actual += "; failed: " + a.description;
  return {suite, to_string(report.family) + " " + report.params,
          "|B|=" + std::to_string(report.expected_size) + " forces", actual, report.ok(), 0.0};
}

}  // namespace

Report peony_suite(Range m, Range r, Range s, const Options& options) {
  Report report;
  for (int mi = m.lo; mi <= m.hi; ++mi) {
    for (int ri = r.lo; ri <= r.hi; ++ri) {
      for (int si = s.lo; si <= s.hi; ++si) {
        const PeonyParams p{mi, ri, si};
        const Graph g = make_peony(p);
        report.cases.push_back(solve_case("peony", g, peony_formula(p), options));
        const auto start = Clock::now();
        auto c = construction_case("peony", peony_construction(p));
        c.ms = since(start);
        report.cases.push_back(std::move(c));
      }
    }
  }
  return report;
}

Report web_suite(Range m, Range r, const Options& options) {
  Report report;
  for (int mi = m.lo; mi <= m.hi; ++mi) {
    for (int ri = r.lo; ri <= r.hi; ++ri) {
      const WebParams p{mi, ri};
      const Graph g = make_web(p);
      report.cases.push_back(solve_case("web", g, web_formula(mi, ri), options));
      const auto start = Clock::now();
      auto c = construction_case("web", web_construction(p));
      c.ms = since(start);
      report.cases.push_back(std::move(c));
    }
  }
  return report;
}

Report prism_suite(Range m, Range r, const Options& options) {
  Report report;
  for (int mi = m.lo; mi <= m.hi; ++mi)
    for (int ri = r.lo; ri <= r.hi; ++ri)
      report.cases.push_back(
          solve_case("prism", make_cycle_path_product(mi, ri), prism_formula(mi, ri), options));
  return report;
}

CaseResult check_terminus(std::uint64_t seed, std::size_t trials) {
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = testing::random_graph_between(1, 12, rng);
    const VertexSet b = testing::random_zero_forcing_set(g, rng);
    const Chronology c = run_random_chronology(g, b, rng);
    const bool ok = validate_chronology(g, c).valid && c.final_blue().count() == g.order() &&
                    terminus(c).count() == b.count() && is_zero_forcing_set(g, terminus(c));
    if (!ok) ++failures;
  }
  return {"core", "terminus forces (" + std::to_string(trials) + " trials)", "0 failures",
          std::to_string(failures) + " failures", failures == 0, since(start)};
}

CaseResult check_restriction(std::uint64_t seed, std::size_t trials) {
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = testing::random_graph_between(1, 10, rng);
    const VertexSet b = testing::random_zero_forcing_set(g, rng);
    const Chronology c = run_random_chronology(g, b, rng);
    VertexSet h = testing::random_subset(g.order(), 0.6, rng);
    if (h.empty()) h.insert(0);
    const auto restricted = restrict_chronology(g, h, c);
    const Graph& sub = restricted.sub.graph;
    const bool ok = validate_chronology(sub, restricted.chronology).valid &&
                    restricted.chronology.final_blue().count() == sub.order() &&
                    is_zero_forcing_set(sub, restricted.chronology.initial);
    if (!ok) ++failures;
  }
  return {"core", "restriction forces H (" + std::to_string(trials) + " trials)", "0 failures",
          std::to_string(failures) + " failures", failures == 0, since(start)};
}

CaseResult check_path_cover_sandwich(std::uint64_t seed, std::size_t random_graphs) {
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  std::vector<Graph> graphs;
  for (std::size_t t = 0; t < random_graphs; ++t) graphs.push_back(testing::random_graph_between(1, 10, rng));
  graphs.push_back(make_web({3, 1}));
  graphs.push_back(make_web({4, 1}));
  graphs.push_back(make_peony({3, 2, 1}));
  std::size_t violations = 0;
  for (const auto& g : graphs) {
    const auto cover = path_cover_number(g);
    const auto z = solve_exhaustive(g).z;
    if (cover.count > z) ++violations;
  }
  return {"core", "p(G) <= Z(G) (" + std::to_string(graphs.size()) + " graphs)", "0 violations",
          std::to_string(violations) + " violations", violations == 0, since(start)};
}

CaseResult check_duality_exhaustive(const Graph& g) {
  const auto start = Clock::now();
  const auto sweep = verify_duality_exhaustive(g);
  return {"core", "duality over all subsets of " + g.name(),
          "0/" + std::to_string(sweep.subsets) + " disagree",
          std::to_string(sweep.disagreements) + "/" + std::to_string(sweep.subsets) + " disagree",
          sweep.disagreements == 0, since(start)};
}

CaseResult check_fort_extraction(std::uint64_t seed, std::size_t trials) {
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  std::size_t stalls = 0, failures = 0;
  while (stalls < trials) {
    const Graph g = testing::random_graph_between(2, 14, rng);
    const VertexSet b = testing::random_subset(g.order(), 0.3, rng);
    if (is_zero_forcing_set(g, b)) continue;
    ++stalls;
    const Fort f = extract_fort_from_failure(g, b);
    if (!is_fort(g, f.vertices) || f.vertices.intersects(b)) ++failures;
  }
  return {"core", "extracted stall is a fort (" + std::to_string(trials) + " stalls)",
          "0 failures", std::to_string(failures) + " failures", failures == 0, since(start)};
}

namespace {

// Calls fn(choice) for every vector in [lo..hi]^len when there are at most
// 10^4, otherwise for 100 random vectors.
template <class Fn>
void sweep_choices(std::size_t len, int lo, int hi, std::mt19937_64& rng, Fn&& fn) {
  const auto base = static_cast<double>(hi - lo + 1);
  double total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= base;
  std::vector<int> choice(len, lo);
  if (total <= 1e4) {
    while (true) {
      fn(choice);
      std::size_t i = 0;
      while (i < len && choice[i] == hi) choice[i++] = lo;
      if (i == len) break;
      ++choice[i];
    }
    return;
  }
  std::uniform_int_distribution<int> pick(lo, hi);
  for (int t = 0; t < 100; ++t) {
    for (auto& c : choice) c = pick(rng);
    fn(choice);
  }
}

}  // namespace

CaseResult check_fort_families(int m_lo, int m_hi, int r_lo, int r_hi, int s_lo, int s_hi,
                               std::uint64_t seed) {
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  std::size_t checked = 0, failures = 0;
  auto record = [&](const Graph& g, const Fort& f) {
    ++checked;
    if (!is_fort(g, f.vertices)) ++failures;
  };
  for (int m = m_lo; m <= m_hi; ++m) {
    for (int r = r_lo; r <= r_hi; ++r) {
      for (int s = s_lo; s <= s_hi; ++s) {
        const PeonyParams p{m, r, s};
        const Graph g = make_peony(p);
        for (int i = 1; i <= m; ++i)
          for (int j1 = 1; j1 <= r; ++j1)
            for (int j2 = j1 + 1; j2 <= r; ++j2) record(g, fort_type1(p, i, j1, j2));
        sweep_choices(static_cast<std::size_t>(m), 1, r, rng,
                      [&](const std::vector<int>& c) { record(g, fort_type2(p, c)); });
        for (int i0 = 1; i0 <= m; ++i0)
          sweep_choices(static_cast<std::size_t>(m - 1), 1, r, rng,
                        [&](const std::vector<int>& c) { record(g, fort_type3(p, i0, c)); });
        sweep_choices(static_cast<std::size_t>(m * r), 1, s, rng, [&](const std::vector<int>& c) {
          std::vector<std::vector<int>> k(static_cast<std::size_t>(m));
          for (int i = 0; i < m; ++i)
            k[static_cast<std::size_t>(i)].assign(c.begin() + i * r, c.begin() + (i + 1) * r);
          record(g, fort_type4(p, k));
        });
      }
    }
  }
  return {"forts", "peony fort families (" + std::to_string(checked) + " forts)", "0 failures",
          std::to_string(failures) + " failures", failures == 0 && checked > 0, since(start)};
}

std::vector<Graph> oracle_corpus(std::uint64_t seed) {
  std::vector<Graph> corpus;
  for (int n = 1; n <= 14; ++n) corpus.push_back(make_path(n));
  for (int n = 3; n <= 14; ++n) corpus.push_back(make_cycle(n));
  for (int n = 1; n <= 8; ++n) corpus.push_back(make_complete(n));
  for (int m = 3; m <= 14; ++m)
    for (int r = 1; m * r <= 14; ++r) corpus.push_back(make_cycle_path_product(m, r));
  for (int m = 3; m <= 7; ++m)
    for (int r = 1; m * (r + 1) <= 14; ++r) corpus.push_back(make_web({m, r}));
  corpus.push_back(make_peony({3, 2, 1}));
  corpus.push_back(make_peony({4, 2, 1}));
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 100; ++t) corpus.push_back(testing::random_graph_between(4, 14, rng));
  return corpus;
}

CaseResult check_oracle_equivalence(const std::vector<Graph>& corpus) {
  const auto start = Clock::now();
  std::size_t mismatches = 0;
  for (const auto& g : corpus) {
    const auto a = solve_fortbb(g);
    const auto b = solve_exhaustive(g);
    if (a.z != b.z || !a.complete || !is_zero_forcing_set(g, a.witness)) ++mismatches;
  }
  return {"solver", "fortbb = exhaustive (" + std::to_string(corpus.size()) + " graphs)",
          "0 mismatches", std::to_string(mismatches) + " mismatches",
          mismatches == 0 && corpus.size() >= 120, since(start)};
}

Report core_suite(const Options& options) {
  Report report;
  const auto seed = options.seed;
  report.cases.push_back(check_terminus(seed, 500));
  report.cases.push_back(check_restriction(seed + 1, 200));
  report.cases.push_back(check_path_cover_sandwich(seed + 2, 50));
  report.cases.push_back(check_fort_extraction(seed + 3, 500));
  for (const auto& g : {make_path(4), make_cycle(5), make_complete(4), make_web({3, 1})})
    report.cases.push_back(check_duality_exhaustive(g));
  report.cases.push_back(check_fort_families(3, 4, 2, 3, 1, 2, seed + 4));
  return report;
}

}  // namespace forcelab::verify
