#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "forcelab/graph.hpp"

namespace forcelab::verify {

struct Range {
  int lo = 0;
  int hi = 0;
  // "a..b" or "a".
  static Range parse(std::string_view text);
};

struct CaseResult {
  std::string suite;
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  double ms = 0.0;
};

struct Report {
  std::vector<CaseResult> cases;

  bool all_pass() const;
  std::size_t failures() const;
  void append(const Report& other);
  nlohmann::json to_json() const;
  std::string to_text() const;  // aligned columns
};

struct Options {
  int threads = 1;
  std::uint64_t seed = 1;
  // Exhaustive cross-check of the fort solver when the graph is this small.
  std::size_t cross_check_limit = 16;
};

// Z(Py(m,r,s)) = m(r-1)+3 by the fort solver, plus the equality construction.
Report peony_suite(Range m, Range r, Range s, const Options& options = {});
// Z(Wb(m,r)) = max{ceil(m/2), min{m,2r}} by the fort solver, plus the regime construction.
Report web_suite(Range m, Range r, const Options& options = {});
// Z(C_m □ P_r) = min{m, 2r}.
Report prism_suite(Range m, Range r, const Options& options = {});
// Randomised and exhaustive property suites for the engine, forts and solver.
Report core_suite(const Options& options = {});

// Individual property checks (shared with the acceptance binary).
CaseResult check_terminus(std::uint64_t seed, std::size_t trials);
CaseResult check_restriction(std::uint64_t seed, std::size_t trials);
CaseResult check_path_cover_sandwich(std::uint64_t seed, std::size_t random_graphs);
CaseResult check_duality_exhaustive(const Graph& g);
CaseResult check_fort_extraction(std::uint64_t seed, std::size_t trials);
CaseResult check_fort_families(int m_lo, int m_hi, int r_lo, int r_hi, int s_lo, int s_hi,
                               std::uint64_t seed);
CaseResult check_oracle_equivalence(const std::vector<Graph>& corpus);

// Paths, cycles, complete graphs, prisms, small webs and peonies, and random
// graphs, all with at most 14 vertices (at least 120 graphs).
std::vector<Graph> oracle_corpus(std::uint64_t seed);

}  // namespace forcelab::verify
