#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "forcelab/forcing.hpp"
#include "forcelab/forts.hpp"
#include "forcelab/generators.hpp"

namespace forcelab {

enum class ConstructionFamily { PeonyEquality, WebSmallM, WebMidM, WebLargeM };

std::string to_string(ConstructionFamily family);

// A claim "after time-step `step`, every vertex of `expected` is blue",
// checked against the MaxConcurrent expansion sequence.
struct StepAssertion {
  std::size_t step = 0;
  VertexSet expected;
  bool pass = false;
  std::string description;
};

struct ConstructionReport {
  ConstructionFamily family = ConstructionFamily::PeonyEquality;
  std::string params;  // e.g. "Py(3,2,1)"
  VertexSet set;
  std::size_t expected_size = 0;
  bool forces = false;
  std::vector<StepAssertion> step_assertions;
  Chronology chronology;  // MaxConcurrent run from `set`

  bool ok() const;
};

// The web regimes partition m >= 3, r >= 1.
enum class WebRegime { SmallM, MidM, LargeM };
WebRegime web_regime(int m, int r);
std::size_t web_formula(int m, int r);           // max{ceil(m/2), min{m, 2r}}
std::size_t peony_formula(const PeonyParams& p);  // m(r-1) + 3
std::size_t prism_formula(int m, int r);          // min{m, 2r}

// B = {v_{i,j,1}}_{i<m, j>=2} ∪ {v_{m,j,s}}_j ∪ {c, u_1}; |B| = m(r-1)+3.
ConstructionReport peony_construction(const PeonyParams& p);
// B = all pendants; requires m <= 2r.
ConstructionReport web_construction_small_m(const WebParams& p);
// B = {p_1..p_2r}; requires ceil(m/2) < 2r < m.
ConstructionReport web_construction_mid_m(const WebParams& p);
// B = {p_1..p_2r} ∪ every second pendant from p_{2r+2} (plus p_{m-2r} for odd m);
// requires 2r <= ceil(m/2).
ConstructionReport web_construction_large_m(const WebParams& p);
// Dispatches on web_regime.
ConstructionReport web_construction(const WebParams& p);

// Choices for the staged lower-bound sets. Empty vectors mean "all ones".
struct StageChoices {
  std::vector<int> skipped_layer;          // j_i per station (length m)
  std::vector<std::vector<int>> position;  // k_{i,j}, m x r (used for j != j_i)
  int i2 = 1;
  int k2 = 1;
  bool third_is_center = true;  // B_3 = B_2 ∪ {c}; otherwise B_2 ∪ {v_{i3, j_{i3}, k3}}
  int i3 = 2;
  int k3 = 1;
};

struct StageSets {
  VertexSet b1;
  VertexSet b2;
  VertexSet b3;
  // missed[0]: type-2 fort disjoint from b1; missed[1]: type-3 fort disjoint
  // from b2; missed[2]: type-4 fort disjoint from b3.
  std::vector<Fort> missed;
};

// Throws DomainError on malformed choices; every returned fort has been
// checked with is_fort and for disjointness.
StageSets peony_lower_bound_stage_sets(const PeonyParams& p, const StageChoices& choices = {});

}  // namespace forcelab
