#include <doctest.h>

#include <random>

#include "forcelab/constructions.hpp"
#include "forcelab/errors.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/generators.hpp"
#include "oracles.hpp"
#include "random_graph.hpp"

using namespace forcelab;

namespace {

VertexSet from_oracle(const std::vector<bool>& bits) {
  VertexSet s(bits.size());
  for (Vertex v = 0; v < bits.size(); ++v)
    if (bits[v]) s.insert(v);
  return s;
}

std::vector<bool> to_oracle(const VertexSet& s) {
  std::vector<bool> bits(s.universe());
  s.for_each([&](Vertex v) { bits[v] = true; });
  return bits;
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(closure(make_path(5), VertexSet(5, {0})).count() == 5);
  CHECK(closure(make_cycle(5), VertexSet(5, {0})) == VertexSet(5, {0}));
  const PeonyParams p{3, 2, 1};
  CHECK(closure(make_peony(p), peony_construction(p).set).count() == 10);
  CHECK_THROWS_AS(closure(make_path(5), VertexSet(4)), DomainError);
}

TEST_CASE("is_zero_forcing_set examples") {
  const Graph c4 = make_cycle(4);
  CHECK(is_zero_forcing_set(c4, c4.all_vertices()));
  CHECK_FALSE(is_zero_forcing_set(c4, VertexSet(4, {0})));
  const WebParams w{3, 1};
  const Graph g = make_web(w);
  CHECK(is_zero_forcing_set(g, VertexSet(6, {web::pendant(w, 1), web::pendant(w, 2)})));
}

TEST_CASE("closure matches the sweep oracle") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 400; ++t) {
    const Graph g = testing::random_graph_between(1, 14, rng);
    const VertexSet b = testing::random_subset(g.order(), 0.3, rng);
    CHECK(closure(g, b) == from_oracle(oracle::closure(g, to_oracle(b))));
  }
}

TEST_CASE("closure is idempotent and monotone") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 300; ++t) {
    const Graph g = testing::random_graph_between(2, 14, rng);
    const VertexSet b = testing::random_subset(g.order(), 0.25, rng);
    const VertexSet bigger = b | testing::random_subset(g.order(), 0.2, rng);
    const VertexSet cb = closure(g, b);
    CHECK(closure(g, cb) == cb);
    CHECK(b.is_subset_of(cb));
    CHECK(cb.is_subset_of(closure(g, bigger)));
  }
}

TEST_CASE("chronology examples") {
  const Chronology c = run_chronology(make_path(3), VertexSet(3, {0}));
  REQUIRE(c.steps.size() == 2);
  CHECK(c.steps[0] == std::vector<Force>{{0, 1}});
  CHECK(c.steps[1] == std::vector<Force>{{1, 2}});
  CHECK(run_chronology(make_path(5), VertexSet(5, {0})).steps.size() == 4);

  const PeonyParams p{6, 3, 4};
  const auto report = peony_construction(p);
  const auto e = report.chronology.expansion();
  REQUIRE(e.size() > static_cast<std::size_t>(p.s));
  CHECK(station(p, 1).is_subset_of(e[static_cast<std::size_t>(p.s)]));

  for (int m = 3; m <= 6; ++m)
    for (int r = (m + 1) / 2; r <= 4; ++r) {
      const WebParams w{m, r};
      const Graph g = make_web(w);
      VertexSet pendants(g.order());
      for (int i = 1; i <= m; ++i) pendants.insert(web::pendant(w, i));
      const auto ex = run_chronology(g, pendants, ForcePolicy::MaxConcurrent).expansion();
      REQUIRE(ex.size() > static_cast<std::size_t>(r));
      CHECK(ex[static_cast<std::size_t>(r)] == g.all_vertices());
    }
}

TEST_CASE("policies agree on the final set") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const Graph g = testing::random_graph_between(1, 12, rng);
    const VertexSet b = testing::random_subset(g.order(), 0.3, rng);
    const VertexSet expected = closure(g, b);
    for (auto policy : {ForcePolicy::AllEager, ForcePolicy::MaxConcurrent, ForcePolicy::Sequential}) {
      const Chronology c = run_chronology(g, b, policy);
      CHECK(c.final_blue() == expected);
      CHECK(validate_chronology(g, c).valid);
    }
    CHECK(run_random_chronology(g, b, rng).final_blue() == expected);
  }
}

TEST_CASE("expansion is monotone and every outside vertex is forced once") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 100; ++t) {
    const Graph g = testing::random_graph_between(2, 12, rng);
    const VertexSet b = testing::random_zero_forcing_set(g, rng);
    const Chronology c = run_random_chronology(g, b, rng);
    const auto e = c.expansion();
    for (std::size_t k = 1; k < e.size(); ++k) CHECK(e[k - 1].is_subset_of(e[k]));
    std::vector<int> forced(g.order(), 0);
    for (const auto& step : c.steps)
      for (const auto& f : step) ++forced[f.to];
    for (Vertex v = 0; v < g.order(); ++v) CHECK(forced[v] == (b.contains(v) ? 0 : 1));
  }
}

TEST_CASE("validation catches bad chronologies") {
  const Graph p3 = make_path(3);
  Chronology white_source{VertexSet(3, {0}), {{{2, 1}}}};
  auto check = validate_chronology(p3, white_source);
  CHECK_FALSE(check.valid);
  CHECK(check.step == 1);

  Chronology twice{VertexSet(3, {0}), {{{0, 1}}, {{0, 1}}}};
  check = validate_chronology(p3, twice);
  CHECK_FALSE(check.valid);
  CHECK(check.step == 2);

  Chronology not_unique{VertexSet(3, {1}), {{{1, 0}}}};
  CHECK_FALSE(validate_chronology(p3, not_unique).valid);

  Chronology good{VertexSet(3, {0}), {{{0, 1}}, {{1, 2}}}};
  CHECK(validate_chronology(p3, good).valid);
}

TEST_CASE("chain sets") {
  const auto p5 = run_chronology(make_path(5), VertexSet(5, {0}));
  const ChainSet chains = chain_set(p5);
  REQUIRE(chains.chains.size() == 1);
  CHECK(chains.chains[0] == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(terminus(p5) == VertexSet(5, {4}));

  Chronology broken{VertexSet(3, {0}), {{{0, 1}}, {{0, 2}}}};
  CHECK_THROWS_AS(chain_set(broken), DomainError);

  std::mt19937_64 rng(25);
  for (int t = 0; t < 150; ++t) {
    const Graph g = testing::random_graph_between(1, 12, rng);
    const VertexSet b = testing::random_zero_forcing_set(g, rng);
    const Chronology c = run_random_chronology(g, b, rng);
    const ChainSet cs = chain_set(c);
    CHECK(cs.chains.size() == b.count());
    VertexSet covered(g.order());
    for (const auto& chain : cs.chains) {
      CHECK(b.contains(chain.front()));
      for (Vertex v : chain) {
        CHECK_FALSE(covered.contains(v));
        covered.insert(v);
      }
      const auto sub = induced_subgraph(g, VertexSet(g.order(), chain));
      CHECK(sub.graph.size() + 1 == chain.size());
      for (std::size_t i = 1; i < chain.size(); ++i) CHECK(g.adjacent(chain[i - 1], chain[i]));
    }
    CHECK(covered == g.all_vertices());
  }
}

TEST_CASE("terminus forces") {
  const Graph k3 = make_complete(3);
  const Chronology none = run_chronology(k3, k3.all_vertices());
  CHECK(terminus(none) == k3.all_vertices());

  std::mt19937_64 rng(26);
  for (int t = 0; t < 300; ++t) {
    const Graph g = testing::random_graph_between(1, 12, rng);
    const VertexSet b = testing::random_zero_forcing_set(g, rng);
    const Chronology c = run_random_chronology(g, b, rng);
    const VertexSet term = terminus(c);
    CHECK(term.count() == b.count());
    CHECK(is_zero_forcing_set(g, term));
  }
}

TEST_CASE("restriction") {
  const Graph p5 = make_path(5);
  const Chronology c = run_chronology(p5, VertexSet(5, {0}));
  const auto same = restrict_chronology(p5, p5.all_vertices(), c);
  CHECK(same.chronology.initial == VertexSet(5, {0}));
  CHECK(same.chronology.steps.size() == c.steps.size());

  const auto tail = restrict_chronology(p5, VertexSet(5, {2, 3, 4}), c);
  CHECK(tail.chronology.initial == VertexSet(3, {0}));

  CHECK_THROWS_AS(restrict_chronology(make_cycle(5), VertexSet(5, {0}),
                                      run_chronology(make_cycle(5), VertexSet(5, {0}))),
                  PreconditionError);

  std::mt19937_64 rng(27);
  for (int t = 0; t < 200; ++t) {
    const Graph g = testing::random_graph_between(2, 10, rng);
    const VertexSet b = testing::random_zero_forcing_set(g, rng);
    const Chronology full = run_random_chronology(g, b, rng);
    VertexSet h = testing::random_subset(g.order(), 0.6, rng);
    if (h.empty()) h.insert(0);
    const auto r = restrict_chronology(g, h, full);
    CHECK(validate_chronology(r.sub.graph, r.chronology).valid);
    CHECK(is_zero_forcing_set(r.sub.graph, r.chronology.initial));
  }
}

TEST_CASE("web grid restriction gives a prism forcing set") {
  const WebParams w{9, 3};
  const Graph g = make_web(w);
  VertexSet grid(g.order());
  for (Vertex v = 0; v < 27; ++v) grid.insert(v);
  std::mt19937_64 rng(28);
  for (int t = 0; t < 20; ++t) {
    const VertexSet b = testing::random_zero_forcing_set(g, rng);
    const auto r = restrict_chronology(g, grid, run_random_chronology(g, b, rng));
    CHECK(is_zero_forcing_set(make_cycle_path_product(9, 3), r.chronology.initial));
    CHECK(r.chronology.initial.count() <= b.count());
  }
}
