#include <doctest.h>

#include <random>

#include "forcelab/errors.hpp"
#include "forcelab/forts.hpp"
#include "forcelab/generators.hpp"
#include "mask_kernel.hpp"
#include "oracles.hpp"
#include "random_graph.hpp"

using namespace forcelab;

namespace {

std::vector<std::uint64_t> masks(const std::vector<Fort>& forts) {
  std::vector<std::uint64_t> out;
  for (const auto& f : forts) out.push_back(detail::to_mask(f.vertices));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("is_fort examples") {
  CHECK(is_fort(make_cycle(4), VertexSet(4, {0, 2})));
  CHECK_FALSE(is_fort(make_path(3), VertexSet(3, {0})));
  const PeonyParams p{3, 2, 1};
  CHECK(is_fort(make_peony(p), layer(p, 1, 1) | layer(p, 1, 2)));
  CHECK_THROWS_AS(is_fort(make_path(3), VertexSet(3)), DomainError);
}

TEST_CASE("type 1 forts") {
  for (int m = 3; m <= 4; ++m)
    for (int r = 2; r <= 3; ++r)
      for (int s = 1; s <= 3; ++s) {
        const PeonyParams p{m, r, s};
        const Graph g = make_peony(p);
        for (int i = 1; i <= m; ++i)
          for (int j1 = 1; j1 <= r; ++j1)
            for (int j2 = j1 + 1; j2 <= r; ++j2) {
              const Fort f = fort_type1(p, i, j1, j2);
              CHECK(f.kind == FortKind::Type1);
              CHECK(f.vertices.count() == static_cast<std::size_t>(2 * s));
              CHECK(is_fort(g, f.vertices));
              if (s >= 2) {
                // Dropping a layer end leaves it with one fort neighbour. An
                // interior vertex keeps two, so the smaller set is still a fort.
                for (int j : {j1, j2})
                  for (int k = 1; k <= s; ++k) {
                    VertexSet smaller = f.vertices;
                    smaller.erase(peony::spoke(p, i, j, k));
                    CHECK(is_fort(g, smaller) == (k != 1 && k != s));
                  }
              }
            }
      }
  CHECK_THROWS_AS(fort_type1({3, 2, 1}, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(fort_type1({3, 2, 1}, 1, 1, 3), DomainError);
}

TEST_CASE("type 2 forts") {
  const PeonyParams p{3, 2, 1};
  const Graph g = make_peony(p);
  int count = 0;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c) {
        const std::vector<int> choice{a, b, c};
        const Fort f = fort_type2(p, choice);
        CHECK(f.vertices.count() == 3);
        CHECK(is_fort(g, f.vertices));
        for (int i = 1; i <= 3; ++i) CHECK(neighbors_in(g, peony::hub(p, i), f.vertices) == 2);
        ++count;
      }
  CHECK(count == 8);
  const std::vector<int> short_choice{1, 1};
  CHECK_THROWS_AS(fort_type2(p, short_choice), DomainError);
}

TEST_CASE("type 3 forts") {
  const PeonyParams p{3, 2, 2};
  const Graph g = make_peony(p);
  int cases = 0;
  for (int i0 = 1; i0 <= 3; ++i0)
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        const std::vector<int> choice{a, b};
        const Fort f = fort_type3(p, i0, choice);
        CHECK(f.vertices.count() == static_cast<std::size_t>((p.m - 1) * p.s + 1));
        CHECK(is_fort(g, f.vertices));
        for (int i = 1; i <= 3; ++i) {
          const bool edge_hub = i == i0 || peony::hub(p, i) == peony::hub(p, i0 + 1);
          CHECK(neighbors_in(g, peony::hub(p, i), f.vertices) == (edge_hub ? 2U : 3U));
        }
        ++cases;
      }
  CHECK(cases == 12);
  const std::vector<int> choice{1, 1};
  CHECK_THROWS_AS(fort_type3(p, 0, choice), DomainError);
}

TEST_CASE("type 4 forts") {
  for (int s = 1; s <= 3; ++s) {
    const PeonyParams p{3, 2, s};
    const Graph g = make_peony(p);
    const int combos = s * s * s * s * s * s;
    for (int code = 0; code < combos; ++code) {
      std::vector<std::vector<int>> k(3, std::vector<int>(2));
      int rest = code;
      for (auto& row : k)
        for (auto& x : row) {
          x = rest % s + 1;
          rest /= s;
        }
      const Fort f = fort_type4(p, k);
      CHECK(f.vertices.count() == g.order() - static_cast<std::size_t>(p.m * p.r + 1));
      CHECK(is_fort(g, f.vertices));
      if (s == 1) {
        // Each chosen spoke has both its hub neighbours inside the fort.
        for (int i = 1; i <= 3; ++i)
          for (int j = 1; j <= 2; ++j) {
            const Vertex w = peony::spoke(p, i, j, 1);
            CHECK(neighbors_in(g, w, f.vertices) == 2);
          }
      }
    }
  }
  CHECK_THROWS_AS(fort_type4({3, 2, 1}, {{1, 1}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(fort_type4({3, 2, 1}, {{1, 2}, {1, 1}, {1, 1}}), DomainError);
}

TEST_CASE("extraction from failure") {
  const Fort c5 = extract_fort_from_failure(make_cycle(5), VertexSet(5, {0}));
  CHECK(c5.vertices == VertexSet(5, {1, 2, 3, 4}));
  const Fort p3 = extract_fort_from_failure(make_path(3), VertexSet(3, {1}));
  CHECK(p3.vertices == VertexSet(3, {0, 2}));
  CHECK(is_fort(make_path(3), p3.vertices));
  CHECK_THROWS_AS(extract_fort_from_failure(make_path(3), VertexSet(3, {0})), PreconditionError);

  std::mt19937_64 rng(31);
  int stalls = 0;
  while (stalls < 500) {
    const Graph g = testing::random_graph_between(2, 14, rng);
    const VertexSet b = testing::random_subset(g.order(), 0.25, rng);
    if (is_zero_forcing_set(g, b)) continue;
    const Fort f = extract_fort_from_failure(g, b);
    CHECK(is_fort(g, f.vertices));
    CHECK_FALSE(f.vertices.intersects(b));
    ++stalls;
  }
}

TEST_CASE("minimal fort enumeration examples") {
  const auto p2 = enumerate_minimal_forts(make_path(2), 2);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].vertices == VertexSet(2, {0, 1}));
  const auto c4 = enumerate_minimal_forts(make_cycle(4), 4);
  CHECK(masks(c4) == std::vector<std::uint64_t>{0b0101, 0b1010});
  const PeonyParams p{3, 2, 1};
  const auto small = enumerate_minimal_forts(make_peony(p), 2);
  for (int i = 1; i <= 3; ++i) {
    const VertexSet want = fort_type1(p, i, 1, 2).vertices;
    CHECK(std::any_of(small.begin(), small.end(), [&](const Fort& f) { return f.vertices == want; }));
  }
  CHECK_THROWS_AS(enumerate_minimal_forts(make_path(21), 3), UnsupportedError);
}

TEST_CASE("enumeration matches the definition oracle") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 60; ++t) {
    const Graph g = testing::random_graph_between(1, 11, rng);
    const auto expected = oracle::minimal_forts(g);
    const auto parallel = enumerate_minimal_forts(g, g.order(), 20, 4);
    const auto serial = enumerate_minimal_forts_serial(g, g.order());
    CHECK(masks(parallel) == expected);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(parallel[i].vertices == serial[i].vertices);
    for (std::size_t i = 1; i < parallel.size(); ++i) {
      const auto& a = parallel[i - 1].vertices;
      const auto& b = parallel[i].vertices;
      CHECK((a.count() < b.count() || (a.count() == b.count() && a.lex_compare(b) < 0)));
    }
    std::size_t all = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.order()); ++s) all += oracle::is_fort(g, s);
    CHECK(enumerate_forts(g, g.order()).size() == all);
  }
}

TEST_CASE("duality") {
  for (const Graph& g : {make_path(4), make_cycle(5), make_complete(4), make_web({3, 1})}) {
    const auto sweep = verify_duality_exhaustive(g);
    CHECK(sweep.subsets == (std::size_t{1} << g.order()));
    CHECK(sweep.disagreements == 0);
  }
  std::mt19937_64 rng(33);
  const Graph w = make_web({3, 1});
  for (int t = 0; t < 200; ++t) CHECK(verify_duality(w, testing::random_subset(6, 0.4, rng)));
  CHECK_THROWS_AS(verify_duality(make_path(21), VertexSet(21)), UnsupportedError);
}

TEST_CASE("hitting all forts equals hitting minimal forts") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 40; ++t) {
    const Graph g = testing::random_graph_between(2, 9, rng);
    const auto all = enumerate_forts(g, g.order());
    const auto minimal = enumerate_minimal_forts(g, g.order());
    for (int k = 0; k < 20; ++k) {
      const VertexSet b = testing::random_subset(g.order(), 0.4, rng);
      CHECK(hits_all(b, all) == hits_all(b, minimal));
      CHECK(hits_all(b, minimal) == is_zero_forcing_set(g, b));
    }
  }
}
