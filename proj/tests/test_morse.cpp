#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matchcx/boards.hpp"
#include "matchcx/homology.hpp"
#include "matchcx/morse.hpp"
#include "support.hpp"

using namespace matchcx;

namespace {
VertexLabel e(int i, int j) { return VertexLabel::edge(i, j); }
}  // namespace

TEST_CASE("greedy partition example") {
  Simplex g{e(1, 7), e(3, 8), e(4, 5)};
  auto p = rho_partition(g, 10);
  CHECK(mu(p) == 3);
  CHECK(p.blocks.front().vertices == std::vector<int>{1, 2, 7});
  CHECK(rho_partition({}, 3).lambda() == Shape{2, 1});
  CHECK(rho_partition({}, 4).blocks.size() == 2);
  CHECK(p.to_string().find("{3,4,5,8}") != std::string::npos);
  CHECK(p.lambda() == Shape{4, 3, 2, 1});
  auto q = rho_partition({e(1, 2), e(3, 4)}, 4);
  REQUIRE(q.blocks.size() == 2);
  CHECK(q.blocks[1].vertices == std::vector<int>{3, 4});
  CHECK_THROWS(rho_partition({e(1, 2), e(2, 3)}, 4));
}

TEST_CASE("partition invariants for every matching") {
  for (int n = 1; n <= 8; ++n) {
    auto r = testing::partition_invariants(n);
    CHECK(r.matchings > 0);
    CHECK(r.violations == 0);
  }
}

TEST_CASE("weak Morse inequalities") {
  for (int n = 4; n <= 8; ++n) {
    int d = nu_matching(n) + 1;
    auto r = morse_pairs(n, d);
    auto c = matching_complex(n);
    for (int k = 0; k < d; ++k) {
      auto h = homology(c, k), h1 = homology(c, k - 1);
      CHECK(r.critical_by_dim[static_cast<std::size_t>(k + 1)] >= h.betti + h.torsion.size() + h1.torsion.size());
    }
  }
}

TEST_CASE("critical cell counts") {
  std::vector<long> want = {0, 2, 4, 6, 16, 40, 192, 224, 640};
  for (int n = 2; n <= 10; ++n) CHECK(critical_count_formula(n) == want[static_cast<std::size_t>(n - 2)]);
  for (int n = 2; n <= 9; ++n) {
    int nu = nu_matching(n);
    auto r = morse_pairs(n, nu + 1);
    CHECK(r.acyclic);
    CHECK(r.unmatched == 0);
    CHECK(r.pattern_mismatches == 0);
    CHECK(r.critical_by_dim[static_cast<std::size_t>(nu + 1)] == critical_count_formula(n).get_ui());
    // below the bottom degree only the empty cell survives
    for (int k = 0; k < nu; ++k) CHECK(r.critical_by_dim[static_cast<std::size_t>(k + 1)] == 0);
  }
}

TEST_CASE("critical cells bound the rank") {
  for (int n = 3; n <= 8; ++n) {
    auto r = morse_pairs(n, nu_matching(n) + 1);
    int nu = nu_matching(n);
    CHECK(homology(matching_complex(n, nu + 1), nu).rank() <= r.critical_by_dim[static_cast<std::size_t>(nu + 1)]);
  }
}

TEST_CASE("lexicographic shelling of the bottom skeleton") {
  for (int n = 3; n <= 8; ++n) {
    int nu = nu_matching(n);
    auto c = matching_complex(n, nu);
    auto s = verify_shelling(c, lex_facet_order(n));
    CHECK(s.ok);
    // homology facets give the top Betti number of a shellable complex
    CHECK(s.homology_facets == homology(c, nu).betti);
  }
  auto c6 = matching_complex(6, 1);
  CHECK_FALSE(verify_shelling(c6, lex_facet_order(6, FacetOrder::Literal)).ok);
  auto bad = lex_facet_order(5);
  bad.pop_back();
  CHECK_THROWS(verify_shelling(matching_complex(5, 1), bad));
}

TEST_CASE("rank recurrences") {
  KnownRanks kr;
  for (int n = 0; n <= 9; ++n) kr[n] = computed_rank_matching(n);
  CHECK(kr[7] == 1);
  CHECK(kr[8] == 132);
  for (int n = 3; n <= 9; ++n) {
    if (n % 3 == 1) {
      CHECK_THROWS(rank_bounds_matching(n, kr));
      continue;
    }
    auto b = rank_bounds_matching(n, kr);
    REQUIRE(b.upper);
    CHECK(kr[n] <= *b.upper);
    if (b.lower) CHECK(*b.lower <= kr[n]);
  }
  KnownChessRanks kc;
  for (int m = 0; m <= 5; ++m)
    for (int n = m; n <= 6; ++n) kc[{m, n}] = computed_rank_chess(m, n);
  CHECK(kc[{5, 6}] == 152);
  for (int m = 2; m <= 5; ++m)
    for (int n = m; n <= 6; ++n) {
      if ((m + n) % 3 == 1 || n >= 2 * m - 1) continue;
      auto b = rank_bounds_chess(m, n, kc);
      CHECK(kc[{m, n}] <= *b.upper);
      if (b.lower) CHECK(*b.lower <= kc[{m, n}]);
    }
  CHECK_THROWS(rank_bounds_chess(3, 6, kc));
}
