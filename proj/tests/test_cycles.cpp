#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matchcx/boards.hpp"
#include "matchcx/cycles.hpp"
#include "matchcx/homology.hpp"

using namespace matchcx;

namespace {
VertexLabel r(int i, int j) { return VertexLabel::rook(i, j); }
}  // namespace

TEST_CASE("alpha and beta relations in the 2x2 board") {
  auto c = chessboard_complex(2, 2);
  Chain a = alpha_chain(2, 1, 2), b = -alpha_chain(1, 1, 2), g = -beta_chain(1, 2, 1), d = beta_chain(1, 2, 2);
  for (const auto& z : {a, b, g, d}) CHECK(is_cycle(z));
  CHECK(is_boundary(a - b, c));
  CHECK(is_boundary(b - g, c));
  CHECK(is_boundary(g - d, c));
  CHECK_FALSE(is_boundary(a, c));
  CHECK(torsion_order(a, c) == 0);
}

TEST_CASE("three alpha-beta products against hexagons in the 3x3 board") {
  auto c = chessboard_complex(3, 3);
  Chain X = wedge(alpha_chain(1, 1, 2), beta_chain(2, 3, 3));
  Chain Y = wedge(alpha_chain(3, 2, 3), beta_chain(1, 2, 1));
  Chain U1 = hexagon_u_chain(2, 3, 1, 2, 3), V1 = hexagon_v_chain(1, 2, 3, 1, 2);
  Chain U2 = hexagon_u_chain(1, 2, 1, 2, 3), V2 = hexagon_v_chain(1, 2, 3, 2, 3);
  for (const auto& z : {X, Y, U1, V1, U2, V2}) CHECK(is_cycle(z));
  Chain w = Chain::from_oriented({r(1, 1), r(2, 2), r(3, 3)}) + Chain::from_oriented({r(1, 2), r(2, 3), r(3, 1)}) +
            Chain::from_oriented({r(1, 2), r(2, 1), r(3, 3)}) + Chain::from_oriented({r(1, 1), r(3, 2), r(2, 3)});
  CHECK(boundary(w) == U1 + V1 - X - 2 * Y);
  CHECK(is_boundary(3 * X + U1 + V1 + 2 * (V2 + U2), c));
  CHECK_FALSE(is_boundary(X, c));
  // the relation needs the 2-faces
  CHECK_FALSE(is_boundary(3 * X + U1 + V1 + 2 * (V2 + U2), chessboard_complex(3, 3, 1)));
}

TEST_CASE("hexagons and pentagons") {
  CHECK(transpose(hexagon_u_chain(1, 2, 1, 2, 3)) == hexagon_v_chain(1, 2, 3, 1, 2));
  CHECK(hexagon_u_chain(1, 2, 1, 2, 3).size() == 6);
  auto p = pentagon_chain(3, 4, 5);
  CHECK(is_cycle(p));
  CHECK(p.size() == 5);
  CHECK(torsion_order(p, matching_complex(5)) == 0);
  CHECK_THROWS(hexagon_u_chain(1, 1, 1, 2, 3));
}

TEST_CASE("rho cycles") {
  CHECK(rho_chain({1}, {1, 2}) == alpha_chain(1, 1, 2));
  CHECK(rho_chain({}, {4}) == Chain::empty_face());
  auto z = rho_fundamental({1, 2}, {1, 3, 8});
  CHECK(z.chain.size() == 6);
  CHECK(is_cycle(z.chain));
  CHECK(torsion_order(z.chain, *z.ambient) == 0);
  for (int m = 1; m <= 3; ++m) {
    auto rows = iota_range(1, m);
    auto cols = iota_range(1, m + 1);
    CHECK(is_cycle(rho_chain(rows, cols)));
  }
}

TEST_CASE("torsion witnesses") {
  auto z = named_generators("z7", {});
  CHECK(torsion_order(z.chain, *z.ambient) == 3);
  auto t = named_generators("thm5.6", {{5, 5}, {}, {}, {}});
  CHECK(t.chain == wedge(wedge(alpha_chain(1, 1, 2), alpha_chain(2, 3, 4)), beta_chain(3, 4, 5)));
  CHECK(torsion_order(t.chain, *t.ambient) == 3);
  auto alias = named_generators("chess-torsion", {{5, 5}, {}, {}, {}});
  CHECK(alias.chain == t.chain);
  auto w = named_generators("blvz-witness", {{3, 3}, {}, {}, {}});
  CHECK(is_cycle(w.chain));
  CHECK_FALSE(is_boundary(w.chain, *w.ambient));
  for (int n = 3; n <= 6; ++n) {
    auto b = named_generators("lemma8.1", {{n}, {}, {}, {}});
    CHECK(is_cycle(b.chain));
    CHECK_FALSE(is_boundary(b.chain, *b.ambient));
  }
  for (int n : {6, 7, 9}) {
    auto tw = named_generators("lemma2.5", {{n}, {}, {}, {}});
    CHECK(is_cycle(tw.chain));
  }
  CHECK_THROWS_AS(named_generators("nope", {}), std::invalid_argument);
  CHECK_THROWS_AS(named_generators("thm5.6", {{4, 4}, {}, {}, {}}), std::invalid_argument);
}

TEST_CASE("chessboard generator families") {
  for (auto [m, n] : {std::pair{3, 3}, {3, 4}, {5, 5}}) {
    auto fam = chess_generator_family(iota_range(1, m), iota_range(1, n));
    int k = nu_chess(m, n);
    auto rep = span_check(chessboard_complex(m, n, k + 1), k, fam);
    CHECK(rep.spans());
  }
  // the 4x4 board: rationally and mod 3 complete, index 2 over Z
  auto fam = chess_generator_family(iota_range(1, 4), iota_range(1, 4));
  auto c = chessboard_complex(4, 4, 3);
  auto rep = span_check(c, 2, fam);
  CHECK(rep.spanned_rank == rep.cycle_rank);
  CHECK(rep.rank_mod3 == rep.cycle_rank_mod3);
  CHECK(rep.index_factors == std::vector<BigInt>{2});
}

TEST_CASE("vertex differences generate reduced H0") {
  auto c = chessboard_complex(2, 3);
  std::vector<VertexLabel> vs;
  for (std::size_t t = 0; t < c.faces(0).size(); ++t) vs.push_back(c.faces(0)[t][0]);
  auto fam = vertex_differences(vs);
  CHECK(fam.size() == 5);
  CHECK(span_check(c, 0, fam).spans());
}
