#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace matchcx;
using namespace matchcx::testing;

namespace {
VertexLabel e(int i, int j) { return VertexLabel::edge(i, j); }
}  // namespace

TEST_CASE("phi wedges with the distinguished difference") {
  LesMapSpec s{LesFamily::Matching, 0, 6, 1, 3, 0};
  CHECK(values(les_phi_domain(s)) == std::vector<int>{4, 5, 6});
  Chain z = Chain::from_oriented({e(4, 5)});
  Chain want = Chain::from_oriented({e(1, 3), e(4, 5)}) - Chain::from_oriented({e(1, 2), e(4, 5)});
  CHECK(les_phi(s, z) == want);
  CHECK_THROWS(les_phi(s, Chain::from_oriented({e(3, 4)})));
  CHECK_THROWS(les_phi({LesFamily::Matching, 0, 6, 3, 3, 0}, z));
  CHECK(is_cycle(les_phi(s, Chain::from_oriented({e(4, 5)}) - Chain::from_oriented({e(4, 6)}))));
}

TEST_CASE("psi extracts the matching coefficient") {
  LesMapSpec s{LesFamily::Matching, 0, 7, 0, 3, 4};
  Chain x = Chain::from_oriented({e(1, 3), e(2, 4), e(5, 6)});
  CHECK(les_psi(s, x) == Chain::from_oriented({e(5, 6)}));
  CHECK(les_psi(s, Chain::from_oriented({e(5, 6), e(2, 4), e(1, 3)})) == -Chain::from_oriented({e(5, 6)}));
  CHECK(les_psi(s, Chain::from_oriented({e(1, 3), e(2, 5), e(6, 7)})).is_zero());
  CHECK(values(les_psi_target(s)) == std::vector<int>{5, 6, 7});
  CHECK_THROWS(les_psi({LesFamily::Matching, 0, 7, 0, 3, 3}, x));
}

TEST_CASE("chessboard phi and psi") {
  LesMapSpec s{LesFamily::Chessboard, 3, 3, 1, 2, 0};
  Chain z = Chain::from_oriented({VertexLabel::rook(3, 2)});
  Chain want = Chain::from_oriented({VertexLabel::rook(1, 1), VertexLabel::rook(3, 2)}) -
               Chain::from_oriented({VertexLabel::rook(2, 1), VertexLabel::rook(3, 2)});
  CHECK(les_phi(s, z) == want);
  LesMapSpec p{LesFamily::Chessboard, 3, 3, 0, 2, 3};
  Chain x = Chain::from_oriented({VertexLabel::rook(1, 3), VertexLabel::rook(2, 1), VertexLabel::rook(3, 2)});
  CHECK(les_psi(p, x) == Chain::from_oriented({VertexLabel::rook(3, 2)}));
}

TEST_CASE("delta has two opposite components") {
  LesMapSpec s{LesFamily::Matching, 0, 7, 0, 3, 4};
  Chain z = Chain::from_oriented({e(5, 6)}) - Chain::from_oriented({e(5, 7)});
  auto d = les_delta(s, z);
  REQUIRE(d.size() == 2);
  CHECK(d[0].second == -d[1].second);
  CHECK(d[0].first.i == 3);
  CHECK(d[1].first.i == 4);
}

TEST_CASE("psi of phi is a boundary") {
  auto r = psi_phi_boundaries(7, 20, 1);
  CHECK(r.inputs == 20);
  CHECK(r.failures == 0);
  auto r8 = psi_phi_boundaries(8, 10, 2);
  CHECK(r8.failures == 0);
}

TEST_CASE("phi images generate bottom homology") {
  for (int n : {6, 7}) {
    auto fam = matching_phi_images(n);
    auto rep = span_check(matching_complex(n, 2), 1, fam);
    CHECK(rep.spans());
  }
}

TEST_CASE("tail of the sequence at the 4x4 board") {
  auto r = chess44_tail();
  CHECK(r.h_rank == 15);
  CHECK(r.phi_rank == 6);
  CHECK(r.psi_rank == 9);
  CHECK(r.psi_phi_zero);
  CHECK(r.ok());
}
