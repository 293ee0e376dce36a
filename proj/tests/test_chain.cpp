#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "matchcx/chain.hpp"
#include "matchcx/cycles.hpp"
#include "matchcx/label.hpp"

using namespace matchcx;

namespace {

VertexLabel e(int i, int j) { return VertexLabel::edge(i, j); }
VertexLabel r(int i, int j) { return VertexLabel::rook(i, j); }

int inversion_sign(const std::vector<VertexLabel>& v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[j] < v[i]) s = -s;
  return s;
}

// Random chain of the given degree on disjoint edges drawn from ground [lo, lo + 2*(deg+1) + extra).
Chain random_chain(std::mt19937& rng, int deg, int lo, int span) {
  Chain c(deg);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < 4; ++t) {
    std::vector<int> g(static_cast<std::size_t>(span));
    for (int i = 0; i < span; ++i) g[static_cast<std::size_t>(i)] = lo + i;
    std::shuffle(g.begin(), g.end(), rng);
    std::vector<VertexLabel> vs;
    for (int k = 0; k <= deg; ++k) vs.push_back(e(g[static_cast<std::size_t>(2 * k)], g[static_cast<std::size_t>(2 * k + 1)]));
    c.add_oriented(vs, coeff(rng));
  }
  return c;
}

}  // namespace

TEST_CASE("labels order plain before primed and print compactly") {
  CHECK(e(1, 3).to_string() == "1-3");
  CHECK(r(2, 5).to_string() == "2-5'");
  CHECK(e(3, 1) == e(1, 3));
  CHECK(r(2, 5).row() == 2);
  CHECK(r(2, 5).col() == 5);
  CHECK(VertexLabel::parse("2-5'") == r(2, 5));
  CHECK(VertexLabel::parse("4-1") == e(1, 4));
  CHECK_THROWS(e(2, 2));
}

TEST_CASE("canonical_orient sorts and returns the permutation parity") {
  auto [s, sign] = canonical_orient(std::vector<VertexLabel>{e(2, 4), e(1, 3)});
  CHECK(s == Simplex{e(1, 3), e(2, 4)});
  CHECK(sign == -1);
  auto [s2, sign2] = canonical_orient(s);
  CHECK(s2 == s);
  CHECK(sign2 == 1);
  CHECK_THROWS_AS(canonical_orient(std::vector<VertexLabel>{e(1, 2), e(1, 2)}), std::invalid_argument);

  std::mt19937 rng(7);
  std::vector<VertexLabel> base{e(1, 2), e(3, 4), e(5, 6), e(7, 8), e(9, 10)};
  for (int trial = 0; trial < 50; ++trial) {
    auto v = base;
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(canonical_orient(v).second == inversion_sign(v));
    auto w = v;
    std::shuffle(w.begin(), w.end(), rng);
    // sign(w) = sign(v) * sign of the permutation taking v to w
    std::vector<int> pos;
    for (auto& x : w) pos.push_back(static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin()));
    int rel = 1;
    for (std::size_t i = 0; i < pos.size(); ++i)
      for (std::size_t j = i + 1; j < pos.size(); ++j)
        if (pos[j] < pos[i]) rel = -rel;
    CHECK(canonical_orient(w).second == canonical_orient(v).second * rel);
  }
}

TEST_CASE("chain arithmetic and boundary") {
  Chain a = Chain::from_oriented({e(1, 2), e(3, 4)});
  Chain b = Chain::from_oriented({e(3, 4), e(1, 2)});
  CHECK((a + b).is_zero());
  CHECK(boundary(a) == Chain::from_oriented({e(3, 4)}) - Chain::from_oriented({e(1, 2)}));
  CHECK(boundary(Chain::from_oriented({e(1, 2)})) == Chain::empty_face());
  CHECK_THROWS(a + Chain::from_oriented({e(1, 2)}));

  std::mt19937 rng(11);
  for (int deg = 0; deg <= 3; ++deg) CHECK(boundary(boundary(random_chain(rng, deg, 1, 10))).is_zero());
}

TEST_CASE("wedge expands bilinearly") {
  Chain w = wedge(alpha_chain(1, 1, 2), beta_chain(2, 3, 3));
  Chain want = Chain::from_oriented({r(1, 1), r(2, 3)}) - Chain::from_oriented({r(1, 1), r(3, 3)}) -
               Chain::from_oriented({r(1, 2), r(2, 3)}) + Chain::from_oriented({r(1, 2), r(3, 3)});
  CHECK(w == want);
  CHECK(w.size() == 4);
  CHECK_THROWS(wedge(alpha_chain(1, 1, 2), alpha_chain(1, 3, 4)));
}

TEST_CASE("Leibniz rule for the wedge") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int da = trial % 3, db = (trial / 3) % 3;
    Chain a = random_chain(rng, da, 1, 2 * da + 4);
    Chain b = random_chain(rng, db, 20, 2 * db + 4);
    int sign = (da + 1) % 2 == 0 ? 1 : -1;
    Chain lhs = boundary(wedge(a, b));
    Chain rhs = wedge(boundary(a), b) + sign * wedge(a, boundary(b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("inner product and transpose") {
  Chain a = alpha_chain(1, 1, 2);
  CHECK(inner_product(a, a) == 2);
  CHECK(inner_product(a, beta_chain(1, 2, 1)) == 1);
  CHECK(transpose(alpha_chain(1, 1, 2)) == beta_chain(1, 2, 1));
  CHECK(transpose(transpose(hexagon_u_chain(1, 2, 1, 2, 3))) == hexagon_u_chain(1, 2, 1, 2, 3));
}
