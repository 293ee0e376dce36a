#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "matchcx/boards.hpp"
#include "matchcx/homology.hpp"
#include "matchcx/tableaux.hpp"

using namespace matchcx;

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// hook length formula
BigInt hooks(const Shape& s) {
  auto c = conjugate(s);
  BigInt prod = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (int j = 0; j < s[i]; ++j) prod *= (s[i] - j - 1) + (c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
  return factorial(shape_size(s)) / prod;
}

std::size_t longest_increasing(const std::vector<int>& w) {
  std::vector<std::size_t> best(w.size(), 1);
  std::size_t out = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (w[j] <= w[i]) best[i] = std::max(best[i], best[j] + 1);
    out = std::max(out, best[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("partitions and conjugates") {
  std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(partitions(n).size() == counts[static_cast<std::size_t>(n)]);
  CHECK(partitions(3) == std::vector<Shape>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(conjugate({3, 1}) == Shape{2, 1, 1});
  for (auto& s : partitions(7)) CHECK(conjugate(conjugate(s)) == s);
  CHECK_FALSE(is_partition({1, 2}));
}

TEST_CASE("standard tableau counts") {
  CHECK(f_lambda({3, 2, 1}) == 16);
  CHECK(f_lambda({2, 2}) == 2);
  for (int n = 1; n <= 7; ++n) {
    BigInt sum = 0;
    for (auto& s : partitions(n)) {
      CHECK(f_lambda(s) == hooks(s));
      CHECK(syt_enumerate(s).size() == f_lambda(s).get_ui());
      for (auto& t : syt_enumerate(s)) CHECK(t.is_standard());
      sum += f_lambda(s) * f_lambda(s);
    }
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(5) == 42);
  for (int k = 0; k <= 12; ++k) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
    CHECK(catalan(k) == c / (k + 1));
    if (k > 0) CHECK(f_lambda({k, k}) == catalan(k));
  }
}

TEST_CASE("RSK is a bijection and respects increasing subsequences") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> w(static_cast<std::size_t>(3 + trial % 6));
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    auto [p, q] = rsk(w);
    CHECK(p.is_standard());
    CHECK(q.is_standard());
    CHECK(p.shape() == q.shape());
    CHECK(static_cast<std::size_t>(p.shape()[0]) == longest_increasing(w));
    CHECK(inverse_rs(p, q) == w);
  }
  std::vector<int> w = {kInfinity, kInfinity, 2, kInfinity, 4, kInfinity, 3, 1};
  auto [p, q] = rsk(w);
  CHECK(p == Tableau({{1, 3, kInfinity, kInfinity}, {2, kInfinity}, {4}, {kInfinity}}));
  CHECK(q == Tableau({{1, 2, 4, 6}, {3, 5}, {7}, {8}}));
  CHECK(p.is_semistandard());
  CHECK(inverse_rs(p, q) == w);
  CHECK(Tableau::parse(p.to_text()) == p);
  CHECK(word_to_string(w) == "inf inf 2 inf 4 inf 3 1");
}

TEST_CASE("word order") {
  CHECK(word_less({1, 2, 3}, {1, 3, 2}));
  CHECK_FALSE(word_less({1, 3, 2}, {1, 2, 3}));
  CHECK(word_less({2, kInfinity}, {kInfinity, 1}));
}

TEST_CASE("rational Betti oracle against SNF") {
  CHECK(garst_top_rank(2, 4) == 5);
  CHECK(garst_top_rank(3, 5) == 14);
  for (int m = 1; m <= 4; ++m)
    for (int n = m; n <= 5; ++n) {
      auto c = chessboard_complex(m, n);
      for (int p = 1; p <= m; ++p) CHECK(betti_fh(m, n, p) == homology(c, p - 1).betti);
      CHECK(garst_top_rank(m, n) == homology(c, m - 1).betti);
    }
  CHECK_THROWS(garst_top_rank(3, 2));
}
