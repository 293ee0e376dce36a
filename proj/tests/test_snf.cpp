#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "matchcx/errors.hpp"
#include "matchcx/snf.hpp"

using namespace matchcx;

namespace {

using Dense = std::vector<std::vector<BigInt>>;

BigInt det(Dense a) {
  // cofactor expansion, fine for k <= 5
  std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  BigInt d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    Dense minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[i][c]);
      minor.push_back(row);
    }
    BigInt t = a[0][j] * det(minor);
    if (j % 2) d -= t;
    else d += t;
  }
  return d;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// invariant factors from determinantal divisors: s_k = D_k / D_{k-1}
std::vector<BigInt> oracle_factors(const Dense& a, std::size_t rows, std::size_t cols) {
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    BigInt g = 0;
    for (auto& r : rs)
      for (auto& c : cs) {
        Dense m;
        for (auto i : r) {
          std::vector<BigInt> row;
          for (auto j : c) row.push_back(a[i][j]);
          m.push_back(row);
        }
        BigInt d = det(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

SparseIntMatrix to_sparse(const Dense& a, std::size_t rows, std::size_t cols) {
  SparseIntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.push(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), a[i][j]);
  m.normalize();
  return m;
}

}  // namespace

TEST_CASE("small diagonal examples") {
  SparseIntMatrix m(2, 2);
  m.push(0, 0, 2);
  m.push(1, 1, 3);
  m.normalize();
  auto r = smith_normal_form(m);
  CHECK(r.rank() == 2);
  CHECK(r.invariant_factors() == std::vector<BigInt>{1, 6});
  CHECK(r.nontrivial() == std::vector<BigInt>{6});
  CHECK(r.determinant_product() == 6);

  SparseIntMatrix z(3, 4);
  CHECK(smith_normal_form(z).rank() == 0);
  CHECK(normalize_invariant_factors({4, 6, 1}) == std::vector<BigInt>{2, 12});
}

TEST_CASE("SNF agrees with determinantal divisors on random matrices") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dim(1, 5), val(-4, 4), density(0, 2);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
    Dense a(rows, std::vector<BigInt>(cols, 0));
    for (auto& row : a)
      for (auto& x : row)
        if (density(rng) == 0) x = val(rng);
    auto want = oracle_factors(a, rows, cols);
    auto got = smith_normal_form(to_sparse(a, rows, cols));
    CHECK(got.invariant_factors() == want);
    CHECK(rank_mod_p(to_sparse(a, rows, cols), 1000003) == want.size());
  }
}

TEST_CASE("dense fallback path agrees") {
  // a matrix without unit entries forces the residual block
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    Dense a(4, std::vector<BigInt>(4, 0));
    for (auto& row : a)
      for (auto& x : row) x = 2 * val(rng);
    auto got = smith_normal_form(to_sparse(a, 4, 4));
    CHECK(got.invariant_factors() == oracle_factors(a, 4, 4));
  }
}

TEST_CASE("rank mod p") {
  SparseIntMatrix m(2, 2);
  m.push(0, 0, 3);
  m.push(1, 1, 5);
  m.normalize();
  CHECK(rank_mod_p(m, 3) == 1);
  CHECK(rank_mod_p(m, 5) == 1);
  CHECK(rank_mod_p(m, 7) == 2);
  CHECK_THROWS_AS(rank_mod_p(m, 4), std::invalid_argument);
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("expired deadline aborts") {
  SparseIntMatrix m(60, 60);
  for (std::uint32_t i = 0; i < 60; ++i) {
    m.push(i, i, 2);
    m.push(i, (i + 1) % 60, 3);
  }
  m.normalize();
  SnfOptions opts;
  opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  CHECK_THROWS_AS(smith_normal_form(m, opts), ScaleGuardError);
  CHECK(smith_normal_form(m).rank() == 60);
}

TEST_CASE("SMS round trip") {
  SparseIntMatrix m(3, 2);
  m.push(0, 1, -7);
  m.push(2, 0, BigInt("123456789012345678901234567890"));
  m.normalize();
  std::stringstream ss;
  write_sms(ss, m);
  CHECK(ss.str().rfind("3 2 M\n", 0) == 0);
  CHECK(read_sms(ss) == m);
  std::stringstream bad("2 2 M\n3 1 4\n0 0 0\n");
  CHECK_THROWS(read_sms(bad));
}
