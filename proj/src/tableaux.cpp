#include "matchcx/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace matchcx {

bool is_partition(const Shape& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] <= 0) return false;
    if (i && s[i] > s[i - 1]) return false;
  }
  return true;
}

int shape_size(const Shape& s) {
  int n = 0;
  for (int x : s) n += x;
  return n;
}

Shape conjugate(const Shape& s) {
  Shape c;
  if (s.empty()) return c;
  for (int j = 0; j < s[0]; ++j) {
    int len = 0;
    while (len < static_cast<int>(s.size()) && s[static_cast<std::size_t>(len)] > j) ++len;
    c.push_back(len);
  }
  return c;
}

std::vector<Shape> partitions(int n) {
  std::vector<Shape> out;
  Shape cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  Shape s;
  for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
  if (!is_partition(s)) throw std::invalid_argument("tableau rows do not form a partition shape");
}

Shape Tableau::shape() const {
  Shape s;
  for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
  return s;
}

int Tableau::size() const { return shape_size(shape()); }

bool Tableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c && rows_[r][c] < rows_[r][c - 1]) return false;
      if (r && rows_[r][c] <= rows_[r - 1][c]) return false;
    }
  return true;
}

bool Tableau::is_standard() const {
  std::vector<int> all;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c && rows_[r][c] <= rows_[r][c - 1]) return false;
      if (r && rows_[r][c] <= rows_[r - 1][c]) return false;
      all.push_back(rows_[r][c]);
    }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Tableau::to_text() const {
  std::ostringstream out;
  for (const auto& r : rows_) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out << ' ';
      if (r[c] == kInfinity) out << "inf";
      else out << r[c];
    }
    out << '\n';
  }
  return out.str();
}

Tableau Tableau::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    std::vector<int> row;
    while (ls >> tok) {
      if (tok == "inf") {
        row.push_back(kInfinity);
      } else {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 1) throw std::invalid_argument("bad tableau entry '" + tok + "'");
        row.push_back(v);
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

BigInt f_lambda(const Shape& s) {
  if (!is_partition(s)) throw std::invalid_argument("f_lambda: not a partition");
  auto c = conjugate(s);
  BigInt num = 1, den = 1;
  int n = shape_size(s);
  for (int i = 2; i <= n; ++i) num *= i;
  for (std::size_t r = 0; r < s.size(); ++r)
    for (int j = 0; j < s[r]; ++j) den *= (s[r] - j - 1) + (c[static_cast<std::size_t>(j)] - static_cast<int>(r) - 1) + 1;
  return num / den;
}

BigInt catalan(int k) {
  if (k < 0) throw std::invalid_argument("catalan: k must be >= 0");
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
  return c / (k + 1);
}

std::vector<Tableau> syt_enumerate(const Shape& s) {
  if (!is_partition(s)) throw std::invalid_argument("syt_enumerate: not a partition");
  std::vector<Tableau> out;
  int n = shape_size(s);
  std::vector<std::vector<int>> rows(s.size());
  std::vector<int> filled(s.size(), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t r = 0; r < s.size(); ++r) {
      if (filled[r] >= s[r]) continue;
      if (r && filled[r] >= filled[r - 1]) continue;
      rows[r].push_back(k);
      ++filled[r];
      rec(k + 1);
      --filled[r];
      rows[r].pop_back();
    }
  };
  rec(1);
  return out;
}

std::pair<Tableau, Tableau> rsk(const std::vector<int>& word) {
  std::vector<std::vector<int>> p, q;
  for (std::size_t k = 0; k < word.size(); ++k) {
    int x = word[k];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p.size()) {
        p.emplace_back();
        q.emplace_back();
      }
      auto& row = p[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q[r].push_back(static_cast<int>(k) + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

InverseRs inverse_rs_tracked(const Tableau& pt, const Tableau& qt) {
  if (pt.shape() != qt.shape()) throw std::invalid_argument("inverse_rs: shapes differ");
  if (!qt.is_standard()) throw std::invalid_argument("inverse_rs: recording tableau is not standard");
  if (!pt.is_semistandard()) throw std::invalid_argument("inverse_rs: insertion tableau is not semistandard");
  auto p = pt.rows();
  auto q = qt.rows();
  int n = qt.size();
  InverseRs res;
  res.word.assign(static_cast<std::size_t>(n), 0);
  for (int k = n; k >= 1; --k) {
    std::size_t r = 0;
    while (q[r].empty() || q[r].back() != k) ++r;
    q[r].pop_back();
    int x = p[r].back();
    p[r].pop_back();
    std::size_t col = p[r].size();
    for (std::size_t rr = r; rr-- > 0;) {
      auto& row = p[rr];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      if (it == row.begin()) throw std::invalid_argument("inverse_rs: reverse bump failed");
      --it;
      col = static_cast<std::size_t>(it - row.begin());
      std::swap(x, *it);
    }
    res.word[static_cast<std::size_t>(k - 1)] = x;
    res.pops.push_back({k, x, static_cast<int>(col) + 1});
    while (!p.empty() && p.back().empty()) {
      p.pop_back();
      q.pop_back();
    }
  }
  return res;
}

std::vector<int> inverse_rs(const Tableau& p, const Tableau& q) { return inverse_rs_tracked(p, q).word; }

bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string word_to_string(const std::vector<int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += w[i] == kInfinity ? "inf" : std::to_string(w[i]);
  }
  return s;
}

namespace {

// a x b rectangle inside nu; a side <= 0 is contained vacuously.
bool contains_rect(const Shape& nu, int a, int b) {
  if (a <= 0 || b <= 0) return true;
  return static_cast<int>(nu.size()) >= a && nu[static_cast<std::size_t>(a - 1)] >= b;
}

}  // namespace

BigInt betti_fh(int m, int n, int p) {
  if (m < 1 || n < 1) throw std::invalid_argument("betti_fh: m, n must be >= 1");
  if (p < 0 || p > m || p > n) return 0;
  int a = m - p, b = n - p;
  BigInt total = 0;
  for (const auto& nu : partitions(p)) {
    if (!contains_rect(nu, a, b)) continue;
    // the forbidden rectangle with a side <= 0 never counts as contained
    if (a + 1 > 0 && b + 1 > 0 && contains_rect(nu, a + 1, b + 1)) continue;
    Shape lambda = nu;
    if (static_cast<int>(lambda.size()) < a) lambda.resize(static_cast<std::size_t>(a), 0);
    for (int i = 0; i < a; ++i) ++lambda[static_cast<std::size_t>(i)];
    Shape mu = nu;
    if (b > 0) {
      mu.push_back(b);
      std::sort(mu.begin(), mu.end(), std::greater<>());
    }
    total += f_lambda(lambda) * f_lambda(mu);
  }
  return total;
}

BigInt garst_top_rank(int m, int n) {
  if (m < 1 || m > n) throw std::invalid_argument("garst_top_rank: needs 1 <= m <= n");
  BigInt total = 0;
  for (const auto& lam : partitions(m)) {
    if (lam[0] > n - m) continue;
    Shape star = lam;
    star.insert(star.begin(), n - m);
    total += f_lambda(lam) * f_lambda(star);
  }
  return total;
}

}  // namespace matchcx
