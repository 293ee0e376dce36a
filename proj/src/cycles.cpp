#include "matchcx/cycles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "matchcx/boards.hpp"

namespace matchcx {

namespace {

using VL = VertexLabel;

Chain vertex(VL v, int c = 1) { return Chain::from_oriented({v}, c); }
Chain pair_term(VL a, VL b) { return Chain::from_oriented({a, b}); }

void require_distinct(std::vector<int> xs, const char* what) {
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    throw std::invalid_argument(std::string(what) + ": labels must be distinct");
}

std::vector<int> sorted_unique(std::vector<int> v, const char* what) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw std::invalid_argument(std::string(what) + ": repeated label");
  return v;
}

int need(const CycleParams& p, std::size_t count, const std::string& kind) {
  if (p.args.size() != count)
    throw std::invalid_argument(kind + " expects " + std::to_string(count) + " integer argument(s)");
  return 0;
}

std::shared_ptr<const Complex> share(Complex c) { return std::make_shared<const Complex>(std::move(c)); }

int parity(const std::vector<int>& w) {
  int s = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) s = -s;
  return s;
}

}  // namespace

NamedCycle make_named(Chain z, std::shared_ptr<const Complex> ambient, std::string provenance) {
  if (!ambient) throw std::invalid_argument("named cycle without ambient complex");
  if (!boundary(z).is_zero()) throw std::invalid_argument(provenance + ": chain is not a cycle");
  ambient->coordinates(z);
  return {std::move(z), std::move(ambient), std::move(provenance)};
}

Chain alpha_chain(int i, int k, int l) {
  if (k == l) throw std::invalid_argument("alpha: column labels coincide");
  return vertex(VL::rook(i, k)) - vertex(VL::rook(i, l));
}

Chain beta_chain(int i, int j, int k) {
  if (i == j) throw std::invalid_argument("beta: row labels coincide");
  return vertex(VL::rook(i, k)) - vertex(VL::rook(j, k));
}

Chain pentagon_chain(int a, int b, int r) {
  require_distinct({1, 2, a, b, r}, "pentagon");
  auto e = VL::edge;
  return pair_term(e(1, a), e(2, b)) + pair_term(e(2, b), e(r, a)) + pair_term(e(r, a), e(1, 2)) +
         pair_term(e(1, 2), e(r, b)) + pair_term(e(r, b), e(1, a));
}

Chain hexagon_u_chain(int i1, int i2, int j1, int j2, int j3) {
  require_distinct({i1, i2}, "hexagon_u rows");
  require_distinct({j1, j2, j3}, "hexagon_u columns");
  auto r = VL::rook;
  return pair_term(r(i1, j1), r(i2, j2)) + pair_term(r(i2, j2), r(i1, j3)) + pair_term(r(i1, j3), r(i2, j1)) +
         pair_term(r(i2, j1), r(i1, j2)) + pair_term(r(i1, j2), r(i2, j3)) + pair_term(r(i2, j3), r(i1, j1));
}

Chain hexagon_v_chain(int i1, int i2, int i3, int j1, int j2) {
  require_distinct({i1, i2, i3}, "hexagon_v rows");
  require_distinct({j1, j2}, "hexagon_v columns");
  auto r = VL::rook;
  return pair_term(r(i1, j1), r(i2, j2)) + pair_term(r(i2, j2), r(i3, j1)) + pair_term(r(i3, j1), r(i1, j2)) +
         pair_term(r(i1, j2), r(i2, j1)) + pair_term(r(i2, j1), r(i3, j2)) + pair_term(r(i3, j2), r(i1, j1));
}

Chain rho_chain(std::vector<int> rows, std::vector<int> cols) {
  rows = sorted_unique(std::move(rows), "rho rows");
  cols = sorted_unique(std::move(cols), "rho columns");
  if (rows.size() + 1 != cols.size()) throw std::invalid_argument("rho: need |A| = |B| - 1");
  constexpr int kInf = 1 << 20;
  std::vector<int> word = rows;
  word.push_back(kInf);
  Chain out(static_cast<int>(rows.size()) - 1);
  std::vector<VL> verts;
  do {
    verts.clear();
    for (std::size_t p = 0; p < word.size(); ++p)
      if (word[p] != kInf) verts.push_back(VL::rook(word[p], cols[p]));
    std::sort(verts.begin(), verts.end());
    out.add(verts, parity(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

Chain z7_chain() {
  auto e = VL::edge;
  return pair_term(e(1, 3), e(2, 4)) + pair_term(e(2, 4), e(1, 5)) + pair_term(e(1, 5), e(2, 6)) +
         pair_term(e(2, 6), e(1, 3));
}

Chain triple_wedge_chain(int n, const std::vector<int>& sigma) {
  if (n < 3) throw std::invalid_argument("triple wedge needs n >= 3");
  std::vector<int> s = sigma;
  if (s.empty())
    for (int i = 1; i <= n; ++i) s.push_back(i);
  if (static_cast<int>(s.size()) != n) throw std::invalid_argument("sigma must have n entries");
  auto chk = s;
  std::sort(chk.begin(), chk.end());
  for (int i = 0; i < n; ++i)
    if (chk[static_cast<std::size_t>(i)] != i + 1) throw std::invalid_argument("sigma is not a permutation of 1..n");
  std::vector<Chain> f;
  for (int k = 0; k + 3 <= n; k += 3) {
    auto at = [&](int p) { return s[static_cast<std::size_t>(k + p)]; };
    f.push_back(vertex(VL::edge(at(0), at(1))) - vertex(VL::edge(at(0), at(2))));
  }
  return wedge(f);
}

Chain chess_torsion_chain(int m, int n) {
  if ((m + n) % 3 != 1) throw std::invalid_argument("chess_torsion_chain: requires m + n = 1 mod 3");
  if (m > n) throw std::invalid_argument("chess_torsion_chain: requires m <= n");
  if (n > 2 * m - 5) throw std::invalid_argument("chess_torsion_chain: requires n <= 2m - 5");
  int t = (2 * n - m + 1) / 3;
  std::vector<Chain> f;
  for (int i = 1; i <= t; ++i) f.push_back(alpha_chain(i, 2 * i - 1, 2 * i));
  for (int r = t + 1, c = 2 * t + 1; c <= n; r += 2, ++c) f.push_back(beta_chain(r, r + 1, c));
  return wedge(f);
}

Chain interleaved_chain(int m, int n) {
  if ((m + n) % 3 != 0) throw std::invalid_argument("interleaved_chain: requires m + n = 0 mod 3");
  if (m > n) throw std::invalid_argument("interleaved_chain: requires m <= n");
  if (n >= 2 * m - 1) throw std::invalid_argument("interleaved_chain: requires n < 2m - 1");
  int k = (2 * n - m) / 3;
  std::vector<Chain> f;
  for (int i = 1; i <= k; ++i) f.push_back(alpha_chain(i, 2 * i - 1, 2 * i));
  for (int j = 1; j <= n - 2 * k; ++j) f.push_back(beta_chain(k + 2 * j - 1, k + 2 * j, 2 * k + j));
  return wedge(f);
}

Chain b_board_chain(int n) {
  if (n < 3) throw std::invalid_argument("b_board_chain: requires n >= 3");
  int last = n % 3 == 0 ? (n - 3) / 3 : n % 3 == 2 ? (n - 5) / 3 : (n - 7) / 3;
  std::vector<Chain> f;
  for (int i = 0; i <= last; ++i) {
    int b = 3 * i;
    f.push_back(alpha_chain(b + 1, b + 1, b + 2));
    f.push_back(beta_chain(b + 2, b + 3, b + 3));
  }
  if (n % 3 == 2) {
    f.push_back(alpha_chain(n - 1, n - 1, n));
  } else if (n % 3 == 1) {
    f.push_back(alpha_chain(n - 3, n - 3, n - 2));
    f.push_back(hexagon_v_chain(n - 2, n - 1, n, n - 1, n));
  }
  return wedge(f);
}

NamedCycle alpha(int i, int k, int l) {
  return make_named(alpha_chain(i, k, l), share(chessboard_complex({i}, sorted_unique({k, l}, "alpha"), -2)),
                    "alpha");
}

NamedCycle beta(int i, int j, int k) {
  return make_named(beta_chain(i, j, k), share(chessboard_complex(sorted_unique({i, j}, "beta"), {k}, -2)), "beta");
}

NamedCycle pentagon(int a, int b, int r) {
  auto z = pentagon_chain(a, b, r);
  std::vector<int> g = sorted_unique({1, 2, a, b, r}, "pentagon");
  std::vector<Ground> ground;
  for (int x : g) ground.push_back(Ground::plain(x));
  return make_named(std::move(z), share(matching_complex(ground, -2)), "pentagon");
}

NamedCycle hexagon_u(int i1, int i2, int j1, int j2, int j3) {
  auto z = hexagon_u_chain(i1, i2, j1, j2, j3);
  return make_named(std::move(z),
                    share(chessboard_complex(sorted_unique({i1, i2}, "u"), sorted_unique({j1, j2, j3}, "u"), -2)),
                    "hexagon-u");
}

NamedCycle hexagon_v(int i1, int i2, int i3, int j1, int j2) {
  auto z = hexagon_v_chain(i1, i2, i3, j1, j2);
  return make_named(std::move(z),
                    share(chessboard_complex(sorted_unique({i1, i2, i3}, "v"), sorted_unique({j1, j2}, "v"), -2)),
                    "hexagon-v");
}

NamedCycle rho_fundamental(const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.empty()) throw std::invalid_argument("rho: row set must be nonempty");
  auto z = rho_chain(rows, cols);
  return make_named(std::move(z),
                    share(chessboard_complex(sorted_unique(rows, "rho"), sorted_unique(cols, "rho"), -2)), "rho");
}

const std::vector<std::string>& cycle_kinds() {
  static const std::vector<std::string> kinds = {"z7",  "pentagon", "hexagon-u",    "hexagon-v", "rho",
                                                 "thm5.6", "lemma2.5", "blvz-witness", "lemma8.1"};
  return kinds;
}

namespace {

std::string canonical_kind(const std::string& kind) {
  static const std::map<std::string, std::string> aliases = {{"chess-torsion", "thm5.6"},
                                                             {"triple-wedge", "lemma2.5"},
                                                             {"interleaved", "blvz-witness"},
                                                             {"bboard", "lemma8.1"}};
  auto it = aliases.find(kind);
  return it == aliases.end() ? kind : it->second;
}

}  // namespace

NamedCycle named_generators(const std::string& name, const CycleParams& p) {
  const auto& a = p.args;
  const std::string kind = canonical_kind(name);
  if (kind == "z7") {
    need(p, 0, kind);
    return make_named(z7_chain(), share(matching_complex(7, 2)), kind);
  }
  if (kind == "pentagon") {
    need(p, 3, kind);
    auto c = pentagon(a[0], a[1], a[2]);
    c.provenance = kind;
    return c;
  }
  if (kind == "hexagon-u") {
    need(p, 5, kind);
    return hexagon_u(a[0], a[1], a[2], a[3], a[4]);
  }
  if (kind == "hexagon-v") {
    need(p, 5, kind);
    return hexagon_v(a[0], a[1], a[2], a[3], a[4]);
  }
  if (kind == "rho") return rho_fundamental(p.rows, p.cols);
  if (kind == "thm5.6") {
    need(p, 2, kind);
    auto z = chess_torsion_chain(a[0], a[1]);
    return make_named(std::move(z), share(chessboard_complex(a[0], a[1], nu_chess(a[0], a[1]) + 1)), kind);
  }
  if (kind == "lemma2.5") {
    need(p, 1, kind);
    int n = a[0];
    if (n < 3) throw std::invalid_argument("triple-wedge: requires n >= 3");
    if (n % 3 == 2) throw std::invalid_argument("triple-wedge: requires n = 0 or 1 mod 3");
    auto z = triple_wedge_chain(n, p.sigma);
    return make_named(std::move(z), share(matching_complex(n, nu_matching(n) + 1)), kind);
  }
  if (kind == "blvz-witness") {
    need(p, 2, kind);
    auto z = interleaved_chain(a[0], a[1]);
    return make_named(std::move(z), share(chessboard_complex(a[0], a[1], nu_chess(a[0], a[1]) + 1)), kind);
  }
  if (kind == "lemma8.1") {
    need(p, 1, kind);
    auto z = b_board_chain(a[0]);
    return make_named(std::move(z), share(board_complex(b_board(a[0]), nu_matching(2 * a[0]) + 1)), kind);
  }
  throw std::invalid_argument("unknown cycle kind '" + kind + "'");
}

namespace {

struct FamilyBuilder {
  std::size_t cap;
  std::set<Chain::Terms> seen;
  std::vector<Chain> out;

  bool full() const { return out.size() >= cap; }

  void add(Chain c) {
    if (c.is_zero() || full()) return;
    if (c.terms().begin()->second < 0) c = -c;
    if (seen.insert(c.terms()).second) out.push_back(std::move(c));
  }
};

std::vector<Chain> family_rec(const std::vector<int>& rows, const std::vector<int>& cols, std::size_t cap);

std::vector<Chain> family_one(const std::vector<int>& rows, const std::vector<int>& cols, std::size_t cap) {
  int m = static_cast<int>(rows.size()), n = static_cast<int>(cols.size());
  int t = (2 * n - m + 1) / 3;
  if (t < 0 || n - 2 * t < 0 || t + 2 * (n - 2 * t) != m - 1)
    throw std::invalid_argument("generator family: no alpha/beta product fits this board");
  FamilyBuilder fb{cap, {}, {}};
  std::vector<int> sigma = rows;
  do {
    std::vector<int> tau = cols;
    do {
      std::vector<Chain> f;
      for (int i = 0; i < t; ++i)
        f.push_back(alpha_chain(sigma[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(2 * i)],
                                tau[static_cast<std::size_t>(2 * i + 1)]));
      for (int r = t, c = 2 * t; c < n; r += 2, ++c)
        f.push_back(beta_chain(sigma[static_cast<std::size_t>(r)], sigma[static_cast<std::size_t>(r + 1)],
                               tau[static_cast<std::size_t>(c)]));
      fb.add(wedge(f));
      if (fb.full()) return fb.out;
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return fb.out;
}

std::vector<Chain> family_zero(const std::vector<int>& rows, const std::vector<int>& cols, std::size_t cap) {
  FamilyBuilder fb{cap, {}, {}};
  std::size_t m = rows.size(), n = cols.size();
  for (std::size_t i1 = 0; i1 < m; ++i1)
    for (std::size_t i2 = 0; i2 < m; ++i2)
      for (std::size_t i3 = i2 + 1; i3 < m; ++i3) {
        if (i1 == i2 || i1 == i3) continue;
        for (std::size_t j1 = 0; j1 < n; ++j1)
          for (std::size_t j2 = j1 + 1; j2 < n; ++j2)
            for (std::size_t j3 = 0; j3 < n; ++j3) {
              if (j3 == j1 || j3 == j2) continue;
              std::vector<int> rr, cc;
              for (std::size_t x = 0; x < m; ++x)
                if (x != i1 && x != i2 && x != i3) rr.push_back(rows[x]);
              for (std::size_t x = 0; x < n; ++x)
                if (x != j1 && x != j2 && x != j3) cc.push_back(cols[x]);
              auto head = wedge(alpha_chain(rows[i1], cols[j1], cols[j2]), beta_chain(rows[i2], rows[i3], cols[j3]));
              for (const auto& xi : family_rec(rr, cc, cap)) {
                fb.add(wedge(head, xi));
                if (fb.full()) return fb.out;
              }
            }
      }
  return fb.out;
}

std::vector<int> drop(const std::vector<int>& v, std::initializer_list<std::size_t> idx) {
  std::vector<int> out;
  for (std::size_t x = 0; x < v.size(); ++x)
    if (std::find(idx.begin(), idx.end(), x) == idx.end()) out.push_back(v[x]);
  return out;
}

std::vector<Chain> family_two(const std::vector<int>& rows, const std::vector<int>& cols, std::size_t cap) {
  FamilyBuilder fb{cap, {}, {}};
  std::size_t m = rows.size(), n = cols.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto head = alpha_chain(rows[i], cols[j], cols[k]);
        for (const auto& rho : family_rec(drop(rows, {i}), drop(cols, {j, k}), cap)) {
          fb.add(wedge(head, rho));
          if (fb.full()) return fb.out;
        }
      }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto head = beta_chain(rows[i], rows[j], cols[k]);
        for (const auto& rho : family_rec(drop(rows, {i, j}), drop(cols, {k}), cap)) {
          fb.add(wedge(head, rho));
          if (fb.full()) return fb.out;
        }
      }
  return fb.out;
}

std::vector<Chain> family_rec(const std::vector<int>& rows, const std::vector<int>& cols, std::size_t cap) {
  if (rows.empty() || cols.empty()) return {Chain::empty_face()};
  std::size_t m = rows.size(), n = cols.size();
  if (m > n) {
    auto fam = family_rec(cols, rows, cap);
    for (auto& c : fam) c = transpose(c);
    return fam;
  }
  if (n >= 2 * m - 1) {
    if (n == m + 1) return {rho_chain(rows, cols)};
    if (m == 1) {
      std::vector<Chain> out;
      for (std::size_t j = 1; j < n && out.size() < cap; ++j) out.push_back(alpha_chain(rows[0], cols[j], cols[0]));
      return out;
    }
    throw std::invalid_argument("generator family: top-homology boards beyond |B| = |A| + 1 are not covered");
  }
  switch ((m + n) % 3) {
    case 1: return family_one(rows, cols, cap);
    case 0: return family_zero(rows, cols, cap);
    default: return family_two(rows, cols, cap);
  }
}

}  // namespace

std::vector<Chain> chess_generator_family(const std::vector<int>& rows, const std::vector<int>& cols,
                                          std::size_t cap) {
  return family_rec(sorted_unique(rows, "family rows"), sorted_unique(cols, "family columns"), cap);
}

std::vector<Chain> vertex_differences(const std::vector<VertexLabel>& vertices) {
  std::vector<Chain> out;
  for (std::size_t i = 1; i < vertices.size(); ++i) out.push_back(vertex(vertices[i]) - vertex(vertices[0]));
  return out;
}

}  // namespace matchcx
