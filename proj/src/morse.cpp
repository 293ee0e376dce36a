#include "matchcx/morse.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "matchcx/boards.hpp"
#include "matchcx/homology.hpp"

namespace matchcx {

namespace {

std::vector<int> partners(const Simplex& g, int n) {
  std::vector<int> nb(static_cast<std::size_t>(n + 1), 0);
  for (const auto& e : g) {
    if (e.kind() != VertexLabel::Kind::GraphEdge) throw std::invalid_argument("rho_partition: expects graph edges");
    int a = e.lo().value(), b = e.hi().value();
    if (a < 1 || b > n) throw std::invalid_argument("rho_partition: edge outside [n]");
    if (nb[static_cast<std::size_t>(a)] || nb[static_cast<std::size_t>(b)])
      throw std::invalid_argument("rho_partition: edges share a vertex, not a matching");
    nb[static_cast<std::size_t>(a)] = b;
    nb[static_cast<std::size_t>(b)] = a;
  }
  return nb;
}

Simplex to_simplex(std::span<const VertexLabel> s) { return Simplex(s.begin(), s.end()); }

}  // namespace

Shape MorsePartition::lambda() const {
  Shape s;
  for (const auto& b : blocks) s.push_back(static_cast<int>(b.vertices.size()));
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

std::string MorsePartition::to_string() const {
  std::ostringstream o;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) o << ", ";
    o << "({";
    for (std::size_t k = 0; k < blocks[i].vertices.size(); ++k) o << (k ? "," : "") << blocks[i].vertices[k];
    o << "},{";
    for (std::size_t k = 0; k < blocks[i].edges.size(); ++k) o << (k ? "," : "") << blocks[i].edges[k].to_string();
    o << "})";
  }
  return o.str();
}

MorsePartition rho_partition(const Simplex& g, int n) {
  if (n < 0 || n > Ground::kMaxValue) throw std::invalid_argument("rho_partition: n out of range");
  auto nb = partners(g, n);
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  MorsePartition p;
  int left = n;
  while (left > 0) {
    std::vector<int> free;
    for (int v = 1; v <= n && free.size() < 2; ++v)
      if (!used[static_cast<std::size_t>(v)]) free.push_back(v);
    MorseBlock blk;
    if (left == 1) {
      blk.vertices = free;
    } else {
      for (int v : free) {
        blk.vertices.push_back(v);
        if (nb[static_cast<std::size_t>(v)]) blk.vertices.push_back(nb[static_cast<std::size_t>(v)]);
      }
      std::sort(blk.vertices.begin(), blk.vertices.end());
      blk.vertices.erase(std::unique(blk.vertices.begin(), blk.vertices.end()), blk.vertices.end());
      for (const auto& e : g)
        if (std::binary_search(blk.vertices.begin(), blk.vertices.end(), e.lo().value()) &&
            std::binary_search(blk.vertices.begin(), blk.vertices.end(), e.hi().value()))
          blk.edges.push_back(e);
    }
    for (int v : blk.vertices) used[static_cast<std::size_t>(v)] = true;
    left -= static_cast<int>(blk.vertices.size());
    p.blocks.push_back(std::move(blk));
  }
  return p;
}

std::optional<int> mu(const MorsePartition& p) {
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    if (p.blocks[i].vertices.size() == 2) return static_cast<int>(i) + 1;
  return std::nullopt;
}

std::optional<int> mu(const Simplex& g, int n) { return mu(rho_partition(g, n)); }

Shape lambda_of(const Simplex& g, int n) { return rho_partition(g, n).lambda(); }

bool critical_pattern(const Shape& lambda, int n) {
  Shape want;
  switch (n % 3) {
    case 0:
      want.assign(static_cast<std::size_t>(n / 3), 3);
      break;
    case 1:
      want.assign(static_cast<std::size_t>(n / 3), 3);
      want.push_back(1);
      break;
    default:
      if (n < 5) return false;
      want.push_back(4);
      want.insert(want.end(), static_cast<std::size_t>((n - 5) / 3), 3);
      want.push_back(1);
  }
  return lambda == want;
}

MorseMatchingReport morse_pairs(int n, int d, std::size_t max_cells) {
  if (n < 0 || d < -1) throw std::invalid_argument("morse_pairs: needs n >= 0, d >= -1");
  auto c = matching_complex(n, d);
  std::size_t total = 0;
  for (auto f : c.face_counts()) total += f;
  if (total > max_cells)
    throw std::length_error("morse_pairs: " + std::to_string(total) + " cells exceed the guard of " + std::to_string(max_cells));
  int top = c.dim();
  MorseMatchingReport r;
  r.n = n;
  r.max_dim = d;
  r.cells_by_dim.assign(static_cast<std::size_t>(top + 2), 0);
  r.critical_by_dim.assign(static_cast<std::size_t>(top + 2), 0);
  int nu = nu_matching(n);

  // down[k + 1][i]: index of the (k-1)-face paired with k-face i, if any
  std::vector<std::vector<std::optional<std::size_t>>> down(static_cast<std::size_t>(top + 2));
  for (int k = -1; k <= top; ++k) {
    const auto& ft = c.faces(k);
    auto& dk = down[static_cast<std::size_t>(k + 1)];
    dk.assign(ft.size(), std::nullopt);
    r.cells_by_dim[static_cast<std::size_t>(k + 1)] = ft.size();
    for (std::size_t i = 0; i < ft.size(); ++i) {
      Simplex g = to_simplex(ft[i]);
      auto part = rho_partition(g, n);
      auto m = mu(part);
      if (k == nu && (!m.has_value()) != critical_pattern(part.lambda(), n)) ++r.pattern_mismatches;
      if (!m) {
        r.critical.push_back(g);
        ++r.critical_by_dim[static_cast<std::size_t>(k + 1)];
        continue;
      }
      const auto& blk = part.blocks[static_cast<std::size_t>(*m - 1)];
      if (!blk.edges.empty()) {
        Simplex minus = g;
        minus.erase(std::find(minus.begin(), minus.end(), blk.edges[0]));
        auto back = rho_partition(minus, n);
        auto bm = mu(back);
        if (bm != m || !back.blocks[static_cast<std::size_t>(*m - 1)].edges.empty()) {
          ++r.unmatched;
          continue;
        }
        dk[i] = c.faces(k - 1).find(minus);
        r.pairs.emplace_back(g, minus);
      } else if (k < top) {
        Simplex plus = g;
        plus.push_back(VertexLabel::edge(blk.vertices[0], blk.vertices[1]));
        std::sort(plus.begin(), plus.end());
        auto up = rho_partition(plus, n);
        auto um = mu(up);
        if (um != m || up.blocks[static_cast<std::size_t>(*m - 1)].edges.size() != 1) ++r.unmatched;
      }
    }
  }

  r.acyclic = true;
  for (int k = -1; k < top && r.acyclic; ++k) {
    const auto& lo = c.faces(k);
    const auto& hi = c.faces(k + 1);
    std::size_t a = lo.size(), b = hi.size();
    std::vector<std::vector<std::size_t>> adj(a + b);
    std::vector<std::size_t> indeg(a + b, 0);
    const auto& dk = down[static_cast<std::size_t>(k + 2)];
    for (std::size_t s = 0; s < b; ++s) {
      auto face = hi[s];
      for (std::size_t drop = 0; drop < face.size(); ++drop) {
        Simplex t;
        for (std::size_t q = 0; q < face.size(); ++q)
          if (q != drop) t.push_back(face[q]);
        auto ti = lo.find(t);
        if (!ti) throw std::logic_error("morse_pairs: missing facet");
        if (dk[s] == ti) {
          adj[*ti].push_back(a + s);
          ++indeg[a + s];
        } else {
          adj[a + s].push_back(*ti);
          ++indeg[*ti];
        }
      }
    }
    std::deque<std::size_t> q;
    for (std::size_t v = 0; v < a + b; ++v)
      if (!indeg[v]) q.push_back(v);
    std::size_t seen = 0;
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      ++seen;
      for (auto w : adj[v])
        if (!--indeg[w]) q.push_back(w);
    }
    if (seen != a + b) {
      r.acyclic = false;
      for (std::size_t v = 0; v < a + b; ++v)
        if (indeg[v]) {
          r.cycle_witness = v < a ? to_simplex(lo[v]) : to_simplex(hi[v - a]);
          break;
        }
    }
  }
  return r;
}

BigInt critical_count_formula(int n) {
  if (n < 2) throw std::invalid_argument("critical_count_formula: needs n >= 2");
  BigInt out = 1;
  if (n % 3 != 2) {
    int q = n / 3;
    for (int j = 1; j <= q; ++j) out *= 2 * (n - 3 * j + 1);
    return out;
  }
  int q = (n - 2) / 3;
  BigInt sum = 0;
  for (int k = 1; k <= q; ++k) {
    BigInt t = 1;
    for (int j = 1; j <= k; ++j) t *= n - 3 * j + 1;
    for (int j = k; j <= q; ++j) t *= n - 3 * j;
    sum += t;
  }
  if (q == 0) return 0;
  for (int j = 0; j < (n - 5) / 3; ++j) sum *= 2;
  return sum;
}

std::vector<Simplex> lex_facet_order(int n, FacetOrder order) {
  int nu = nu_matching(n);
  auto c = matching_complex(n, nu);
  const auto& ft = c.faces(nu);
  using Key = std::vector<std::tuple<std::size_t, long, std::vector<int>, Simplex>>;
  std::vector<std::pair<Key, Simplex>> items;
  for (std::size_t i = 0; i < ft.size(); ++i) {
    Simplex g = to_simplex(ft[i]);
    Key key;
    for (auto& b : rho_partition(g, n).blocks) {
      long e = static_cast<long>(b.edges.size());
      if (order == FacetOrder::EdgeFirst) e = -e;
      key.emplace_back(b.vertices.size(), e, b.vertices, b.edges);
    }
    items.emplace_back(std::move(key), std::move(g));
  }
  std::sort(items.begin(), items.end());
  std::vector<Simplex> out;
  for (auto& it : items) out.push_back(std::move(it.second));
  return out;
}

ShellingReport verify_shelling(const Complex& c, const std::vector<Simplex>& order) {
  auto facets = c.facets();
  auto sorted = order;
  std::sort(facets.begin(), facets.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != facets || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("verify_shelling: order is not a permutation of the facets");
  ShellingReport rep;
  rep.ok = true;
  std::vector<VertexLabel> meet;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& f = order[i];
    std::vector<bool> in_r(f.size(), false);
    std::vector<std::vector<bool>> missing;
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<bool> miss(f.size(), true);
      std::size_t common = 0;
      const auto& g = order[j];
      for (std::size_t p = 0, q = 0; p < f.size() && q < g.size();) {
        if (f[p] < g[q]) {
          ++p;
        } else if (g[q] < f[p]) {
          ++q;
        } else {
          miss[p] = false;
          ++common;
          ++p;
          ++q;
        }
      }
      if (common + 1 == f.size())
        for (std::size_t p = 0; p < f.size(); ++p)
          if (miss[p]) in_r[p] = true;
      missing.push_back(std::move(miss));
    }
    Simplex rface;
    for (std::size_t p = 0; p < f.size(); ++p)
      if (in_r[p]) rface.push_back(f[p]);
    bool pure = true;
    for (const auto& miss : missing) {
      bool hit = false;
      for (std::size_t p = 0; p < f.size() && !hit; ++p) hit = miss[p] && in_r[p];
      if (!hit) {
        pure = false;
        break;
      }
    }
    if (!pure && rep.ok) {
      rep.ok = false;
      rep.first_violation = i;
    }
    if (i > 0 && rface.size() == f.size()) ++rep.homology_facets;
    rep.restriction.push_back(std::move(rface));
  }
  return rep;
}

namespace {

const BigInt& need(const KnownRanks& known, int k, const char* branch) {
  auto it = known.find(k);
  if (it == known.end())
    throw std::invalid_argument(std::string("rank_bounds_matching: branch ") + branch + " needs r_" + std::to_string(k));
  return it->second;
}

const BigInt& need(const KnownChessRanks& known, int a, int b, const char* branch) {
  auto it = known.find({std::min(a, b), std::max(a, b)});
  if (it == known.end())
    throw std::invalid_argument(std::string("rank_bounds_chess: branch ") + branch + " needs r_{" + std::to_string(std::min(a, b)) +
                                "," + std::to_string(std::max(a, b)) + "}");
  return it->second;
}

}  // namespace

RankBounds rank_bounds_matching(int n, const KnownRanks& known) {
  RankBounds b;
  if (n < 3) throw std::invalid_argument("rank_bounds_matching: needs n >= 3");
  if (n % 3 == 1) throw std::invalid_argument("rank_bounds_matching: no branch for n = 1 mod 3 (rank is 1 for n >= 7)");
  if (n % 3 == 0) {
    b.branch = "n=0 mod 3";
    b.lower = BigInt(n - 1);
    b.upper = 2 * (n - 2) * need(known, n - 3, "n=0 mod 3");
    return b;
  }
  b.branch = "n=2 mod 3";
  b.upper = 2 * (n - 2) * need(known, n - 3, "n=2 mod 3") + (n - 2) * (n - 3) * need(known, n - 4, "n=2 mod 3");
  if (n >= 8) b.lower = (n - 1) * need(known, n - 2, "n=2 mod 3") - 1;
  return b;
}

RankBounds rank_bounds_chess(int m, int n, const KnownChessRanks& known) {
  if (m < 2 || n < 2) throw std::invalid_argument("rank_bounds_chess: needs m, n >= 2");
  int r = (m + n) % 3;
  if (r == 1) throw std::invalid_argument("rank_bounds_chess: no branch for m+n = 1 mod 3");
  RankBounds b;
  const char* br = r == 0 ? "m+n=0 mod 3" : "m+n=2 mod 3";
  b.branch = br;
  int lo = std::min(m, n), hi = std::max(m, n);
  if (hi >= 2 * lo - 1)
    throw std::invalid_argument(std::string("rank_bounds_chess: branch ") + br + " needs min <= max < 2 min - 1");
  BigInt up = (m - 1) * need(known, m - 2, n - 1, br) + (n - 1) * need(known, m - 1, n - 2, br);
  if (r == 2) up += (m - 1) * (n - 1) * need(known, m - 2, n - 2, br);
  b.upper = up;
  if (r == 0 && hi <= 2 * lo - 3) b.lower = BigInt(hi);
  if (r == 2 && hi <= 2 * lo - 7) b.lower = BigInt(hi * (hi - 1) - 1);
  return b;
}

BigInt computed_rank_matching(int n) {
  if (n < 0) throw std::invalid_argument("computed_rank_matching: n >= 0");
  if (n <= 1) return 1;
  int nu = nu_matching(n);
  return static_cast<unsigned long>(homology(matching_complex(n, nu + 1), nu).rank());
}

BigInt computed_rank_chess(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("computed_rank_chess: m, n >= 0");
  if (m == 0 || n == 0) return 1;
  int nu = nu_chess(m, n);
  return static_cast<unsigned long>(homology(chessboard_complex(m, n, nu + 1), nu).rank());
}

}  // namespace matchcx
