#include "matchcx/basis.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "matchcx/boards.hpp"
#include "matchcx/cycles.hpp"
#include "matchcx/homology.hpp"

namespace matchcx {

namespace {

int parity(const std::vector<int>& w) {
  int s = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) s = -s;
  return s;
}

}  // namespace

BasisPair make_basis_pair(const Tableau& s, const Tableau& t) {
  if (!s.is_standard() || !t.is_standard()) throw std::invalid_argument("basis pair: tableaux must be standard");
  Shape ls = s.shape(), lt = t.shape();
  if (lt.empty() || Shape(lt.begin() + 1, lt.end()) != ls)
    throw std::invalid_argument("basis pair: shape(S) must equal shape(T) minus its first row");
  int width = lt[0];
  BasisPair p{s, t, {}, {}, {}, {}, {}};
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r <= ls.size(); ++r) {
    std::vector<int> row = r < ls.size() ? s.rows()[r] : std::vector<int>{};
    int above = r == 0 ? width : ls[r - 1];
    int here = r < ls.size() ? ls[r] : 0;
    row.insert(row.end(), static_cast<std::size_t>(above - here), kInfinity);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  p.s_star = Tableau(std::move(rows));
  auto inv = inverse_rs_tracked(p.s_star, t);
  p.word = std::move(inv.word);
  auto w = static_cast<std::size_t>(width);
  p.a_star.assign(w, {});
  p.a.assign(w, {});
  p.b.assign(w, {});
  for (const auto& pop : inv.pops) {
    auto c = static_cast<std::size_t>(pop.column - 1);
    p.a_star[c].push_back(pop.letter);
    p.b[c].push_back(pop.q_entry);
    if (pop.letter != kInfinity) p.a[c].push_back(pop.letter);
  }
  for (std::size_t i = 0; i < w; ++i) {
    std::sort(p.a_star[i].begin(), p.a_star[i].end());
    std::sort(p.a[i].begin(), p.a[i].end());
    std::sort(p.b[i].begin(), p.b[i].end());
    if (std::count(p.a_star[i].begin(), p.a_star[i].end(), kInfinity) != 1 || p.a[i].size() + 1 != p.b[i].size())
      throw std::logic_error("basis pair: pop sets violate |A_i| = |B_i| - 1");
  }
  return p;
}

std::vector<BasisPair> p_mn_pairs(int m, int n) {
  if (m < 1 || m > n) throw std::invalid_argument("p_mn_pairs: needs 1 <= m <= n");
  std::vector<BasisPair> out;
  for (const auto& lam : partitions(m)) {
    if (lam[0] > n - m) continue;
    Shape star = lam;
    star.insert(star.begin(), n - m);
    auto ss = syt_enumerate(lam);
    auto ts = syt_enumerate(star);
    for (const auto& s : ss)
      for (const auto& t : ts) out.push_back(make_basis_pair(s, t));
  }
  std::sort(out.begin(), out.end(), [](const BasisPair& x, const BasisPair& y) { return word_less(x.word, y.word); });
  return out;
}

OrientedSimplex tau_simplex(const std::vector<int>& word) {
  OrientedSimplex o;
  for (std::size_t c = 0; c < word.size(); ++c)
    if (word[c] != kInfinity) o.vertices.push_back(VertexLabel::rook(word[c], static_cast<int>(c) + 1));
  std::sort(o.vertices.begin(), o.vertices.end());
  return o;
}

Chain tau_chain(const std::vector<int>& word, const BigInt& coeff) { return Chain::from_oriented(tau_simplex(word).vertices, coeff); }

Chain eta_chain(const BasisPair& p) {
  std::vector<Chain> factors;
  for (std::size_t i = 0; i < p.b.size(); ++i) factors.push_back(rho_chain(p.a[i], p.b[i]));
  return wedge(factors);
}

OrientedSimplex v_simplex(const BasisPair& p) { return tau_simplex(p.word); }
OrientedSimplex gamma_class_rep(const BasisPair& p) { return tau_simplex(p.word); }

Chain u_chain(const BasisPair& p) {
  int m = p.s.size();
  Chain out(m - 1);
  std::vector<int> w = p.word;
  std::function<void(std::size_t, int)> rec = [&](std::size_t block, int sign) {
    if (block == p.b.size()) {
      out.add_oriented(tau_simplex(w).vertices, sign);
      return;
    }
    const auto& pos = p.b[block];
    std::vector<int> letters;
    for (int c : pos) letters.push_back(p.word[static_cast<std::size_t>(c - 1)]);
    std::vector<int> perm(pos.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    do {
      for (std::size_t i = 0; i < pos.size(); ++i)
        w[static_cast<std::size_t>(pos[i] - 1)] = letters[static_cast<std::size_t>(perm[i])];
      rec(block + 1, sign * parity(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t i = 0; i < pos.size(); ++i) w[static_cast<std::size_t>(pos[i] - 1)] = letters[i];
  };
  rec(0, 1);
  return out;
}

int b_sign(const BasisPair& p) {
  std::vector<int> cat;
  for (const auto& bi : p.b) cat.insert(cat.end(), bi.rbegin(), bi.rend());
  return parity(cat);
}

int eta_u_sign(const BasisPair& p) {
  std::vector<int> ca, cb;
  for (std::size_t i = 0; i < p.b.size(); ++i) {
    ca.insert(ca.end(), p.a[i].begin(), p.a[i].end());
    cb.insert(cb.end(), p.b[i].begin(), p.b[i].end());
  }
  return b_sign(p) * parity(ca) * parity(cb);
}

namespace {

SparseIntMatrix pairing_of(const std::vector<BasisPair>& pairs) {
  std::vector<std::pair<Simplex, int>> vs;
  for (const auto& p : pairs) vs.push_back(canonical_orient(v_simplex(p).vertices));
  SparseIntMatrix mat(pairs.size(), pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto u = u_chain(pairs[i]);
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      BigInt c = u.coefficient(vs[j].first);
      if (c != 0) mat.push(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), vs[j].second * c);
    }
  }
  mat.normalize();
  return mat;
}

}  // namespace

SparseIntMatrix pairing_matrix(int m, int n) { return pairing_of(p_mn_pairs(m, n)); }

std::string BasisReport::to_string() const {
  std::ostringstream o;
  o << "pairs=" << pairs << " garst=" << garst << " unitriangular=" << lower_unitriangular
    << " eta_cycles=" << eta_cycles << " sign_identity=" << eta_sign_identity << " <u,v>=1:" << u_v_diagonal
    << " literal_sgnB=" << literal_b_sign << "/" << pairs << " top_betti=" << top_betti << " torsion_free=" << top_torsion_free << " eta_spans=" << eta_spans;
  return o.str();
}

BasisReport verify_basis(int m, int n) {
  BasisReport r;
  auto pairs = p_mn_pairs(m, n);
  r.pairs = pairs.size();
  r.garst = garst_top_rank(m, n).get_ui();
  auto mat = pairing_of(pairs);
  r.lower_unitriangular = true;
  r.u_v_diagonal = true;
  std::vector<bool> diag(pairs.size(), false);
  for (const auto& e : mat.entries()) {
    if (e.col > e.row) r.lower_unitriangular = false;
    if (e.col == e.row) {
      diag[e.row] = true;
      if (e.value != 1) r.u_v_diagonal = false;
    }
  }
  for (bool d : diag)
    if (!d) r.u_v_diagonal = false;
  r.lower_unitriangular = r.lower_unitriangular && r.u_v_diagonal;
  std::vector<Chain> etas;
  r.eta_cycles = true;
  r.eta_sign_identity = true;
  for (const auto& p : pairs) {
    auto eta = eta_chain(p);
    if (!boundary(eta).is_zero()) r.eta_cycles = false;
    auto u = u_chain(p);
    if (!(eta == eta_u_sign(p) * u)) r.eta_sign_identity = false;
    if (eta == b_sign(p) * u) ++r.literal_b_sign;
    etas.push_back(std::move(eta));
  }
  auto c = chessboard_complex(m, n, m - 1);
  auto h = homology(c, m - 1);
  r.top_betti = h.betti;
  r.top_torsion_free = h.torsion.empty();
  r.eta_spans = r.eta_cycles && span_check(c, m - 1, etas).spans();
  return r;
}

}  // namespace matchcx
