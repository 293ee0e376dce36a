#pragma once

// Checks shared by the unit suites and the acceptance runner.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "matchcx/boards.hpp"
#include "matchcx/cycles.hpp"
#include "matchcx/homology.hpp"
#include "matchcx/les.hpp"
#include "matchcx/morse.hpp"

namespace matchcx::testing {

inline Chain relabel(const Chain& z, const std::map<int, int>& to) {
  Chain out(z.degree());
  for (const auto& [simp, c] : z.terms()) {
    std::vector<VertexLabel> vs;
    for (auto v : simp) vs.push_back(VertexLabel::edge(to.at(v.lo().value()), to.at(v.hi().value())));
    out.add_oriented(vs, c);
  }
  return out;
}

inline std::vector<Ground> grounds(const std::vector<int>& vals) {
  std::vector<Ground> g;
  for (int v : vals) g.push_back(Ground::plain(v));
  return g;
}

inline std::vector<int> values(const std::vector<Ground>& g) {
  std::vector<int> v;
  for (auto x : g) v.push_back(x.value());
  return v;
}

// Random reduced cycle in the bottom degree of the matching complex on 4 or 5 points.
inline Chain random_small_cycle(std::mt19937& rng, const std::vector<int>& pts) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<int> p = pts;
  if (p.size() == 4) {
    auto sub = matching_complex(grounds(p), 0);
    const auto& vs = sub.faces(0);
    Chain z(0);
    for (std::size_t t = 0; t < vs.size(); ++t) z.add(Simplex(vs[t].begin(), vs[t].end()), coeff(rng));
    // make the coefficient sum zero
    BigInt s = 0;
    for (const auto& [simp, c] : z.terms()) s += c;
    z.add(Simplex(vs[0].begin(), vs[0].end()), -s);
    return z;
  }
  if (p.size() == 5) {
    Chain z(1);
    for (int t = 0; t < 3; ++t) {
      std::shuffle(p.begin(), p.end(), rng);
      std::map<int, int> to;
      for (int k = 0; k < 5; ++k) to[k + 1] = p[static_cast<std::size_t>(k)];
      z = z + coeff(rng) * relabel(pentagon_chain(3, 4, 5), to);
    }
    return z;
  }
  throw std::invalid_argument("random_small_cycle: 4 or 5 points");
}

struct PsiPhiReport {
  std::size_t inputs = 0;
  std::size_t compositions = 0;
  std::size_t nonzero = 0;
  std::size_t failures = 0;
};

// psi^{p,q} o phi^{a,i} applied to random cycles of the phi domains of M_n.
inline PsiPhiReport psi_phi_boundaries(int n, int inputs, unsigned seed) {
  std::mt19937 rng(seed);
  PsiPhiReport r;
  std::uniform_int_distribution<int> pick_a(1, 2), pick_i(3, n);
  std::map<std::pair<int, int>, Complex> targets;
  for (int t = 0; t < inputs; ++t) {
    LesMapSpec phi{LesFamily::Matching, 0, n, pick_a(rng), pick_i(rng), 0};
    Chain z = random_small_cycle(rng, values(les_phi_domain(phi)));
    Chain x = les_phi(phi, z);
    ++r.inputs;
    for (int p = 3; p <= n; ++p)
      for (int q = 3; q <= n; ++q) {
        if (p == q) continue;
        LesMapSpec psi{LesFamily::Matching, 0, n, 0, p, q};
        Chain y = les_psi(psi, x);
        ++r.compositions;
        if (y.is_zero()) continue;
        ++r.nonzero;
        auto it = targets.find({p, q});
        if (it == targets.end()) it = targets.emplace(std::pair{p, q}, matching_complex(les_psi_target(psi))).first;
        if (!is_cycle(y) || !is_boundary(y, it->second)) ++r.failures;
      }
  }
  return r;
}

// phi images of bottom-degree generators of each summand, as chains in M_n.
inline std::vector<Chain> matching_phi_images(int n) {
  std::vector<Chain> out;
  for (int a = 1; a <= 2; ++a)
    for (int i = 3; i <= n; ++i) {
      LesMapSpec phi{LesFamily::Matching, 0, n, a, i, 0};
      auto dom = les_phi_domain(phi);
      auto sub = matching_complex(dom);
      int k = nu_matching(static_cast<int>(dom.size()));
      std::vector<Chain> gens;
      if (k == 0) {
        std::vector<VertexLabel> vs;
        const auto& f = sub.faces(0);
        for (std::size_t t = 0; t < f.size(); ++t) vs.push_back(f[t][0]);
        gens = vertex_differences(vs);
      } else {
        throw std::invalid_argument("matching_phi_images: only bottom degree 0 summands");
      }
      for (auto& g : gens) out.push_back(les_phi(phi, g));
    }
  return out;
}

struct TailReport {
  std::size_t h_rank = 0;
  std::size_t phi_rank = 0;
  std::size_t psi_rank = 0;
  std::size_t h_rank_mod3 = 0;
  std::size_t phi_rank_mod3 = 0;
  std::size_t psi_rank_mod3 = 0;
  std::size_t psi_summands = 0;
  bool psi_phi_zero = true;
  bool ok() const {
    return psi_phi_zero && phi_rank + psi_rank == h_rank && phi_rank_mod3 + psi_rank_mod3 == h_rank_mod3 &&
           psi_rank == psi_summands && psi_rank_mod3 == psi_summands;
  }
};

// phi -> H~_2(M_{4,4}) -> psi -> (+) H~_0(M_{2,2}) -> 0
inline TailReport chess44_tail() {
  TailReport r;
  auto c = chessboard_complex(4, 4, 3);
  auto h = homology(c, 2);
  r.h_rank = h.betti;
  r.h_rank_mod3 = betti_mod_p(c, 2, 3);

  std::vector<Chain> phis;
  for (int i = 2; i <= 4; ++i) {
    std::vector<int> rr;
    for (int x = 2; x <= 4; ++x)
      if (x != i) rr.push_back(x);
    phis.push_back(les_phi({LesFamily::Chessboard, 4, 4, 1, i, 0}, hexagon_u_chain(rr[0], rr[1], 2, 3, 4)));
  }
  for (int j = 2; j <= 4; ++j) {
    std::vector<int> cc;
    for (int x = 2; x <= 4; ++x)
      if (x != j) cc.push_back(x);
    phis.push_back(les_phi({LesFamily::Chessboard, 4, 4, 2, j, 0}, hexagon_v_chain(2, 3, 4, cc[0], cc[1])));
  }
  auto sp = span_check(c, 2, phis);
  r.phi_rank = sp.spanned_rank - (sp.cycle_rank - r.h_rank);
  r.phi_rank_mod3 = sp.rank_mod3 - (sp.cycle_rank_mod3 - r.h_rank_mod3);

  // class in H~_0(M_{2,2}) of a 0-cycle: coefficient sum on the main diagonal component
  auto psi_class = [](const LesMapSpec& s, const Chain& y) -> BigInt {
    std::vector<int> rows, cols;
    for (int x = 2; x <= 4; ++x) {
      if (x != s.i) rows.push_back(x);
      if (x != s.j) cols.push_back(x);
    }
    return y.coefficient(Simplex{VertexLabel::rook(rows[0], cols[0])}) +
           y.coefficient(Simplex{VertexLabel::rook(rows[1], cols[1])});
  };
  auto fam = chess_generator_family(iota_range(1, 4), iota_range(1, 4));
  std::vector<LesMapSpec> psis;
  for (int i = 2; i <= 4; ++i)
    for (int j = 2; j <= 4; ++j) psis.push_back({LesFamily::Chessboard, 4, 4, 0, i, j});
  r.psi_summands = psis.size();
  SparseIntMatrix m(psis.size(), fam.size());
  for (std::size_t col = 0; col < fam.size(); ++col)
    for (std::size_t row = 0; row < psis.size(); ++row) {
      Chain y = les_psi(psis[row], fam[col]);
      if (!is_cycle(y)) r.psi_phi_zero = false;
      m.push(static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), psi_class(psis[row], y));
    }
  m.normalize();
  r.psi_rank = smith_normal_form(m).rank();
  r.psi_rank_mod3 = rank_mod_p(m, 3);
  for (const auto& x : phis)
    for (const auto& s : psis)
      if (psi_class(s, les_psi(s, x)) != 0) r.psi_phi_zero = false;
  return r;
}

struct PartitionCheck {
  std::size_t matchings = 0;
  std::size_t violations = 0;
};

// Block invariants of rho_partition over every matching of K_n.
inline PartitionCheck partition_invariants(int n) {
  PartitionCheck r;
  auto c = matching_complex(n);
  for (int k = -1; k <= c.dim(); ++k) {
    const auto& f = c.faces(k);
    for (std::size_t t = 0; t < f.size(); ++t) {
      Simplex g(f[t].begin(), f[t].end());
      ++r.matchings;
      auto p = rho_partition(g, n);
      bool ok = !p.blocks.empty();
      std::vector<int> seen_v;
      Simplex seen_e;
      for (std::size_t b = 0; b < p.blocks.size() && ok; ++b) {
        const auto& blk = p.blocks[b];
        std::size_t nv = blk.vertices.size();
        if (nv > 4 || nv == 0) ok = false;
        if (b + 1 < p.blocks.size() && nv < 2) ok = false;
        if (nv != 2 && blk.edges.size() != nv / 2) ok = false;
        for (auto e : blk.edges)
          if (!std::binary_search(blk.vertices.begin(), blk.vertices.end(), e.lo().value()) ||
              !std::binary_search(blk.vertices.begin(), blk.vertices.end(), e.hi().value()))
            ok = false;
        seen_v.insert(seen_v.end(), blk.vertices.begin(), blk.vertices.end());
        seen_e.insert(seen_e.end(), blk.edges.begin(), blk.edges.end());
      }
      std::sort(seen_v.begin(), seen_v.end());
      std::sort(seen_e.begin(), seen_e.end());
      if (seen_v != iota_range(1, n) || seen_e != g) ok = false;
      if (!ok) ++r.violations;
    }
  }
  return r;
}

}  // namespace matchcx::testing
