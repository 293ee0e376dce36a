#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "matchcx/chain.hpp"
#include "matchcx/sparse_matrix.hpp"
#include "matchcx/tableaux.hpp"

namespace matchcx {

struct BasisPair {
  Tableau s;       // m cells
  Tableau t;       // n cells
  Tableau s_star;  // s with kInfinity under each of the first n - m columns
  std::vector<int> word;  // inverse RS of (s_star, t), letters by column position
  std::vector<std::vector<int>> a_star;  // letters popped from top cell i (kInfinity included)
  std::vector<std::vector<int>> a;       // a_star without kInfinity, sorted
  std::vector<std::vector<int>> b;       // entries of t crossed out with those pops, sorted
};

/// Builds the derived data; throws unless shape(s) = shape(t) minus its first row.
BasisPair make_basis_pair(const Tableau& s, const Tableau& t);

/// All pairs for m <= n, sorted by word (lex, kInfinity greatest).
std::vector<BasisPair> p_mn_pairs(int m, int n);

/// Rook simplex of a word: letter w at position c gives (w, c'); blanks dropped.
/// Vertices are listed by increasing row.
OrientedSimplex tau_simplex(const std::vector<int>& word);
Chain tau_chain(const std::vector<int>& word, const BigInt& coeff = 1);

Chain eta_chain(const BasisPair& p);
OrientedSimplex v_simplex(const BasisPair& p);
Chain u_chain(const BasisPair& p);
/// Cocycle representative; same simplex as v.
OrientedSimplex gamma_class_rep(const BasisPair& p);
/// Sign of the permutation formed by writing each B_i decreasingly and concatenating.
int b_sign(const BasisPair& p);
/// eta = eta_u_sign * u with rows ascending inside tau: b_sign times the signs of
/// the concatenations A_1 A_2 ... and B_1 B_2 ... (each block increasing).
int eta_u_sign(const BasisPair& p);

/// Entry (i, j) = <u(pair_i), v(pair_j)> with pairs in p_mn_pairs order.
SparseIntMatrix pairing_matrix(int m, int n);

struct BasisReport {
  std::size_t pairs = 0;
  std::size_t garst = 0;
  bool lower_unitriangular = false;
  bool eta_cycles = false;
  bool eta_sign_identity = false;
  bool u_v_diagonal = false;
  std::size_t literal_b_sign = 0;  // pairs where eta = b_sign * u already
  std::size_t top_betti = 0;  // SNF
  bool top_torsion_free = false;
  bool eta_spans = false;
  bool ok() const {
    return pairs == garst && lower_unitriangular && eta_cycles && eta_sign_identity && u_v_diagonal &&
           top_betti == pairs && top_torsion_free && eta_spans;
  }
  std::string to_string() const;
};

BasisReport verify_basis(int m, int n);

}  // namespace matchcx
