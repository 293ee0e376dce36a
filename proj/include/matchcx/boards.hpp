#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matchcx/complex.hpp"

namespace matchcx {

using Cell = std::pair<int, int>;

/// A set of cells of the m x n board (1-based), kept sorted and unique.
class BoardMask {
 public:
  BoardMask(int m, int n, std::vector<Cell> cells = {});
  static BoardMask full(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(int i, int j) const;
  /// True if every cell of o is a cell of this mask.
  bool contains(const BoardMask& o) const;

  /// Board-file text: "m n" then one "i j" per line.
  std::string to_text() const;
  static BoardMask parse(const std::string& text);
  static BoardMask load(const std::string& path);

  bool operator==(const BoardMask&) const = default;

 private:
  int m_;
  int n_;
  std::vector<Cell> cells_;
};

/// Board [n] x [n] minus the diagonal.
BoardMask diagonal_deleted(int n);
/// Cells (i, j) with |j - i| <= k.
BoardMask gamma_board(int n, int k);
/// The block board B_n: diagonal blocks S_i plus the remainder R_n.
BoardMask b_board(int n);
/// Relabels rows and columns: cell (i, j) goes to (row_perm[i-1], col_perm[j-1]).
BoardMask permute_mask(const BoardMask& b, const std::vector<int>& row_perm, const std::vector<int>& col_perm);
BoardMask transpose_mask(const BoardMask& b);

/// Matching complex on an explicit ground set.
Complex matching_complex(const std::vector<Ground>& ground, int max_dim = -2);
/// M_n on [n].
Complex matching_complex(int n, int max_dim = -2);
/// Chessboard complex on rows X and primed columns Y.
Complex chessboard_complex(const std::vector<int>& rows, const std::vector<int>& cols, int max_dim = -2);
/// M_{m,n}.
Complex chessboard_complex(int m, int n, int max_dim = -2);
Complex board_complex(const BoardMask& mask, int max_dim = -2);

/// floor((n+1)/3) - 1
int nu_matching(int n);
/// min(m, n, floor((m+n+1)/3)) - 1
int nu_chess(int m, int n);

/// 1..n as plain ground elements.
std::vector<Ground> plain_range(int n);
std::vector<int> iota_range(int lo, int hi);

}  // namespace matchcx
