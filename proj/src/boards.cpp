#include "matchcx/boards.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace matchcx {

BoardMask::BoardMask(int m, int n, std::vector<Cell> cells) : m_(m), n_(n), cells_(std::move(cells)) {
  if (m < 1 || n < 1 || m > Ground::kMaxValue || n > Ground::kMaxValue)
    throw std::invalid_argument("board dimensions out of range");
  for (auto [i, j] : cells_)
    if (i < 1 || i > m || j < 1 || j > n)
      throw std::invalid_argument("cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside the board");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

BoardMask BoardMask::full(int m, int n) {
  std::vector<Cell> cells;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) cells.emplace_back(i, j);
  return BoardMask(m, n, std::move(cells));
}

bool BoardMask::contains(int i, int j) const { return std::binary_search(cells_.begin(), cells_.end(), Cell{i, j}); }

bool BoardMask::contains(const BoardMask& o) const {
  return std::includes(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end());
}

std::string BoardMask::to_text() const {
  std::ostringstream out;
  out << m_ << ' ' << n_ << '\n';
  for (auto [i, j] : cells_) out << i << ' ' << j << '\n';
  return out.str();
}

BoardMask BoardMask::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool header = false;
  int m = 0, n = 0;
  std::vector<Cell> cells;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int a, b;
    if (!(ls >> a)) continue;
    std::string rest;
    if (!(ls >> b) || (ls >> rest)) throw std::invalid_argument("board file line " + std::to_string(lineno) + ": expected two integers");
    if (!header) {
      m = a;
      n = b;
      header = true;
    } else {
      cells.emplace_back(a, b);
    }
  }
  if (!header) throw std::invalid_argument("board file: missing 'm n' header");
  return BoardMask(m, n, std::move(cells));
}

BoardMask BoardMask::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open board file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

BoardMask diagonal_deleted(int n) {
  if (n < 2) throw std::invalid_argument("D_n needs n >= 2");
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) cells.emplace_back(i, j);
  return BoardMask(n, n, std::move(cells));
}

BoardMask gamma_board(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw std::invalid_argument("Gamma(n,k) needs 0 <= k <= n-1");
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (std::abs(j - i) <= k) cells.emplace_back(i, j);
  return BoardMask(n, n, std::move(cells));
}

BoardMask b_board(int n) {
  if (n < 3) throw std::invalid_argument("B_n needs n >= 3");
  int big_n = 0;
  switch (n % 3) {
    case 0: big_n = (n - 3) / 3; break;
    case 2: big_n = (n - 5) / 3; break;
    default: big_n = (n - 7) / 3; break;
  }
  std::vector<Cell> cells;
  for (int i = 0; i <= big_n; ++i) {
    int b = 3 * i;
    cells.insert(cells.end(), {{b + 1, b + 1}, {b + 1, b + 2}, {b + 2, b + 3}, {b + 3, b + 3}});
  }
  if (n % 3 == 2) {
    cells.insert(cells.end(), {{n - 1, n - 1}, {n - 1, n}});
  } else if (n % 3 == 1) {
    for (int i = n - 3; i <= n; ++i)
      for (int j = n - 3; j <= n; ++j) cells.emplace_back(i, j);
  }
  return BoardMask(n, n, std::move(cells));
}

BoardMask permute_mask(const BoardMask& b, const std::vector<int>& row_perm, const std::vector<int>& col_perm) {
  auto check = [](const std::vector<int>& p, int size, const char* what) {
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    if (static_cast<int>(s.size()) != size) throw std::invalid_argument(std::string(what) + " permutation has wrong length");
    for (int i = 0; i < size; ++i)
      if (s[static_cast<std::size_t>(i)] != i + 1) throw std::invalid_argument(std::string(what) + " is not a permutation");
  };
  check(row_perm, b.m(), "row");
  check(col_perm, b.n(), "column");
  std::vector<Cell> cells;
  for (auto [i, j] : b.cells())
    cells.emplace_back(row_perm[static_cast<std::size_t>(i - 1)], col_perm[static_cast<std::size_t>(j - 1)]);
  return BoardMask(b.m(), b.n(), std::move(cells));
}

BoardMask transpose_mask(const BoardMask& b) {
  std::vector<Cell> cells;
  for (auto [i, j] : b.cells()) cells.emplace_back(j, i);
  return BoardMask(b.n(), b.m(), std::move(cells));
}

std::vector<Ground> plain_range(int n) {
  std::vector<Ground> g;
  for (int i = 1; i <= n; ++i) g.push_back(Ground::plain(i));
  return g;
}

std::vector<int> iota_range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

Complex matching_complex(const std::vector<Ground>& ground, int max_dim) {
  std::vector<VertexLabel> edges;
  for (std::size_t a = 0; a < ground.size(); ++a)
    for (std::size_t b = a + 1; b < ground.size(); ++b) edges.emplace_back(ground[a], ground[b]);
  std::string name = "M_{";
  for (std::size_t i = 0; i < ground.size(); ++i) name += (i ? "," : "") + ground[i].to_string();
  return matching_complex_of_edges(name + "}", std::move(edges), max_dim);
}

Complex matching_complex(int n, int max_dim) {
  if (n < 0) throw std::invalid_argument("matching complex needs n >= 0");
  auto c = matching_complex(plain_range(n), max_dim);
  c.set_name("M_" + std::to_string(n));
  return c;
}

Complex chessboard_complex(const std::vector<int>& rows, const std::vector<int>& cols, int max_dim) {
  std::vector<VertexLabel> edges;
  for (int i : rows)
    for (int j : cols) edges.push_back(VertexLabel::rook(i, j));
  auto join = [](const std::vector<int>& v, bool prime) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]) + (prime ? "'" : "");
    return s;
  };
  return matching_complex_of_edges("M_{{" + join(rows, false) + "},{" + join(cols, true) + "}}", std::move(edges),
                                   max_dim);
}

Complex chessboard_complex(int m, int n, int max_dim) {
  if (m < 1 || n < 1) throw std::invalid_argument("chessboard complex needs m, n >= 1");
  auto c = chessboard_complex(iota_range(1, m), iota_range(1, n), max_dim);
  c.set_name("M_{" + std::to_string(m) + "," + std::to_string(n) + "}");
  return c;
}

Complex board_complex(const BoardMask& mask, int max_dim) {
  if (mask.size() == 0) throw std::invalid_argument("board complex of an empty mask");
  std::vector<VertexLabel> edges;
  for (auto [i, j] : mask.cells()) edges.push_back(VertexLabel::rook(i, j));
  return matching_complex_of_edges("M(A) on " + std::to_string(mask.m()) + "x" + std::to_string(mask.n()) + " board",
                                   std::move(edges), max_dim);
}

int nu_matching(int n) {
  if (n < 0) throw std::invalid_argument("nu_matching needs n >= 0");
  return (n + 1) / 3 - 1;
}

int nu_chess(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("nu_chess needs m, n >= 0");
  return std::min({m, n, (m + n + 1) / 3}) - 1;
}

}  // namespace matchcx
