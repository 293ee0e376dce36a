#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "matchcx/bigint.hpp"

namespace matchcx {

/// Weakly decreasing positive parts; empty for the empty partition.
using Shape = std::vector<int>;

inline constexpr int kInfinity = std::numeric_limits<int>::max();

bool is_partition(const Shape& s);
int shape_size(const Shape& s);
Shape conjugate(const Shape& s);
/// All partitions of n in decreasing lex order.
std::vector<Shape> partitions(int n);

class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Shape shape() const;
  int size() const;
  int at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  /// Rows and columns strictly increase and entries are 1..size once each.
  bool is_standard() const;
  /// Rows weakly and columns strictly increase, with kInfinity the largest letter.
  bool is_semistandard() const;

  /// One row per line, space separated, "inf" for the sentinel.
  std::string to_text() const;
  static Tableau parse(const std::string& text);

  bool operator==(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

BigInt f_lambda(const Shape& s);
BigInt catalan(int k);
std::vector<Tableau> syt_enumerate(const Shape& s);

/// Row insertion; kInfinity may repeat and always lands at the end of row 1.
std::pair<Tableau, Tableau> rsk(const std::vector<int>& word);

/// For entry k of Q (1-based), the letter leaving the first row and the column it left from.
struct PopRecord {
  int q_entry = 0;
  int letter = 0;
  int column = 0;  // 1-based
};

struct InverseRs {
  std::vector<int> word;
  std::vector<PopRecord> pops;  // in removal order, q_entry = size..1
};

InverseRs inverse_rs_tracked(const Tableau& p, const Tableau& q);
std::vector<int> inverse_rs(const Tableau& p, const Tableau& q);

/// Lexicographic comparison with kInfinity greatest.
bool word_less(const std::vector<int>& a, const std::vector<int>& b);
std::string word_to_string(const std::vector<int>& w);

/// dim H~_{p-1}(M_{m,n}; Q) from the rectangle-containment rule.
BigInt betti_fh(int m, int n, int p);
/// Sum over lambda |- m with lambda_1 <= n - m of f^lambda * f^(lambda plus a part n - m).
BigInt garst_top_rank(int m, int n);

}  // namespace matchcx
