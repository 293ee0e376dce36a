#include "matchcx/sparse_matrix.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace matchcx {

void SparseIntMatrix::push(std::uint32_t r, std::uint32_t c, const BigInt& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix entry out of bounds");
  if (v == 0) return;
  entries_.push_back({r, c, v});
}

void SparseIntMatrix::normalize() {
  std::sort(entries_.begin(), entries_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].row == entries_[i - 1].row && entries_[i].col == entries_[i - 1].col)
      throw std::invalid_argument("duplicate matrix coordinate");
}

SparseIntMatrix SparseIntMatrix::transposed() const {
  SparseIntMatrix t(cols_, rows_);
  t.entries_.reserve(entries_.size());
  for (const auto& e : entries_) t.entries_.push_back({e.col, e.row, e.value});
  t.normalize();
  return t;
}

void SparseIntMatrix::append_columns(const SparseIntMatrix& o) {
  if (o.rows_ != rows_) throw std::invalid_argument("append_columns: row counts differ");
  auto shift = static_cast<std::uint32_t>(cols_);
  cols_ += o.cols_;
  for (const auto& e : o.entries_) entries_.push_back({e.row, e.col + shift, e.value});
}

BigInt SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  for (const auto& e : entries_)
    if (e.row == r && e.col == c) return e.value;
  return 0;
}

bool SparseIntMatrix::operator==(const SparseIntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || entries_.size() != o.entries_.size()) return false;
  auto a = *this;
  auto b = o;
  a.normalize();
  b.normalize();
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto &x = a.entries_[i], &y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
  }
  return true;
}

void write_sms(std::ostream& out, const SparseIntMatrix& m) {
  auto sorted = m;
  sorted.normalize();
  out << m.rows() << ' ' << m.cols() << " M\n";
  for (const auto& e : sorted.entries()) out << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value.get_str() << '\n';
  out << "0 0 0\n";
}

SparseIntMatrix read_sms(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  std::string tag;
  if (!(in >> rows >> cols >> tag) || tag != "M") throw std::invalid_argument("SMS: bad header");
  SparseIntMatrix m(rows, cols);
  for (;;) {
    long long i = 0, j = 0;
    std::string v;
    if (!(in >> i >> j >> v)) throw std::invalid_argument("SMS: missing terminator");
    if (i == 0 && j == 0) break;
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > rows || static_cast<std::size_t>(j) > cols)
      throw std::invalid_argument("SMS: entry out of range");
    BigInt val;
    if (val.set_str(v, 10) != 0) throw std::invalid_argument("SMS: bad value " + v);
    m.push(static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(j - 1), val);
  }
  m.normalize();
  return m;
}

void save_sms(const std::string& path, const SparseIntMatrix& m) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  write_sms(f, m);
}

SparseIntMatrix load_sms(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_sms(f);
}

}  // namespace matchcx
