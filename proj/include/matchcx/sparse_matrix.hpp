#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "matchcx/bigint.hpp"

namespace matchcx {

struct MatrixEntry {
  std::uint32_t row;
  std::uint32_t col;
  BigInt value;
};

/// Sparse integer matrix in coordinate form. No zeros, no repeated coordinates.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<MatrixEntry>& entries() const { return entries_; }

  /// Appends an entry; zero values are dropped. Coordinates must be new.
  void push(std::uint32_t r, std::uint32_t c, const BigInt& v);
  /// Sorts entries by (row, col) and rejects duplicates.
  void normalize();

  SparseIntMatrix transposed() const;
  /// Appends columns of o to the right of this matrix (row counts must agree).
  void append_columns(const SparseIntMatrix& o);
  BigInt at(std::size_t r, std::size_t c) const;

  bool operator==(const SparseIntMatrix& o) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

// SMS text format: "rows cols M", then "i j v" lines (1-based), then "0 0 0".
void write_sms(std::ostream& out, const SparseIntMatrix& m);
SparseIntMatrix read_sms(std::istream& in);
void save_sms(const std::string& path, const SparseIntMatrix& m);
SparseIntMatrix load_sms(const std::string& path);

}  // namespace matchcx
