#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matchcx/chain.hpp"
#include "matchcx/sparse_matrix.hpp"

namespace matchcx {

/// Lexicographically sorted k-simplices stored flat with stride k+1.
class FaceTable {
 public:
  FaceTable() = default;
  explicit FaceTable(int dim) : dim_(dim) {}
  FaceTable(int dim, std::vector<VertexLabel> flat);

  int dim() const { return dim_; }
  std::size_t stride() const { return static_cast<std::size_t>(dim_ + 1); }
  std::size_t size() const;
  std::span<const VertexLabel> operator[](std::size_t i) const {
    return {flat_.data() + i * stride(), stride()};
  }
  /// Index of a canonical simplex, if present.
  std::optional<std::size_t> find(std::span<const VertexLabel> s) const;

  void append(std::span<const VertexLabel> s);
  const std::vector<VertexLabel>& flat() const { return flat_; }

 private:
  int dim_ = -1;
  std::size_t empty_count_ = 0;  // only used for dim -1
  std::vector<VertexLabel> flat_;
};

/// Finite simplicial complex on labelled vertices, faces enumerated by
/// dimension including the empty face.
class Complex {
 public:
  Complex() : Complex("empty", {}) {}
  /// tables[k+1] holds the k-faces; tables[0] is ignored and replaced by the empty face.
  Complex(std::string name, std::vector<FaceTable> tables);

  const std::string& name() const { return name_; }
  /// Top dimension; -1 when only the empty face exists.
  int dim() const { return static_cast<int>(tables_.size()) - 2; }
  std::size_t num_faces(int k) const;
  const FaceTable& faces(int k) const;
  std::vector<VertexLabel> vertices() const;
  /// Face counts f_{-1}, f_0, ..., f_dim.
  std::vector<std::size_t> face_counts() const;

  bool contains(const Simplex& s) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;

  /// Matrix of the k-th boundary map: rows are (k-1)-faces, columns k-faces.
  SparseIntMatrix boundary_matrix(int k) const;

  /// Coordinates of a chain in the face basis of its degree. Throws if a
  /// simplex is not a face.
  std::vector<std::pair<std::size_t, BigInt>> coordinates(const Chain& c) const;
  Chain chain_from_coordinates(int k, std::span<const std::pair<std::size_t, BigInt>> xs) const;

  /// Facets in ascending dimension order, each as a canonical simplex.
  std::vector<Simplex> facets() const;

  void set_name(std::string n) { name_ = std::move(n); }

 private:
  std::string name_;
  std::vector<FaceTable> tables_;
};

Chain coboundary(const Chain& c, const Complex& ambient);

/// All faces of dimension at most d.
Complex skeleton(const Complex& c, int d);

/// Independence complex of the line graph of the given edges: faces are
/// matchings. max_dim < -1 means unbounded.
Complex matching_complex_of_edges(std::string name, std::vector<VertexLabel> edges, int max_dim = -2);

}  // namespace matchcx
