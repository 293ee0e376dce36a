#pragma once

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matchcx/bigint.hpp"
#include "matchcx/label.hpp"

namespace matchcx {

/// Canonical simplex: strictly ascending vertex labels. The empty vector is
/// the empty face (dimension -1).
using Simplex = std::vector<VertexLabel>;

/// An ordered tuple of vertices; the order carries the orientation.
struct OrientedSimplex {
  std::vector<VertexLabel> vertices;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  std::string to_string() const;
};

/// Sorts vs and returns the parity sign of the sorting permutation.
/// Throws std::invalid_argument on a repeated vertex.
std::pair<Simplex, int> canonical_orient(std::span<const VertexLabel> vs);

/// Sparse integer combination of canonical simplices of one dimension.
class Chain {
 public:
  using Terms = std::map<Simplex, BigInt>;

  explicit Chain(int degree = 0) : degree_(degree) {}

  /// The chain +-coeff * canonical(vs); degree is |vs| - 1.
  static Chain from_oriented(std::span<const VertexLabel> vs, const BigInt& coeff = 1);
  static Chain from_oriented(std::initializer_list<VertexLabel> vs, const BigInt& coeff = 1);
  /// coeff times the empty face.
  static Chain empty_face(const BigInt& coeff = 1);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Simplex& s) const;

  /// Adds c * s for a canonical simplex s of this chain's degree.
  void add(const Simplex& s, const BigInt& c);
  /// Adds c * vs after canonicalizing.
  void add_oriented(std::span<const VertexLabel> vs, const BigInt& c);

  /// Ground elements touched by the support, sorted and unique.
  std::vector<Ground> support_ground() const;

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain& operator*=(const BigInt& k);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const BigInt& k, Chain a) { return a *= k; }
  friend Chain operator*(int k, Chain a) { return a *= BigInt(k); }
  Chain operator-() const;
  bool operator==(const Chain& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  void check_degree(const Chain& o, const char* op) const;

  int degree_;
  Terms terms_;
};

std::string simplex_to_string(const Simplex& s);

Chain boundary(const Chain& c);

/// Sum of coefficient products over shared simplices; degrees must agree.
BigInt inner_product(const Chain& a, const Chain& b);

/// Concatenation followed by canonicalization, extended bilinearly.
/// The supports must touch disjoint ground elements.
Chain wedge(const Chain& a, const Chain& b);
Chain wedge(std::span<const Chain> factors);

/// Swaps rows and columns: rook (i, j') maps to (j, i').
Chain transpose(const Chain& c);

}  // namespace matchcx
