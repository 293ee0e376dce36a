#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "matchcx/complex.hpp"
#include "matchcx/snf.hpp"

namespace matchcx {

/// Z^betti plus torsion factors (each > 1, divisibility order).
struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;

  /// Size of a minimal generating set.
  std::size_t rank() const { return betti + torsion.size(); }
  bool is_zero() const { return betti == 0 && torsion.empty(); }
  /// "0", "Z^2", "Z_3", "Z^42 + Z_3^8".
  std::string to_string() const;
  bool operator==(const HomologyGroup&) const = default;

  static HomologyGroup parse(const std::string& s);
};

struct HomologyOptions {
  SnfOptions snf;
  unsigned threads = 1;
};

struct HomologyRun {
  HomologyGroup group;
  std::size_t faces_k = 0;
  std::size_t rank_in = 0;   // rank of the boundary out of degree k
  std::size_t rank_out = 0;  // rank of the boundary into degree k
  SnfStats stats_in;
  SnfStats stats_out;
};

/// Reduced integral homology in degree k (k >= -1).
HomologyGroup homology(const Complex& c, int k, const HomologyOptions& opts = {});
HomologyRun homology_run(const Complex& c, int k, const HomologyOptions& opts = {});

/// dim H~_k(c; F_p). Throws for non-prime p.
std::size_t betti_mod_p(const Complex& c, int k, std::uint32_t p);

bool is_cycle(const Chain& z);

/// Column vector of a chain in the face basis of c, as a one-column matrix.
SparseIntMatrix chain_column(const Chain& z, const Complex& c);
/// Several chains of one degree as the columns of a matrix.
SparseIntMatrix chain_columns(std::span<const Chain> zs, int degree, const Complex& c);

/// Least d >= 1 with d*z a boundary in c, or 0 if z has infinite order.
BigInt torsion_order(const Chain& z, const Complex& c, const SnfOptions& opts = {});
bool is_boundary(const Chain& z, const Complex& c, const SnfOptions& opts = {});

/// Whether the classes of a family of k-cycles generate H~_k(c).
struct SpanReport {
  std::size_t cycle_rank = 0;     // rank of Z_k
  std::size_t spanned_rank = 0;   // rank of B_k + <family>
  std::vector<BigInt> index_factors;  // invariant factors > 1 of B_k + <family>
  std::size_t rank_mod3 = 0;        // rank over F_3 of B_k + <family>
  std::size_t cycle_rank_mod3 = 0;  // dim Z_k(F_3)
  bool spans() const { return spanned_rank == cycle_rank && index_factors.empty(); }
};
SpanReport span_check(const Complex& c, int k, std::span<const Chain> family, const SnfOptions& opts = {});

}  // namespace matchcx
