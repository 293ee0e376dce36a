#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchcx/bigint.hpp"
#include "matchcx/sparse_matrix.hpp"

namespace matchcx {

struct SnfOptions {
  /// Upper bound on bytes spent densifying the residual block.
  std::size_t max_dense_bytes = std::size_t(4) << 30;
  /// Abort once this instant passes.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Rank over two word-size primes before the exact run (reported only).
  bool modular_prepass = false;
};

struct SnfStats {
  std::size_t unit_pivots = 0;
  std::size_t divisor_pivots = 0;
  std::size_t residual_rows = 0;
  std::size_t residual_cols = 0;
  bool bigint_sparse = false;
  bool bigint_dense = false;
  std::vector<std::pair<std::uint32_t, std::size_t>> modular_ranks;  // (prime, rank)
};

class SnfResult {
 public:
  SnfResult() = default;
  SnfResult(std::size_t rank, std::vector<BigInt> nontrivial, SnfStats stats = {});

  std::size_t rank() const { return rank_; }
  /// Invariant factors greater than one, in divisibility order.
  const std::vector<BigInt>& nontrivial() const { return nontrivial_; }
  /// d_1 | d_2 | ... | d_r including the leading ones.
  std::vector<BigInt> invariant_factors() const;
  /// Product of all invariant factors.
  BigInt determinant_product() const;
  const SnfStats& stats() const { return stats_; }

 private:
  std::size_t rank_ = 0;
  std::vector<BigInt> nontrivial_;
  SnfStats stats_;
};

SnfResult smith_normal_form(const SparseIntMatrix& m, const SnfOptions& opts = {});

/// Rank over F_p. Throws std::invalid_argument unless p is a prime below 2^31.
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t p);

bool is_prime(std::uint64_t p);

/// Replaces a multiset of positive integers by its invariant-factor chain
/// (gcd/lcm normal form); ones are dropped.
std::vector<BigInt> normalize_invariant_factors(std::vector<BigInt> ds);

}  // namespace matchcx
