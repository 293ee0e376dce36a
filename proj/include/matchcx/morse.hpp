#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchcx/bigint.hpp"
#include "matchcx/chain.hpp"
#include "matchcx/complex.hpp"
#include "matchcx/tableaux.hpp"

namespace matchcx {

struct MorseBlock {
  std::vector<int> vertices;  // sorted
  Simplex edges;              // edges of G inside the block

  bool operator==(const MorseBlock&) const = default;
};

struct MorsePartition {
  std::vector<MorseBlock> blocks;

  /// Block sizes, weakly decreasing.
  Shape lambda() const;
  std::string to_string() const;
};

/// Greedy partition: repeatedly take the two smallest uncovered vertices with
/// their G-neighbours; a single leftover vertex forms the last block.
/// g must be a matching of K_n given by graph edges.
MorsePartition rho_partition(const Simplex& g, int n);

/// 1-based index of the first block with two vertices; nullopt stands for infinity.
std::optional<int> mu(const MorsePartition& p);
std::optional<int> mu(const Simplex& g, int n);

Shape lambda_of(const Simplex& g, int n);

/// True when lambda(G) has the critical pattern for the residue of n:
/// (3,...,3), (3,...,3,1) or (4,3,...,3,1).
bool critical_pattern(const Shape& lambda, int n);

struct MorseMatchingReport {
  int n = 0;
  int max_dim = 0;
  std::vector<std::pair<Simplex, Simplex>> pairs;  // (G, G minus one edge), both of dim <= max_dim
  std::vector<Simplex> critical;
  std::vector<std::size_t> cells_by_dim;     // index k + 1 for dimension k
  std::vector<std::size_t> critical_by_dim;  // index k + 1 for dimension k
  std::size_t pattern_mismatches = 0;        // dim nu_n cells where mu = inf and the lambda pattern disagree
  std::size_t unmatched = 0;                 // non-critical cells without a partner (inside the range)
  bool acyclic = false;
  std::optional<Simplex> cycle_witness;

  bool perfect() const { return unmatched == 0; }
};

/// Cells of M_n of dimension -1..d. Throws std::length_error beyond a sizing guard.
MorseMatchingReport morse_pairs(int n, int d, std::size_t max_cells = 5'000'000);

/// c_n in closed form by residue class.
BigInt critical_count_formula(int n);

/// Literal: blocks compared on (|V_i|, |E_i|, V_i, E_i), so ({i,j}, {}) precedes
/// ({i,j}, {ij}). EdgeFirst flips only that two-vertex comparison.
enum class FacetOrder { EdgeFirst, Literal };

/// Facets of the nu_n-skeleton of M_n, sorted block by block.
std::vector<Simplex> lex_facet_order(int n, FacetOrder order = FacetOrder::EdgeFirst);

struct ShellingReport {
  bool ok = false;
  std::vector<Simplex> restriction;  // R_i per facet
  std::size_t homology_facets = 0;   // R_i = F_i
  std::optional<std::size_t> first_violation;
};

/// Checks that each F_i meets the union of earlier facets in a pure
/// (dim F_i - 1)-dimensional complex. Throws unless order permutes the facets of c.
ShellingReport verify_shelling(const Complex& c, const std::vector<Simplex>& order);

/// rank = betti + number of torsion invariant factors.
using KnownRanks = std::map<int, BigInt>;
using KnownChessRanks = std::map<std::pair<int, int>, BigInt>;

struct RankBounds {
  std::optional<BigInt> lower;
  std::optional<BigInt> upper;
  std::string branch;
};

/// r_n bounds for n = 0, 2 mod 3. Missing base ranks or n = 1 mod 3 throw.
RankBounds rank_bounds_matching(int n, const KnownRanks& known);
/// r_{m,n} bounds for m + n = 0, 2 mod 3, m, n >= 2 and max < 2 min - 1.
/// Keys of known are (min, max).
RankBounds rank_bounds_chess(int m, int n, const KnownChessRanks& known);

/// Rank of H~_{nu_n}(M_n) by SNF; r_0 = r_1 = 1.
BigInt computed_rank_matching(int n);
/// Rank of H~_{nu_{m,n}}(M_{m,n}) by SNF; an empty side gives 1.
BigInt computed_rank_chess(int m, int n);

}  // namespace matchcx
