#pragma once

#include <utility>
#include <vector>

#include "matchcx/chain.hpp"

namespace matchcx {

enum class LesFamily { Matching, Chessboard };

/// Index data for one component of phi, psi or delta.
///
/// Matching (distinguished 1, 2; ground [n]):
///   phi  (a, i): a in {1,2}, i in 3..n
///   psi / delta (i, j): i != j in 3..n
/// Chessboard (distinguished 1, 1'; board [m] x [n]):
///   phi  (a = 1, i): row summand, i in 2..m, map z -> (11' - i1') ^ z
///   phi  (a = 2, i): column summand, i in 2..n, map z -> (11' - 1i') ^ z
///   psi / delta (i, j): i in 2..m, j in 2..n
struct LesMapSpec {
  LesFamily family = LesFamily::Matching;
  int m = 0;
  int n = 0;
  int a = 0;
  int i = 0;
  int j = 0;
};

Chain les_phi(const LesMapSpec& spec, const Chain& z);
/// Termwise: x = 1i ^ 2j ^ y (matching) or x = 1j' ^ i1' ^ y (chessboard) gives y, else 0.
Chain les_psi(const LesMapSpec& spec, const Chain& x);
/// The two nonzero components of delta^{i,j}(z), each tagged with its phi summand.
std::vector<std::pair<LesMapSpec, Chain>> les_delta(const LesMapSpec& spec, const Chain& z);

/// Ground elements allowed in the source of each map.
std::vector<Ground> les_phi_domain(const LesMapSpec& spec);
std::vector<Ground> les_psi_target(const LesMapSpec& spec);

}  // namespace matchcx
