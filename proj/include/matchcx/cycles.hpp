#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "matchcx/chain.hpp"
#include "matchcx/complex.hpp"

namespace matchcx {

/// A cycle together with the complex it lives in.
struct NamedCycle {
  Chain chain;
  std::shared_ptr<const Complex> ambient;
  std::string provenance;
};

/// Checks that z is a cycle supported on faces of the ambient complex.
NamedCycle make_named(Chain z, std::shared_ptr<const Complex> ambient, std::string provenance);

// Chain builders. Rows are plain labels, columns primed.

/// ik' - il'
Chain alpha_chain(int i, int k, int l);
/// ik' - jk'
Chain beta_chain(int i, int j, int k);
/// (1a ^ 2b) + (2b ^ ra) + (ra ^ 12) + (12 ^ rb) + (rb ^ 1a) on K_{1,2,a,b,r}.
Chain pentagon_chain(int a, int b, int r);
Chain hexagon_u_chain(int i1, int i2, int j1, int j2, int j3);
Chain hexagon_v_chain(int i1, int i2, int i3, int j1, int j2);
/// Signed sum over arrangements of rows(A) + one blank across the columns B.
/// A may be empty, giving the empty face.
Chain rho_chain(std::vector<int> rows, std::vector<int> cols);
/// (13,24) + (24,15) + (15,26) + (26,13) in M_7.
Chain z7_chain();
/// Wedge of (s1 s2 - s1 s3) over consecutive triples of sigma, up to 3*floor(n/3).
Chain triple_wedge_chain(int n, const std::vector<int>& sigma);
/// alpha_{1,1',2'} ^ ... ^ alpha_{t,(2t-1)',(2t)'} ^ beta_{t+1,t+2,(2t+1)'} ^ ... ^ beta_{m-2,m-1,n'},
/// t = (2n-m+1)/3.
Chain chess_torsion_chain(int m, int n);
/// Interleaved alpha / beta product on M_{m,n} for m+n = 0 mod 3, n <= 2m.
Chain interleaved_chain(int m, int n);
/// Non-bounding cycle on the board B_n.
Chain b_board_chain(int n);

// Named wrappers with their natural ambient complexes.

NamedCycle alpha(int i, int k, int l);
NamedCycle beta(int i, int j, int k);
NamedCycle pentagon(int a, int b, int r);
NamedCycle hexagon_u(int i1, int i2, int j1, int j2, int j3);
NamedCycle hexagon_v(int i1, int i2, int i3, int j1, int j2);
NamedCycle rho_fundamental(const std::vector<int>& rows, const std::vector<int>& cols);

struct CycleParams {
  std::vector<int> args;
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<int> sigma;
};

/// Registry: z7, pentagon, hexagon-u, hexagon-v, rho, thm5.6, lemma2.5,
/// blvz-witness, lemma8.1. Aliases: chess-torsion, triple-wedge, interleaved, bboard.
NamedCycle named_generators(const std::string& kind, const CycleParams& params);
const std::vector<std::string>& cycle_kinds();

/// Generating cycles of the bottom nonvanishing homology of a board with
/// rows <= cols < 2 rows - 1 (transposed otherwise):
///   m+n = 1 mod 3: alpha^t ^ beta^(n-2t) over sigma in S_m, tau in S_n
///   m+n = 0 mod 3: alpha ^ beta ^ xi
///   m+n = 2 mod 3: alpha ^ rho and beta ^ rho
/// with xi, rho drawn recursively; |cols| = |rows| + 1 gives rho_chain, one row
/// gives alpha differences. Stops after cap distinct chains (up to sign).
std::vector<Chain> chess_generator_family(const std::vector<int>& rows, const std::vector<int>& cols,
                                          std::size_t cap = 20000);

/// v - v0 for every listed vertex v after the first; generates reduced H_0
/// of a connected complex on these vertices.
std::vector<Chain> vertex_differences(const std::vector<VertexLabel>& vertices);

}  // namespace matchcx
