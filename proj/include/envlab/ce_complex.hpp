#ifndef ENVLAB_CE_COMPLEX_HPP
#define ENVLAB_CE_COMPLEX_HPP

#include "envlab/chain_complex.hpp"
#include "envlab/lie_algebra.hpp"

namespace envlab {

/// Finite-dimensional g-module given by per-generator action matrices.
/// Left:  rho([x,y]) = rho(x)rho(y) - rho(y)rho(x).
/// Right: rho([x,y]) = rho(y)rho(x) - rho(x)rho(y)  (m -> m*x as a matrix).
struct ModuleAction {
  enum class Side { Left, Right } side;
  int dim;
  std::vector<RatMatrix> rho;  // one matrix per basis generator

  static ModuleAction trivial(const LieAlgebra& A, Side side, int dim = 1);
};

/// Bracket-compatibility check for the action.
bool action_valid(const LieAlgebra& A, const ModuleAction& M);

/// Sign conventions for flipping sides and dualizing:
///   opposite: m*x := -x*m (and vice versa);
///   dual of a right module is a left module via <m, x.f> = <m*x, f>.
ModuleAction opposite_action(const ModuleAction& M);
ModuleAction dual_action_module(const ModuleAction& M);

/// Ordered p-subsets of {0..N-1}, lexicographic.
std::vector<std::vector<int>> wedge_basis(int N, int p);

/// Sign of inserting k into the strictly increasing set I (k not in I):
/// (-1)^{#{i in I : i < k}}.
int wedge_insert_sign(const std::vector<int>& I, int k);

/// Chain complex C_.(g, M) for a right module M, boundary
///   d(m ox X_1^...^X_{n+1}) = sum_i (-1)^{i-1} m.X_i ox ...^X_i^...
///     + sum_{i<j} (-1)^{i+j} m ox [X_i,X_j]^...^X_i^..^X_j^...
ChainComplex ce_chain_complex(const LieAlgebra& A, const ModuleAction& M);

/// True-orientation coboundaries d^k : C^k -> C^{k+1} for a left module.
std::vector<SparseMatrix> ce_cochain_maps(const LieAlgebra& A, const ModuleAction& M);

/// The cochain complex wrapped for homology computation.
ChainComplex ce_cochain_complex(const LieAlgebra& A, const ModuleAction& M);

std::vector<long> lie_homology_betti(const LieAlgebra& A, const ModuleAction& right_M);
std::vector<long> lie_cohomology_betti(const LieAlgebra& A, const ModuleAction& left_M);

struct DualityReport {
  bool nilpotent_simplification;  // twist trivial because g is nilpotent
  std::vector<long> cohomology;   // b^p for M
  std::vector<long> homology;     // b_p for M ox (top wedge)^* as a right module
  bool holds;                     // b^p == b_{N-p} for all p
};

/// Poincare duality shadow: dim H^p(g, M) = dim H_{N-p}(g, M ox (/\^N g)^*).
/// For nilpotent g the twist is trivial (trace of every ad vanishes).
DualityReport poincare_duality_check(const LieAlgebra& A, const ModuleAction& left_M);

}  // namespace envlab

#endif
