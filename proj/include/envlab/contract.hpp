#ifndef ENVLAB_CONTRACT_HPP
#define ENVLAB_CONTRACT_HPP

#include <string>
#include <variant>
#include <vector>

#include "envlab/lie_algebra.hpp"

namespace envlab {

struct EndoCheckResult {
  bool ok;
  std::vector<std::pair<int, int>> violations;  // bracket pairs (i,j), 0-based
};

/// True iff h[e_i,e_j] = [h e_i, h e_j] for all i < j. Entries h(i,j)
/// express h(e_j) = sum_i h(i,j) e_i.
EndoCheckResult verify_endomorphism(const LieAlgebra& A, const RatMatrix& h);

/// Solution set of diagonal Lie endomorphisms diag(d_1..d_N).
/// Substituting into the brackets turns every nonzero constant c(i,j,k)
/// into the monomial equation d_k = d_i d_j. For a filtered basis the
/// system is triangular: processing constraints in increasing k either
/// defines d_k as a monomial in earlier free parameters or contributes
/// a residual relation x^r = 1 among them.
struct DiagonalSolveResult {
  bool triangular;                       // every constraint had k > i, k > j
  std::vector<std::vector<long>> expr;   // expr[m]: exponents over parameters d_1..d_N
  std::vector<int> free_params;          // 0-based indices still free
  std::vector<std::vector<long>> residual;  // relation lattice rows over free params
  std::vector<int> assumed_nonzero;      // side condition d_i != 0 (0-based)
  long family_dim;                       // free params minus residual rank
  bool rigid_identity;                   // identity is the unique solution under the side condition
  std::string describe() const;
};

/// Side condition defaults to d_1 d_2 != 0 (clipped to the dimension).
DiagonalSolveResult diagonal_endomorphism_solve(const LieAlgebra& A,
                                                std::vector<int> assumed_nonzero = {0, 1});

/// h_t(e_i) = t^{exponents[i]} e_i; the homomorphism identity is a
/// polynomial identity in t.
struct MonomialFamily {
  std::vector<int> exponents;
};

/// h_t(e_i) = f(a_i t + b_i) for a bump f with f == 0 on t <= 0 and
/// f == 1 on t >= 1. Only those two facts are used.
struct BumpFamily {
  std::vector<std::pair<Rational, Rational>> affine;  // (a_i, b_i)
};

using HomotopyFamily = std::variant<MonomialFamily, BumpFamily>;

struct ContractionCertificate {
  bool ok;
  std::vector<std::string> failures;
  std::vector<std::string> checks;  // human-readable record of what was certified
};

/// Certifies h_0 = 0, h_1 = id, and the homomorphism identity for all t
/// in [0,1]: coefficient-wise in t for monomial families, by interval
/// case analysis for bump families.
ContractionCertificate verify_contraction_family(const LieAlgebra& A,
                                                 const HomotopyFamily& family);

/// Evaluates a family at a rational time t in [0,1] where that is
/// symbolically determined (monomial families always; bump families only
/// at arguments <= 0 or >= 1). Used to cross-check against
/// verify_endomorphism at sampled t.
std::optional<RatMatrix> evaluate_family(const HomotopyFamily& family, int dim,
                                         const Rational& t);

}  // namespace envlab

#endif
