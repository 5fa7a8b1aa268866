#ifndef ENVLAB_HOPF_HPP
#define ENVLAB_HOPF_HPP

#include <map>
#include <string>
#include <vector>

#include "envlab/pbw.hpp"

namespace envlab {

using Tensor1 = std::map<long, Rational>;
using Tensor2 = std::map<std::pair<long, long>, Rational>;
using Tensor3 = std::map<std::array<long, 3>, Rational>;

/// U(g)/J_{W+1} with its full structure as explicit tensors on the
/// quotient basis. Multiplication is the truncated PBW product; the
/// comultiplication of a basis monomial splits with binomial
/// coefficients (divided-power form: Delta e_gamma = sum e_alpha ox
/// e_beta), every factor staying inside the basis because weights are
/// additive in the exponents. Tensor squares inherit the total-weight
/// truncation; the bialgebra axiom is stated there, all other axioms
/// hold on the plain algebraic tensor powers.
struct TruncatedHopf {
  TruncationContext ctx;
  long dim;
  long unit_index;                    // position of e^0
  std::vector<std::vector<Tensor1>> mul;  // mul[a][b]
  std::vector<Tensor2> comul;             // comul[a]
  std::vector<Rational> counit;
  std::vector<Tensor1> antipode;          // antipode[a] = S(e^a)

  long weight_of_index(long a) const { return ctx.weight(ctx.basis()[a]); }

  Tensor1 mul_apply(const Tensor1& x, const Tensor1& y) const;
  Tensor2 comul_apply(const Tensor1& x) const;
  Tensor1 antipode_apply(const Tensor1& x) const;
  Rational counit_apply(const Tensor1& x) const;

  /// Drops tensor-square terms of total weight above the cutoff.
  Tensor2 truncate_square(const Tensor2& t) const;
};

TruncatedHopf build_truncated_hopf(const TruncationContext& ctx);

struct AxiomEntry {
  std::string name;
  bool ok;
  Rational max_violation;  // exact; must be 0 on pass
};

struct AxiomReport {
  std::vector<AxiomEntry> entries;
  bool all_ok() const;
};

/// The seven Hopf axiom identities, checked entrywise over the whole
/// basis: associativity, unit, coassociativity, counit, comultiplication
/// is an algebra map (in the truncated square), counit is an algebra
/// map, antipode identity. Extra structural facts (cocommutativity,
/// S^2 = id, weight additivity of the splitting) are appended as
/// separately named entries.
AxiomReport verify_hopf_axioms(const TruncatedHopf& H);

struct InverseProcessReport {
  bool phi_psi_left;   // Phi Psi = id
  bool phi_psi_right;  // Psi Phi = id
  bool mu_E;           // mu (1 ox S) Delta = eta eps on every basis vector
  bool ok() const { return phi_psi_left && phi_psi_right && mu_E; }
};

/// Phi = (mu ox 1)(1 ox Delta), Psi = (mu ox 1)(1 ox S ox 1)(1 ox Delta)
/// as d^2 x d^2 matrices; asserts they are mutually inverse, and that
/// E = (1 ox S) Delta composed with mu equals eta eps.
InverseProcessReport inverse_process_check(const TruncatedHopf& H);

/// The Phi / Psi matrices themselves (basis pair (a,b) at index a*d+b).
SparseMatrix phi_matrix(const TruncatedHopf& H);
SparseMatrix psi_matrix(const TruncatedHopf& H);

}  // namespace envlab

#endif
