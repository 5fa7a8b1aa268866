#ifndef ENVLAB_DUAL_POLY_HPP
#define ENVLAB_DUAL_POLY_HPP

#include "envlab/hopf.hpp"
#include "envlab/poly.hpp"

namespace envlab {

struct CutoffError : Error {
  using Error::Error;
};

/// Finitely supported functional on the divided-power basis:
/// value(alpha) = f(e_alpha), e_alpha = e^alpha/alpha!.
class DualFunctional {
public:
  explicit DualFunctional(int nvars = 0) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<MultiIndex, Rational>& values() const { return vals_; }
  Rational value(const MultiIndex& a) const;
  void set(const MultiIndex& a, const Rational& c);

  /// Counit: supported at alpha = 0 with value 1.
  static DualFunctional counit(int nvars);
  /// Dual basis vector at alpha.
  static DualFunctional delta(MultiIndex a);

  friend bool operator==(const DualFunctional&, const DualFunctional&) = default;

private:
  int nvars_;
  std::map<MultiIndex, Rational> vals_;
};

/// kappa: f -> sum_alpha f(e_alpha) z^alpha.
Poly kappa(const DualFunctional& f);
DualFunctional kappa_inverse(const Poly& p);

/// Convolution product dual to the comultiplication, computed through
/// the truncated Hopf tensors (support must fit inside the cutoff
/// window; throws CutoffError otherwise). This is the route independent
/// of plain polynomial multiplication.
DualFunctional functional_product(const DualFunctional& f, const DualFunctional& g,
                                  const TruncatedHopf& H);

/// <e^alpha, psi> = alpha! * coefficient of z^alpha in psi.
Rational dual_pairing(const MultiIndex& alpha, const Poly& psi);

/// The left action of a generator on the polynomial dual determined by
/// right multiplication: coefficient of the result at alpha is
/// (1/alpha!) sum_gamma [e^alpha e_i]_gamma gamma! a_gamma. Exact on
/// finitely supported polynomials; a derivation.
Poly dual_generator_action(const TruncationContext& ctx, int i, const Poly& a);

struct ParallelizabilityCertificate {
  bool unitriangular;                 // phi_ij = 0 below the diagonal, 1 on it
  std::vector<std::vector<Poly>> phi;      // phi[i][j] = e_i . z_j, truncated at degree D
  std::vector<std::vector<Poly>> phi_inv;  // exact inverse (finite Neumann sum)
  bool partial_identity;              // derived derivations satisfy d_i(z_j) = delta_ij
  std::vector<std::string> failures;
  bool ok() const { return unitriangular && partial_identity && failures.empty(); }
};

/// Matrix phi_ij = e_i . z_j over the polynomial dual; for a nilpotent
/// algebra on an ordered filtration basis it is upper triangular with
/// 1's on the diagonal, hence invertible, and the derivations
/// d = phi^{-1} d^0 satisfy d_i(z_j) = delta_ij. Enforces the cutoff
/// coupling W >= D + max_i w_i.
ParallelizabilityCertificate parallelizability_certificate(const TruncationContext& ctx,
                                                           long degree_bound);

struct LocActCertificate {
  bool ok;
  RatMatrix constant_terms;  // of e_i . z_j
};

/// Constant term of e_i . z_j equals delta_ij (the linear-coordinate map
/// hits the identity modulo the augmentation ideal).
LocActCertificate loc_act_check(const TruncationContext& ctx);

struct CeDeRhamCertificate {
  bool ok;
  long polynomials_checked;
  std::vector<std::string> failures;
};

/// Degree-0/1 comparison between the Lie coboundary and the de Rham
/// differential through phi: for every monomial a of degree <= D,
///   e_i . a = sum_j phi_ij * da/dz_j.
/// Higher exterior degrees follow from the exterior-algebra structure.
CeDeRhamCertificate ce_iso_de_rham_check(const TruncationContext& ctx, long degree_bound);

}  // namespace envlab

#endif
