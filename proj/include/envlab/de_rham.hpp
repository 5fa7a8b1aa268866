#ifndef ENVLAB_DE_RHAM_HPP
#define ENVLAB_DE_RHAM_HPP

#include "envlab/chain_complex.hpp"
#include "envlab/poly.hpp"

namespace envlab {

/// Exterior-derivative matrices on polynomial p-forms with coefficient
/// degree <= cap, wrapped as a (cochain-orientation) complex.
ChainComplex de_rham_complex(int nvars, long degree_cap);

struct HomotopyCheck {
  bool ok;
  long monomials_checked;
  std::vector<std::string> failures;
};

/// Verifies, monomial by monomial up to the degree cap:
///   d h + h d = id           on forms of positive degree,
///   h d      = id - eval_0   on 0-forms,
/// with h the radial homotopy. Also certifies d d = 0 on every
/// generated monomial form. All checks exact.
HomotopyCheck poincare_homotopy_check(int nvars, long degree_cap);

}  // namespace envlab

#endif
