#ifndef ENVLAB_HOCHSCHILD_HPP
#define ENVLAB_HOCHSCHILD_HPP

#include "envlab/hopf.hpp"
#include "envlab/matrix.hpp"

namespace envlab {

struct SizeCapError : Error {
  using Error::Error;
};

/// Bimodule over a truncated Hopf algebra: commuting left/right action
/// matrices per basis element of H.
struct Bimodule {
  int dim;
  std::vector<RatMatrix> left;   // left[a] : m -> e_a . m
  std::vector<RatMatrix> right;  // right[a] : m -> m . e_a

  /// H as a bimodule over itself.
  static Bimodule regular(const TruncatedHopf& H);

  /// The ground field with both actions through the counit.
  static Bimodule trivial(const TruncatedHopf& H, int dim = 1);
};

bool bimodule_valid(const TruncatedHopf& H, const Bimodule& M);

/// The left action through E = (1 ox S) Delta:
///   a . m = sum a_(1) m S(a_(2)).
std::vector<RatMatrix> e_twisted_left_action(const TruncatedHopf& H, const Bimodule& M);

struct HochschildExtResult {
  std::vector<long> hochschild;  // dim H^k(H, M), k = 0..k_max
  std::vector<long> ext;         // dim Ext^k_H(C, _E M)
  bool agree;
};

/// Computes H^k(H,M) from the Hochschild bar cochain complex and
/// Ext^k_H(C, _EM) from the bar resolution of the trivial module, both
/// by exact ranks, and compares the dimension columns. Both complexes
/// live over total-weight-truncated tensor powers: the quotient carries
/// its Hopf structure in the filtered sense only, and the comparison
/// identity descends exactly there (the product, splitting, and
/// antipode never lower total weight, so the bar differentials and the
/// inverse-process isomorphisms all pass to the truncation). Throws
/// SizeCapError when a differential would exceed the per-degree cap
/// (rows + columns).
HochschildExtResult hochschild_ext_compare(const TruncatedHopf& H, const Bimodule& M,
                                           int k_max, long size_cap = 20000);

}  // namespace envlab

#endif
