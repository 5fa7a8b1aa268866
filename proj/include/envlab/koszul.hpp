#ifndef ENVLAB_KOSZUL_HPP
#define ENVLAB_KOSZUL_HPP

#include "envlab/chain_complex.hpp"
#include "envlab/pbw.hpp"

namespace envlab {

struct KoszulCertificate {
  std::vector<long> dims;        // truncated C_0 .. C_N
  std::vector<long> homology;    // of the augmented complex (index 0 = ground field spot)
  bool exact;                    // all augmented homology vanishes
  bool weight_monotone;          // d never lowers total weight
  bool weight_preserved;         // total weight exactly preserved (graded case)
};

/// Truncated augmented Koszul complex
///   0 <- C <- C_.(g, U(g)) / (total weight > W)
/// where the total weight of e^alpha ox e_I is w(alpha) + sum_{i in I} w_i.
/// The bracket terms never lower total weight, so the truncation is a
/// quotient complex; exactness is certified by exact ranks.
KoszulCertificate koszul_quotient_exactness(const LieAlgebra& A, const WeightStructure& W,
                                            long cutoff);

/// Convenience: builds the complex itself (used by tests).
ChainComplex truncated_koszul_complex(const LieAlgebra& A, const WeightStructure& W,
                                      long cutoff);

}  // namespace envlab

#endif
