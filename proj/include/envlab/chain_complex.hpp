#ifndef ENVLAB_CHAIN_COMPLEX_HPP
#define ENVLAB_CHAIN_COMPLEX_HPP

#include <optional>
#include <vector>

#include "envlab/matrix.hpp"

namespace envlab {

/// Finite sequence of exact-rational matrices with the composite-zero
/// invariant. Stored in chain orientation: maps[k] sends C_{k+1} to C_k.
/// Cochain complexes store the transposes of their coboundaries in
/// maps[k] (ranks are transpose-invariant, so the homology formula is
/// orientation-agnostic: kernel of the outgoing map modulo image of the
/// incoming one at each spot); the flag records the original
/// orientation.
struct ChainComplex {
  std::vector<long> dims;           // dims of C_0 .. C_n
  std::vector<SparseMatrix> maps;   // maps[k]: C_{k+1} -> C_k
  bool cochain_orientation = false; // provenance only
  std::optional<SparseMatrix> augmentation;  // C_0 -> C (a 1 x dims[0] matrix)
};

/// Every consecutive composite is exactly zero (and the augmentation
/// kills the image of maps[0] when present).
bool composite_zero(const ChainComplex& C);

/// Per-degree homology dimensions by exact ranks:
///   b_k = dim C_k - rank(out_k) - rank(in_k).
/// Throws if the composite-zero invariant fails.
std::vector<long> homology_dims(const ChainComplex& C);

/// Exactness of the augmented complex 0 <- C <- C_0 <- C_1 <- ...:
/// surjective augmentation and vanishing homology everywhere against it.
bool augmented_exact(const ChainComplex& C);

/// Alternating sum of space dimensions (equals the alternating sum of
/// homology dimensions).
long euler_characteristic(const ChainComplex& C);

}  // namespace envlab

#endif
