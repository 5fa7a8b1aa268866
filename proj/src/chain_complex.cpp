#include "envlab/chain_complex.hpp"

namespace envlab {

bool composite_zero(const ChainComplex& C) {
  for (std::size_t k = 0; k + 1 < C.maps.size(); ++k) {
    // d_k . d_{k+1} : C_{k+2} -> C_k must vanish.
    const SparseMatrix prod = C.maps[k].mul(C.maps[k + 1]);
    if (prod.nnz() != 0) return false;
  }
  if (C.augmentation && !C.maps.empty()) {
    const SparseMatrix prod = C.augmentation->mul(C.maps[0]);
    if (prod.nnz() != 0) return false;
  }
  return true;
}

std::vector<long> homology_dims(const ChainComplex& C) {
  if (!composite_zero(C)) throw Error("homology_dims: composite of differentials is nonzero");
  const std::size_t n = C.dims.size();
  std::vector<long> rk(C.maps.size());
  for (std::size_t k = 0; k < C.maps.size(); ++k) rk[k] = rank(C.maps[k]);
  std::vector<long> b(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long out = (k == 0) ? 0 : rk[k - 1];  // rank of map leaving C_k
    const long in = (k < rk.size()) ? rk[k] : 0;  // rank of map arriving at C_k
    b[k] = C.dims[k] - out - in;
  }
  return b;
}

bool augmented_exact(const ChainComplex& C) {
  if (!C.augmentation) throw Error("augmented_exact: no augmentation present");
  if (!composite_zero(C)) return false;
  const long aug_rank = rank(*C.augmentation);
  if (aug_rank != 1) return false;  // surjectivity onto the ground field
  std::vector<long> rk(C.maps.size());
  for (std::size_t k = 0; k < C.maps.size(); ++k) rk[k] = rank(C.maps[k]);
  for (std::size_t k = 0; k < C.dims.size(); ++k) {
    const long out = (k == 0) ? aug_rank : rk[k - 1];
    const long in = (k < rk.size()) ? rk[k] : 0;
    if (C.dims[k] - out - in != 0) return false;
  }
  return true;
}

long euler_characteristic(const ChainComplex& C) {
  long chi = 0;
  int sign = 1;
  for (const long d : C.dims) {
    chi += sign * d;
    sign = -sign;
  }
  return chi;
}

}  // namespace envlab
