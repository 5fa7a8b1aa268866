#include "envlab/koszul.hpp"

#include <algorithm>
#include <map>

#include "envlab/ce_complex.hpp"

namespace envlab {

namespace {

struct TruncatedLevel {
  // basis: (monomial index into ctx basis, wedge subset position)
  std::vector<std::pair<long, long>> elems;
  std::map<std::pair<long, long>, long> index;
  std::vector<long> total_weight;
};

}  // namespace

ChainComplex truncated_koszul_complex(const LieAlgebra& A, const WeightStructure& W,
                                      long cutoff) {
  if (!is_nilpotent(A)) throw Error("koszul: algebra must be nilpotent");
  TruncationContext ctx(A, W, cutoff);
  const int N = A.dim();
  const auto& weights = W.weights;

  std::vector<std::vector<std::vector<int>>> wedges(N + 1);
  std::vector<std::map<std::vector<int>, long>> wedge_index(N + 1);
  for (int p = 0; p <= N; ++p) {
    wedges[p] = wedge_basis(N, p);
    for (std::size_t t = 0; t < wedges[p].size(); ++t)
      wedge_index[p][wedges[p][t]] = static_cast<long>(t);
  }
  auto wedge_weight = [&](const std::vector<int>& I) {
    long w = 0;
    for (int i : I) w += weights[i];
    return w;
  };

  std::vector<TruncatedLevel> levels(N + 1);
  for (int p = 0; p <= N; ++p) {
    for (std::size_t wpos = 0; wpos < wedges[p].size(); ++wpos) {
      const long ww = wedge_weight(wedges[p][wpos]);
      for (long b = 0; b < ctx.dim(); ++b) {
        const long tw = ctx.weight(ctx.basis()[b]) + ww;
        if (tw > cutoff) continue;
        levels[p].index[{b, static_cast<long>(wpos)}] =
            static_cast<long>(levels[p].elems.size());
        levels[p].elems.emplace_back(b, static_cast<long>(wpos));
        levels[p].total_weight.push_back(tw);
      }
    }
  }

  ChainComplex C;
  for (int p = 0; p <= N; ++p) C.dims.push_back(static_cast<long>(levels[p].elems.size()));

  for (int p = 0; p + 1 <= N; ++p) {
    SparseMatrix d(C.dims[p], C.dims[p + 1]);
    const auto& from = levels[p + 1];
    for (std::size_t col = 0; col < from.elems.size(); ++col) {
      const auto [b, wpos] = from.elems[col];
      const MultiIndex& alpha = ctx.basis()[b];
      const auto& J = wedges[p + 1][wpos];
      // right regular action: e^alpha . e_i = normal form of the product
      for (std::size_t t = 0; t < J.size(); ++t) {
        const int sgn = (t % 2 == 0) ? 1 : -1;
        std::vector<int> Jt;
        for (std::size_t u = 0; u < J.size(); ++u)
          if (u != t) Jt.push_back(J[u]);
        const long wrow_sub = wedge_index[p].at(Jt);
        const UElement prod = ctx.pbw().mul_generator(alpha, J[t]);
        for (const auto& [gamma, c] : prod.terms()) {
          const long gb = ctx.index_of(gamma);
          if (gb < 0) continue;
          const auto it = levels[p].index.find({gb, wrow_sub});
          if (it == levels[p].index.end()) continue;
          d.add(it->second, static_cast<long>(col), Rational(sgn) * c);
        }
      }
      // bracket terms
      for (std::size_t s = 0; s < J.size(); ++s)
        for (std::size_t t = s + 1; t < J.size(); ++t) {
          const int sgn = ((s + t) % 2 == 0) ? 1 : -1;
          std::vector<int> Jst;
          for (std::size_t u = 0; u < J.size(); ++u)
            if (u != s && u != t) Jst.push_back(J[u]);
          for (int k = 0; k < N; ++k) {
            const Rational& c = A.c(J[s], J[t], k);
            if (c.is_zero()) continue;
            const int isgn = wedge_insert_sign(Jst, k);
            if (isgn == 0) continue;
            std::vector<int> Jk = Jst;
            Jk.insert(std::upper_bound(Jk.begin(), Jk.end(), k), k);
            const long wrow_sub = wedge_index[p].at(Jk);
            const auto it = levels[p].index.find({b, wrow_sub});
            if (it == levels[p].index.end()) continue;
            d.add(it->second, static_cast<long>(col), Rational(sgn * isgn) * c);
          }
        }
    }
    C.maps.push_back(std::move(d));
  }

  SparseMatrix aug(1, C.dims[0]);
  for (std::size_t t = 0; t < levels[0].elems.size(); ++t)
    if (mi_is_zero(ctx.basis()[levels[0].elems[t].first]))
      aug.add(0, static_cast<long>(t), Rational(1));
  C.augmentation = std::move(aug);
  return C;
}

KoszulCertificate koszul_quotient_exactness(const LieAlgebra& A, const WeightStructure& W,
                                            long cutoff) {
  const ChainComplex C = truncated_koszul_complex(A, W, cutoff);
  KoszulCertificate cert;
  cert.dims = C.dims;

  // Recompute the per-element total weights for the monotonicity check.
  TruncationContext ctx(A, W, cutoff);
  const int N = A.dim();
  std::vector<std::vector<long>> tw(N + 1);
  for (int p = 0; p <= N; ++p) {
    const auto ws = wedge_basis(N, p);
    for (const auto& I : ws) {
      long wI = 0;
      for (int i : I) wI += W.weights[i];
      for (long b = 0; b < ctx.dim(); ++b) {
        const long t = ctx.weight(ctx.basis()[b]) + wI;
        if (t <= cutoff) tw[p].push_back(t);
      }
    }
  }
  // Reindex: the complex enumerates (wedge, monomial) pairs in the same
  // order as above.
  cert.weight_monotone = true;
  cert.weight_preserved = true;
  for (int p = 0; p + 1 <= N; ++p) {
    const SparseMatrix& d = C.maps[p];
    for (long row = 0; row < d.rows(); ++row)
      for (const auto& [col, v] : d.row(row)) {
        (void)v;
        if (tw[p][row] < tw[p + 1][col]) cert.weight_monotone = false;
        if (tw[p][row] != tw[p + 1][col]) cert.weight_preserved = false;
      }
  }

  cert.exact = augmented_exact(C);
  // Also record the homology table of the augmented complex.
  ChainComplex aug;
  aug.dims.push_back(1);
  for (long dmm : C.dims) aug.dims.push_back(dmm);
  aug.maps.push_back(*C.augmentation);
  for (const auto& m : C.maps) aug.maps.push_back(m);
  cert.homology = homology_dims(aug);
  return cert;
}

}  // namespace envlab
