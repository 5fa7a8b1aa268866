#include "envlab/ce_complex.hpp"

#include <algorithm>
#include <map>

namespace envlab {

ModuleAction ModuleAction::trivial(const LieAlgebra& A, Side side, int dim) {
  ModuleAction M{side, dim, {}};
  M.rho.assign(A.dim(), RatMatrix(dim, dim));
  return M;
}

bool action_valid(const LieAlgebra& A, const ModuleAction& M) {
  const int n = A.dim();
  if (static_cast<int>(M.rho.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (M.rho[i].rows() != M.dim || M.rho[i].cols() != M.dim) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatMatrix lhs(M.dim, M.dim);
      for (int k = 0; k < n; ++k) {
        if (A.c(i, j, k).is_zero()) continue;
        for (int p = 0; p < M.dim; ++p)
          for (int q = 0; q < M.dim; ++q) lhs.at(p, q) += A.c(i, j, k) * M.rho[k].at(p, q);
      }
      const RatMatrix comm = (M.side == ModuleAction::Side::Left)
                                 ? M.rho[i] * M.rho[j] - M.rho[j] * M.rho[i]
                                 : M.rho[j] * M.rho[i] - M.rho[i] * M.rho[j];
      if (!(lhs == comm)) return false;
    }
  return true;
}

ModuleAction opposite_action(const ModuleAction& M) {
  ModuleAction o = M;
  o.side = (M.side == ModuleAction::Side::Left) ? ModuleAction::Side::Right
                                                : ModuleAction::Side::Left;
  for (auto& m : o.rho) m = RatMatrix(M.dim, M.dim) - m;
  return o;
}

ModuleAction dual_action_module(const ModuleAction& M) {
  ModuleAction d = M;
  d.side = (M.side == ModuleAction::Side::Left) ? ModuleAction::Side::Right
                                                : ModuleAction::Side::Left;
  for (auto& m : d.rho) m = m.transposed();
  return d;
}

std::vector<std::vector<int>> wedge_basis(int N, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > N) return out;
  std::vector<int> cur(p);
  for (int i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int t = p - 1;
    while (t >= 0 && cur[t] == N - p + t) --t;
    if (t < 0) break;
    ++cur[t];
    for (int u = t + 1; u < p; ++u) cur[u] = cur[u - 1] + 1;
  }
  if (p == 0) out = {{}};
  return out;
}

int wedge_insert_sign(const std::vector<int>& I, int k) {
  int below = 0;
  for (int x : I) {
    if (x == k) return 0;
    if (x < k) ++below;
  }
  return (below % 2 == 0) ? 1 : -1;
}

namespace {

// Index maps for (module coordinate, wedge subset) bases.
struct Level {
  std::vector<std::vector<int>> wedges;
  std::map<std::vector<int>, long> wedge_index;
  long dim(int mdim) const { return static_cast<long>(wedges.size()) * mdim; }
  long index(int mdim, long wpos, int m) const { return wpos * mdim + m; }
};

Level make_level(int N, int p) {
  Level lv;
  lv.wedges = wedge_basis(N, p);
  for (std::size_t t = 0; t < lv.wedges.size(); ++t)
    lv.wedge_index[lv.wedges[t]] = static_cast<long>(t);
  return lv;
}

std::vector<int> erase_at(const std::vector<int>& I, int pos) {
  std::vector<int> J;
  J.reserve(I.size() - 1);
  for (std::size_t t = 0; t < I.size(); ++t)
    if (static_cast<int>(t) != pos) J.push_back(I[t]);
  return J;
}

std::vector<int> insert_sorted(const std::vector<int>& I, int k) {
  std::vector<int> J = I;
  J.insert(std::upper_bound(J.begin(), J.end(), k), k);
  return J;
}

}  // namespace

ChainComplex ce_chain_complex(const LieAlgebra& A, const ModuleAction& M) {
  if (M.side != ModuleAction::Side::Right)
    throw Error("ce_chain_complex: expects a right module");
  if (!action_valid(A, M)) throw Error("ce_chain_complex: action fails the bracket identity");
  const int N = A.dim();
  ChainComplex C;
  std::vector<Level> levels;
  for (int p = 0; p <= N; ++p) {
    levels.push_back(make_level(N, p));
    C.dims.push_back(levels.back().dim(M.dim));
  }
  for (int p = 0; p + 1 <= N; ++p) {
    const Level& from = levels[p + 1];
    const Level& to = levels[p];
    SparseMatrix d(to.dim(M.dim), from.dim(M.dim));
    for (std::size_t wpos = 0; wpos < from.wedges.size(); ++wpos) {
      const auto& J = from.wedges[wpos];
      for (int m = 0; m < M.dim; ++m) {
        const long col = from.index(M.dim, static_cast<long>(wpos), m);
        // action sum
        for (std::size_t t = 0; t < J.size(); ++t) {
          const int sgn = (t % 2 == 0) ? 1 : -1;  // (-1)^{i-1}, i = t+1
          const auto Jt = erase_at(J, static_cast<int>(t));
          const long wrow = to.wedge_index.at(Jt);
          const RatMatrix& R = M.rho[J[t]];
          for (int mm = 0; mm < M.dim; ++mm) {
            const Rational v = R.at(mm, m);
            if (!v.is_zero())
              d.add(to.index(M.dim, wrow, mm), col, Rational(sgn) * v);
          }
        }
        // bracket sum
        for (std::size_t s = 0; s < J.size(); ++s)
          for (std::size_t t = s + 1; t < J.size(); ++t) {
            const int sgn = ((s + t) % 2 == 0) ? 1 : -1;  // (-1)^{i+j} with i = s+1, j = t+1
            auto Jst = erase_at(erase_at(J, static_cast<int>(t)), static_cast<int>(s));
            for (int k = 0; k < N; ++k) {
              const Rational& c = A.c(J[s], J[t], k);
              if (c.is_zero()) continue;
              const int isgn = wedge_insert_sign(Jst, k);
              if (isgn == 0) continue;
              const long wrow = to.wedge_index.at(insert_sorted(Jst, k));
              d.add(to.index(M.dim, wrow, m), col, Rational(sgn * isgn) * c);
            }
          }
      }
    }
    C.maps.push_back(std::move(d));
  }
  return C;
}

std::vector<SparseMatrix> ce_cochain_maps(const LieAlgebra& A, const ModuleAction& M) {
  if (M.side != ModuleAction::Side::Left)
    throw Error("ce_cochain_maps: expects a left module");
  if (!action_valid(A, M)) throw Error("ce_cochain_maps: action fails the bracket identity");
  const int N = A.dim();
  std::vector<Level> levels;
  for (int p = 0; p <= N; ++p) levels.push_back(make_level(N, p));
  std::vector<SparseMatrix> ds;
  for (int p = 0; p + 1 <= N; ++p) {
    const Level& from = levels[p];    // C^p
    const Level& to = levels[p + 1];  // C^{p+1}
    SparseMatrix d(to.dim(M.dim), from.dim(M.dim));
    for (std::size_t wpos = 0; wpos < to.wedges.size(); ++wpos) {
      const auto& J = to.wedges[wpos];
      // (d f)(e_J) lands in module coordinates; expand both sums.
      for (std::size_t t = 0; t < J.size(); ++t) {
        const int sgn = (t % 2 == 0) ? 1 : -1;
        const auto Jt = erase_at(J, static_cast<int>(t));
        const long wcol = levels[p].wedge_index.at(Jt);
        const RatMatrix& L = M.rho[J[t]];
        for (int m = 0; m < M.dim; ++m)
          for (int mm = 0; mm < M.dim; ++mm) {
            const Rational v = L.at(mm, m);
            if (!v.is_zero())
              d.add(to.index(M.dim, static_cast<long>(wpos), mm),
                    from.index(M.dim, wcol, m), Rational(sgn) * v);
          }
      }
      for (std::size_t s = 0; s < J.size(); ++s)
        for (std::size_t t = s + 1; t < J.size(); ++t) {
          const int sgn = ((s + t) % 2 == 0) ? 1 : -1;
          auto Jst = erase_at(erase_at(J, static_cast<int>(t)), static_cast<int>(s));
          for (int k = 0; k < N; ++k) {
            const Rational& c = A.c(J[s], J[t], k);
            if (c.is_zero()) continue;
            const int isgn = wedge_insert_sign(Jst, k);
            if (isgn == 0) continue;
            const long wcol = levels[p].wedge_index.at(insert_sorted(Jst, k));
            for (int m = 0; m < M.dim; ++m)
              d.add(to.index(M.dim, static_cast<long>(wpos), m),
                    from.index(M.dim, wcol, m), Rational(sgn * isgn) * c);
          }
        }
    }
    ds.push_back(std::move(d));
  }
  return ds;
}

ChainComplex ce_cochain_complex(const LieAlgebra& A, const ModuleAction& M) {
  const int N = A.dim();
  ChainComplex C;
  C.cochain_orientation = true;
  for (int p = 0; p <= N; ++p)
    C.dims.push_back(static_cast<long>(wedge_basis(N, p).size()) * M.dim);
  // Stored transposed so the chain-orientation homology routine applies;
  // ranks are transpose-invariant.
  for (auto& d : ce_cochain_maps(A, M)) {
    SparseMatrix t(d.cols(), d.rows());
    for (long i = 0; i < d.rows(); ++i)
      for (const auto& [j, v] : d.row(i)) t.add(j, i, v);
    C.maps.push_back(std::move(t));
  }
  return C;
}

std::vector<long> lie_homology_betti(const LieAlgebra& A, const ModuleAction& right_M) {
  return homology_dims(ce_chain_complex(A, right_M));
}

std::vector<long> lie_cohomology_betti(const LieAlgebra& A, const ModuleAction& left_M) {
  return homology_dims(ce_cochain_complex(A, left_M));
}

DualityReport poincare_duality_check(const LieAlgebra& A, const ModuleAction& left_M) {
  if (left_M.side != ModuleAction::Side::Left)
    throw Error("poincare_duality_check: expects a left module");
  const int N = A.dim();
  DualityReport rep;
  rep.nilpotent_simplification = is_nilpotent(A);
  rep.cohomology = lie_cohomology_betti(A, left_M);
  // Twist by (/\^N g)^*: X acts on the top wedge by trace(ad X), so the
  // dual line contributes -trace(ad X). Vanishes for nilpotent g.
  ModuleAction twisted = left_M;
  if (!rep.nilpotent_simplification) {
    for (int i = 0; i < N; ++i) {
      Rational tr;
      const RatMatrix ad = A.ad(i);
      for (int p = 0; p < N; ++p) tr += ad.at(p, p);
      for (int m = 0; m < left_M.dim; ++m) twisted.rho[i].at(m, m) -= tr;
    }
  }
  rep.homology = lie_homology_betti(A, opposite_action(twisted));
  rep.holds = true;
  for (int p = 0; p <= N; ++p)
    if (rep.cohomology[p] != rep.homology[N - p]) rep.holds = false;
  return rep;
}

}  // namespace envlab
