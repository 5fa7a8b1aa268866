#include "envlab/hochschild.hpp"

#include <map>

namespace envlab {

Bimodule Bimodule::regular(const TruncatedHopf& H) {
  Bimodule M{static_cast<int>(H.dim), {}, {}};
  const long d = H.dim;
  M.left.assign(d, RatMatrix(d, d));
  M.right.assign(d, RatMatrix(d, d));
  for (long a = 0; a < d; ++a)
    for (long m = 0; m < d; ++m) {
      for (const auto& [c, v] : H.mul[a][m]) M.left[a].at(c, m) = v;
      for (const auto& [c, v] : H.mul[m][a]) M.right[a].at(c, m) = v;
    }
  return M;
}

Bimodule Bimodule::trivial(const TruncatedHopf& H, int dim) {
  Bimodule M{dim, {}, {}};
  M.left.assign(H.dim, RatMatrix(dim, dim));
  M.right.assign(H.dim, RatMatrix(dim, dim));
  for (long a = 0; a < H.dim; ++a)
    for (int m = 0; m < dim; ++m) {
      M.left[a].at(m, m) = H.counit[a];
      M.right[a].at(m, m) = H.counit[a];
    }
  return M;
}

bool bimodule_valid(const TruncatedHopf& H, const Bimodule& M) {
  const long d = H.dim;
  const RatMatrix id = RatMatrix::identity(M.dim);
  if (!(M.left[H.unit_index] == id) || !(M.right[H.unit_index] == id)) return false;
  for (long a = 0; a < d; ++a)
    for (long b = 0; b < d; ++b) {
      RatMatrix lab(M.dim, M.dim), rab(M.dim, M.dim);
      for (const auto& [c, v] : H.mul[a][b])
        for (int p = 0; p < M.dim; ++p)
          for (int q = 0; q < M.dim; ++q) {
            lab.at(p, q) += v * M.left[c].at(p, q);
            rab.at(p, q) += v * M.right[c].at(p, q);
          }
      if (!(lab == M.left[a] * M.left[b])) return false;
      if (!(rab == M.right[b] * M.right[a])) return false;
      if (!(M.left[a] * M.right[b] == M.right[b] * M.left[a])) return false;
    }
  return true;
}

std::vector<RatMatrix> e_twisted_left_action(const TruncatedHopf& H, const Bimodule& M) {
  const long d = H.dim;
  std::vector<RatMatrix> rho(d, RatMatrix(M.dim, M.dim));
  for (long a = 0; a < d; ++a) {
    for (const auto& [pq, v] : H.comul[a])
      for (const auto& [s, cs] : H.antipode[pq.second]) {
        const RatMatrix t = M.left[pq.first] * M.right[s];
        for (int p = 0; p < M.dim; ++p)
          for (int q = 0; q < M.dim; ++q) rho[a].at(p, q) += v * cs * t.at(p, q);
      }
  }
  return rho;
}

namespace {

// Tuples (b_1..b_k) of basis indices with total weight within the
// truncation window. The bar complexes live over these filtered tensor
// powers: the quotient object is a Hopf algebra only in the filtered
// sense, and the Hochschild/Ext comparison descends exactly there.
struct TupleLevel {
  std::vector<std::vector<long>> tuples;
  std::map<std::vector<long>, long> index;
};

void enumerate_tuples(const TruncatedHopf& H, int len, long budget, std::vector<long>& cur,
                      TupleLevel& out) {
  if (len == 0) {
    out.index[cur] = static_cast<long>(out.tuples.size());
    out.tuples.push_back(cur);
    return;
  }
  for (long b = 0; b < H.dim; ++b) {
    const long w = H.weight_of_index(b);
    if (w > budget) continue;
    cur.push_back(b);
    enumerate_tuples(H, len - 1, budget - w, cur, out);
    cur.pop_back();
  }
}

TupleLevel tuple_level(const TruncatedHopf& H, int len) {
  TupleLevel lv;
  std::vector<long> cur;
  enumerate_tuples(H, len, H.ctx.cutoff(), cur, lv);
  return lv;
}

// Bar-type differential on Hom(T_k, M) with T_k the truncated tensor
// power. The head applies `head[a_1]`; inner terms contract adjacent
// multiplications (targets that leave the weight window die in the
// quotient); the tail applies `tail[a_{k+1}]` (Hochschild) or scales by
// eps(a_{k+1}) (Ext over the trivially-augmented bar resolution).
SparseMatrix bar_differential(const TruncatedHopf& H, int mdim, const TupleLevel& from,
                              const TupleLevel& to, const std::vector<RatMatrix>& head,
                              const std::vector<RatMatrix>* tail, int k, long size_cap) {
  const long rows = static_cast<long>(to.tuples.size()) * mdim;
  const long cols = static_cast<long>(from.tuples.size()) * mdim;
  if (rows + cols > size_cap)
    throw SizeCapError("bar differential exceeds the size cap at degree " + std::to_string(k));

  const long W = H.ctx.cutoff();
  SparseMatrix D(rows, cols);
  for (long ti = 0; ti < static_cast<long>(to.tuples.size()); ++ti) {
    const auto& T = to.tuples[ti];
    // head: a_1 . f(a_2..a_{k+1})
    {
      const std::vector<long> rest(T.begin() + 1, T.end());
      const long col_tuple = from.index.at(rest);
      const RatMatrix& Hd = head[T[0]];
      for (int m = 0; m < mdim; ++m)
        for (int mm = 0; mm < mdim; ++mm) {
          const Rational& v = Hd.at(mm, m);
          if (!v.is_zero()) D.add(ti * mdim + mm, col_tuple * mdim + m, v);
        }
    }
    // inner: (-1)^i f(.., a_i a_{i+1}, ..)
    long base_weight = 0;
    for (long b : T) base_weight += H.weight_of_index(b);
    for (int i = 1; i <= k; ++i) {
      const int sgn = (i % 2 == 0) ? 1 : -1;
      const long wpair = H.weight_of_index(T[i - 1]) + H.weight_of_index(T[i]);
      for (const auto& [c, v] : H.mul[T[i - 1]][T[i]]) {
        if (base_weight - wpair + H.weight_of_index(c) > W) continue;
        std::vector<long> merged;
        merged.reserve(k);
        for (int t = 0; t < i - 1; ++t) merged.push_back(T[t]);
        merged.push_back(c);
        for (int t = i + 1; t <= k; ++t) merged.push_back(T[t]);
        const long col_tuple = from.index.at(merged);
        for (int m = 0; m < mdim; ++m)
          D.add(ti * mdim + m, col_tuple * mdim + m, Rational(sgn) * v);
      }
    }
    // tail
    {
      const int sgn = ((k + 1) % 2 == 0) ? 1 : -1;
      const std::vector<long> rest(T.begin(), T.end() - 1);
      const long col_tuple = from.index.at(rest);
      if (tail) {
        const RatMatrix& Tl = (*tail)[T[k]];
        for (int m = 0; m < mdim; ++m)
          for (int mm = 0; mm < mdim; ++mm) {
            const Rational& v = Tl.at(mm, m);
            if (!v.is_zero())
              D.add(ti * mdim + mm, col_tuple * mdim + m, Rational(sgn) * v);
          }
      } else {
        const Rational eps = H.counit[T[k]];
        if (!eps.is_zero())
          for (int m = 0; m < mdim; ++m)
            D.add(ti * mdim + m, col_tuple * mdim + m, Rational(sgn) * eps);
      }
    }
  }
  return D;
}

std::vector<long> cochain_betti(const TruncatedHopf& H, int mdim,
                                const std::vector<RatMatrix>& head,
                                const std::vector<RatMatrix>* tail, int k_max,
                                long size_cap) {
  std::vector<TupleLevel> levels;
  for (int k = 0; k <= k_max + 1; ++k) levels.push_back(tuple_level(H, k));
  std::vector<long> rk(k_max + 1), dims(k_max + 1);
  SparseMatrix prev;
  for (int k = 0; k <= k_max; ++k) {
    dims[k] = static_cast<long>(levels[k].tuples.size()) * mdim;
    SparseMatrix d = bar_differential(H, mdim, levels[k], levels[k + 1], head, tail, k, size_cap);
    if (k > 0 && d.mul(prev).nnz() != 0)
      throw Error("bar complex: differentials do not compose to zero");
    rk[k] = rank(d);
    prev = std::move(d);
  }
  std::vector<long> b(k_max + 1);
  for (int k = 0; k <= k_max; ++k)
    b[k] = dims[k] - rk[k] - (k > 0 ? rk[k - 1] : 0);
  return b;
}

}  // namespace

HochschildExtResult hochschild_ext_compare(const TruncatedHopf& H, const Bimodule& M,
                                           int k_max, long size_cap) {
  if (!bimodule_valid(H, M)) throw Error("hochschild_ext_compare: not a bimodule");
  HochschildExtResult res;
  res.hochschild = cochain_betti(H, M.dim, M.left, &M.right, k_max, size_cap);
  const auto rhoE = e_twisted_left_action(H, M);
  res.ext = cochain_betti(H, M.dim, rhoE, nullptr, k_max, size_cap);
  res.agree = (res.hochschild == res.ext);
  return res;
}

}  // namespace envlab
