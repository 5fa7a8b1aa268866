#include "envlab/lie_algebra.hpp"

#include <algorithm>
#include <numeric>

namespace envlab {

LieAlgebra::LieAlgebra(int dim, const std::vector<BracketLine>& brackets,
                       std::string name, std::vector<std::string> labels)
    : dim_(dim), name_(std::move(name)), labels_(std::move(labels)),
      c_(static_cast<std::size_t>(dim) * dim * dim) {
  if (dim <= 0) throw Error("LieAlgebra: dimension must be positive");
  if (labels_.empty())
    for (int i = 1; i <= dim; ++i) labels_.push_back("e" + std::to_string(i));
  if (static_cast<int>(labels_.size()) != dim) throw Error("LieAlgebra: label count mismatch");
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j < 0 || b.i >= dim || b.j >= dim)
      throw Error("LieAlgebra: bracket index out of range");
    if (b.i >= b.j) throw Error("LieAlgebra: bracket entries must have i < j");
    for (const auto& t : b.terms) {
      if (t.k < 0 || t.k >= dim) throw Error("LieAlgebra: bracket target out of range");
      c_[(b.i * dim_ + b.j) * dim_ + t.k] += t.c;
      c_[(b.j * dim_ + b.i) * dim_ + t.k] -= t.c;
    }
  }
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& u,
                                          const std::vector<Rational>& v) const {
  std::vector<Rational> r(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      const Rational f = u[i] * v[j];
      for (int k = 0; k < dim_; ++k)
        if (!c(i, j, k).is_zero()) r[k] += f * c(i, j, k);
    }
  }
  return r;
}

RatMatrix LieAlgebra::ad(int i) const {
  RatMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m.at(k, j) = c(i, j, k);
  return m;
}

ValidationReport validate_lie_algebra(const LieAlgebra& A) {
  ValidationReport rep;
  const int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (A.c(i, j, k) != -A.c(j, i, k) || (i == j && !A.c(i, j, k).is_zero())) {
          rep.violations.push_back({StructureViolation::Kind::Antisymmetry, i, j, k,
                                    "c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ",*) not antisymmetric"});
        }
      }
  // Jacobi: [[ei,ej],el] + [[ej,el],ei] + [[el,ei],ej] = 0.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l) {
        bool bad = false;
        for (int m = 0; m < n && !bad; ++m) {
          Rational s;
          for (int k = 0; k < n; ++k) {
            s += A.c(i, j, k) * A.c(k, l, m);
            s += A.c(j, l, k) * A.c(k, i, m);
            s += A.c(l, i, k) * A.c(k, j, m);
          }
          if (!s.is_zero()) bad = true;
        }
        if (bad)
          rep.violations.push_back({StructureViolation::Kind::Jacobi, i, j, l,
                                    "Jacobi fails at (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + "," + std::to_string(l + 1) + ")"});
      }
  return rep;
}

WeightReport verify_weight_structure(const LieAlgebra& A, const WeightStructure& W) {
  WeightReport rep;
  const int n = A.dim();
  if (static_cast<int>(W.weights.size()) != n) {
    rep.basis_problems.push_back("weight count differs from dimension");
    return rep;
  }
  for (int i = 0; i < n; ++i)
    if (W.weights[i] <= 0) rep.basis_problems.push_back("weight " + std::to_string(i + 1) + " not positive");
  for (int i = 0; i + 1 < n; ++i)
    if (W.weights[i] > W.weights[i + 1])
      rep.basis_problems.push_back("weights not nondecreasing at position " + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (A.c(i, j, k).is_zero()) continue;
        const long lhs = W.weights[i] + W.weights[j];
        const long rhs = W.weights[k];
        const bool ok = (W.kind == WeightKind::Grading) ? (rhs == lhs) : (rhs >= lhs);
        if (!ok)
          rep.violations.push_back({i, j, k, lhs, rhs,
                                    "[" + A.label(i) + "," + A.label(j) + "] hits " + A.label(k)});
      }
  // For filtrations on nilpotent algebras the declared weights must not
  // claim more than the lower central series allows: e_i in g_{w_i}.
  if (W.kind == WeightKind::Filtration && rep.violations.empty() && is_nilpotent(A)) {
    const auto lcs = lower_central_series(A);
    for (int i = 0; i < n; ++i) {
      const int w = W.weights[i];
      if (w <= 1) continue;
      if (w - 1 >= static_cast<int>(lcs.bases.size())) {
        rep.basis_problems.push_back(A.label(i) + " assigned weight above the filtration length");
        continue;
      }
      std::vector<Rational> ei(n);
      ei[i] = Rational(1);
      if (!in_row_space(lcs.bases[w - 1], ei))
        rep.basis_problems.push_back(A.label(i) + " not in lower central term g_" + std::to_string(w));
    }
  }
  return rep;
}

namespace {

SeriesResult series_by(const LieAlgebra& A, bool lower_central) {
  const int n = A.dim();
  SeriesResult res;
  RatMatrix cur = RatMatrix::identity(n);
  res.bases.push_back(cur);
  res.dims.push_back(n);
  res.reaches_zero = (n == 0);
  while (true) {
    std::vector<std::vector<Rational>> gens;
    const RatMatrix& g = res.bases.back();
    if (lower_central) {
      for (int i = 0; i < n; ++i) {
        std::vector<Rational> ei(n);
        ei[i] = Rational(1);
        for (long r = 0; r < g.rows(); ++r) {
          std::vector<Rational> v(n);
          for (int j = 0; j < n; ++j) v[j] = g.at(r, j);
          gens.push_back(A.bracket(ei, v));
        }
      }
    } else {
      for (long r = 0; r < g.rows(); ++r)
        for (long s = 0; s < g.rows(); ++s) {
          std::vector<Rational> u(n), v(n);
          for (int j = 0; j < n; ++j) u[j] = g.at(r, j), v[j] = g.at(s, j);
          gens.push_back(A.bracket(u, v));
        }
    }
    RatMatrix m(static_cast<long>(gens.size()), n);
    for (std::size_t r = 0; r < gens.size(); ++r)
      for (int j = 0; j < n; ++j) m.at(static_cast<long>(r), j) = gens[r][j];
    RatMatrix next = row_echelon_basis(m);
    const int d = static_cast<int>(next.rows());
    res.dims.push_back(d);
    res.bases.push_back(next);
    if (d == 0) {
      res.reaches_zero = true;
      break;
    }
    if (d == res.dims[res.dims.size() - 2]) break;  // stabilized above zero
  }
  return res;
}

}  // namespace

SeriesResult lower_central_series(const LieAlgebra& A) { return series_by(A, true); }
SeriesResult derived_series(const LieAlgebra& A) { return series_by(A, false); }

bool is_nilpotent(const LieAlgebra& A) { return lower_central_series(A).reaches_zero; }
bool is_solvable(const LieAlgebra& A) { return derived_series(A).reaches_zero; }

RatMatrix killing_form(const LieAlgebra& A) {
  const int n = A.dim();
  std::vector<RatMatrix> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i) ads.push_back(A.ad(i));
  RatMatrix B(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational tr;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) tr += ads[i].at(p, q) * ads[j].at(q, p);
      B.at(i, j) = tr;
      B.at(j, i) = tr;
    }
  return B;
}

bool killing_nondegenerate(const LieAlgebra& A) { return !det(killing_form(A)).is_zero(); }

bool analytic_functionals_stably_flat(const LieAlgebra& A) { return is_solvable(A); }

std::optional<WeightStructure> lower_central_weights(const LieAlgebra& A) {
  const auto lcs = lower_central_series(A);
  if (!lcs.reaches_zero) return std::nullopt;
  const int n = A.dim();
  std::vector<int> w(n, 0);
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> ei(n);
    ei[i] = Rational(1);
    for (std::size_t t = 0; t < lcs.bases.size(); ++t) {
      if (lcs.bases[t].rows() == 0) break;
      if (in_row_space(lcs.bases[t], ei)) w[i] = static_cast<int>(t) + 1;
    }
  }
  // F-basis: each series term must be spanned by the basis vectors of
  // matching weight, and the weights must come sorted.
  for (int i = 0; i + 1 < n; ++i)
    if (w[i] > w[i + 1]) return std::nullopt;
  for (std::size_t t = 0; t < lcs.bases.size(); ++t) {
    const long have = lcs.bases[t].rows();
    long claim = 0;
    for (int i = 0; i < n; ++i)
      if (w[i] >= static_cast<int>(t) + 1) ++claim;
    if (claim != have) return std::nullopt;
  }
  return WeightStructure{WeightKind::Filtration, w};
}

GradingSearchResult find_positive_grading(const LieAlgebra& A) {
  const int n = A.dim();
  GradingSearchResult out;
  // Constraint rows w_i + w_j - w_k = 0 for every nonzero constant.
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (A.c(i, j, k).is_zero()) continue;
        std::vector<Rational> r(n);
        r[i] += Rational(1);
        r[j] += Rational(1);
        r[k] -= Rational(1);
        rows.push_back(std::move(r));
      }
  RatMatrix S(static_cast<long>(rows.size()), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int j = 0; j < n; ++j) S.at(static_cast<long>(r), j) = rows[r][j];
  const RatMatrix R = row_echelon_basis(S);
  // A coordinate forced to vanish on the solution space rules out
  // positive weights outright.
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> ei(n);
    ei[i] = Rational(1);
    if (in_row_space(R, ei)) {
      out.infeasible_proven = true;
      return out;
    }
  }
  // Parametrize: pivot columns from R, free columns scanned on a grid.
  std::vector<long> pivot_col(R.rows());
  std::vector<bool> is_pivot(n, false);
  for (long r = 0; r < R.rows(); ++r) {
    long c = 0;
    while (c < n && R.at(r, c).is_zero()) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  std::vector<long> free_cols;
  for (long c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const int f = static_cast<int>(free_cols.size());
  const int G = 4;
  std::vector<int> assign(f, 1);
  auto advance = [&]() {
    for (int t = f - 1; t >= 0; --t) {
      if (assign[t] < G) {
        ++assign[t];
        std::fill(assign.begin() + t + 1, assign.end(), 1);
        return true;
      }
    }
    return false;
  };
  while (true) {
    std::vector<Rational> w(n);
    for (int t = 0; t < f; ++t) w[free_cols[t]] = Rational(assign[t]);
    for (long r = 0; r < R.rows(); ++r) {
      Rational v;
      for (long c = pivot_col[r] + 1; c < n; ++c)
        if (!R.at(r, c).is_zero()) v -= R.at(r, c) * w[c];
      w[pivot_col[r]] = v;  // leading coefficient is 1 in echelon form
    }
    bool positive = true;
    for (const auto& x : w)
      if (x.sign() <= 0) positive = false;
    if (positive) {
      mpz_class l = 1;
      for (const auto& x : w) {
        mpz_class g, d = x.denominator();
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
      }
      std::vector<int> wi(n);
      for (int i = 0; i < n; ++i) {
        mpz_class v = w[i].numerator() * (l / w[i].denominator());
        wi[i] = static_cast<int>(v.get_si());
      }
      out.weights = wi;
      return out;
    }
    if (f == 0 || !advance()) break;
  }
  return out;
}

}  // namespace envlab
