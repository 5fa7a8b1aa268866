#include "envlab/contract.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace envlab {

EndoCheckResult verify_endomorphism(const LieAlgebra& A, const RatMatrix& h) {
  const int n = A.dim();
  if (h.rows() != n || h.cols() != n) throw Error("verify_endomorphism: shape mismatch");
  EndoCheckResult res{true, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // h[e_i,e_j]
      std::vector<Rational> lhs(n);
      for (int k = 0; k < n; ++k) {
        if (A.c(i, j, k).is_zero()) continue;
        for (int m = 0; m < n; ++m) lhs[m] += A.c(i, j, k) * h.at(m, k);
      }
      // [h e_i, h e_j]
      std::vector<Rational> hei(n), hej(n);
      for (int m = 0; m < n; ++m) hei[m] = h.at(m, i), hej[m] = h.at(m, j);
      const std::vector<Rational> rhs = A.bracket(hei, hej);
      if (lhs != rhs) {
        res.ok = false;
        res.violations.emplace_back(i, j);
      }
    }
  return res;
}

namespace {

std::string monomial_str(const std::vector<long>& e, const std::string& prefix = "d") {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += prefix + std::to_string(i + 1);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

// Hermite-style reduction of an integer lattice basis; returns the rank
// and leaves `rows` upper triangular w.r.t. the pivot columns.
struct Hnf {
  std::vector<std::vector<long>> rows;
  std::vector<long> pivot_cols;
};

Hnf integer_hnf(std::vector<std::vector<long>> rows, std::size_t cols) {
  Hnf h;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    while (true) {
      long best = -1;
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 &&
            (best < 0 || std::abs(rows[i][c]) < std::abs(rows[best][c])))
          best = static_cast<long>(i);
      if (best < 0) break;
      std::swap(rows[r], rows[static_cast<std::size_t>(best)]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        const long q = rows[i][c] / rows[r][c];
        for (std::size_t t = 0; t < cols; ++t) rows[i][t] -= q * rows[r][t];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < rows.size() && rows[r][c] != 0) {
      if (rows[r][c] < 0)
        for (std::size_t t = 0; t < cols; ++t) rows[r][t] = -rows[r][t];
      h.pivot_cols.push_back(static_cast<long>(c));
      ++r;
      if (r == rows.size()) break;
    }
  }
  rows.resize(r);
  h.rows = std::move(rows);
  return h;
}

}  // namespace

DiagonalSolveResult diagonal_endomorphism_solve(const LieAlgebra& A,
                                                std::vector<int> assumed_nonzero) {
  const int n = A.dim();
  DiagonalSolveResult res;
  res.triangular = true;
  std::erase_if(assumed_nonzero, [n](int i) { return i < 0 || i >= n; });
  res.assumed_nonzero = assumed_nonzero;

  // Distinct constraints d_k = d_i d_j.
  std::set<std::array<int, 3>> constraints;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!A.c(i, j, k).is_zero()) constraints.insert({k, i, j});

  res.expr.assign(n, {});
  std::vector<bool> free_flag(n, true);
  for (int m = 0; m < n; ++m) {
    res.expr[m].assign(n, 0);
    res.expr[m][m] = 1;
  }
  // Definition pass, ascending k: a constraint with k above both inputs
  // defines d_k as a monomial in earlier entries, and those are final by
  // the time they are used.
  for (const auto& [k, i, j] : constraints) {
    if (k <= i || k <= j) {
      res.triangular = false;
      continue;
    }
    if (!free_flag[k]) continue;
    for (int t = 0; t < n; ++t) res.expr[k][t] = res.expr[i][t] + res.expr[j][t];
    free_flag[k] = false;
  }
  for (int m = 0; m < n; ++m)
    if (free_flag[m]) res.free_params.push_back(m);

  // Residual pass against the final expressions: every remaining
  // constraint becomes a relation x^rel = 1 over the free parameters.
  for (const auto& [k, i, j] : constraints) {
    std::vector<long> rel(n, 0);
    bool zero = true;
    for (int t = 0; t < n; ++t) {
      rel[t] = res.expr[i][t] + res.expr[j][t] - res.expr[k][t];
      if (rel[t] != 0) zero = false;
    }
    if (!zero) res.residual.push_back(rel);
  }

  std::map<int, int> col_of;
  for (std::size_t t = 0; t < res.free_params.size(); ++t) col_of[res.free_params[t]] = static_cast<int>(t);
  std::vector<std::vector<long>> lattice;
  for (const auto& rel : res.residual) {
    std::vector<long> row(res.free_params.size(), 0);
    for (int t = 0; t < n; ++t) {
      if (rel[t] == 0) continue;
      row[col_of.at(t)] = rel[t];  // final expressions mention free parameters only
    }
    lattice.push_back(row);
  }
  const auto hnf = integer_hnf(lattice, res.free_params.size());
  res.family_dim = static_cast<long>(res.free_params.size()) - static_cast<long>(hnf.rows.size());

  // Unique identity solution: the relation lattice must be all of Z^g.
  // In triangular form that means full rank with every pivot equal to 1
  // (the lattice index is the pivot product). Each free parameter must
  // also be covered by the nonzero side condition so x^r = 1 is
  // legitimate arithmetic.
  bool full = hnf.rows.size() == res.free_params.size();
  for (std::size_t t = 0; full && t < hnf.rows.size(); ++t)
    if (hnf.pivot_cols[t] != static_cast<long>(t) || hnf.rows[t][t] != 1) full = false;
  bool covered = true;
  for (int p : res.free_params)
    if (std::find(assumed_nonzero.begin(), assumed_nonzero.end(), p) == assumed_nonzero.end())
      covered = false;
  res.rigid_identity = full && covered;
  return res;
}

std::string DiagonalSolveResult::describe() const {
  std::string s;
  for (std::size_t m = 0; m < expr.size(); ++m) {
    std::vector<long> unit(expr.size(), 0);
    unit[m] = 1;
    if (expr[m] == unit) continue;
    if (!s.empty()) s += "; ";
    s += "d" + std::to_string(m + 1) + " = " + monomial_str(expr[m]);
  }
  std::string fp;
  for (int p : free_params) fp += (fp.empty() ? "" : ", ") + ("d" + std::to_string(p + 1));
  s += (s.empty() ? "" : "; ") + ("free: " + (fp.empty() ? "(none)" : fp));
  for (const auto& rel : residual) {
    std::vector<long> pos(rel.size(), 0), neg(rel.size(), 0);
    for (std::size_t t = 0; t < rel.size(); ++t)
      (rel[t] > 0 ? pos[t] : neg[t]) = std::abs(rel[t]);
    s += "; relation: " + monomial_str(pos) + " = " + monomial_str(neg);
  }
  s += std::string("; rigid: ") + (rigid_identity ? "yes" : "no");
  return s;
}

namespace {

enum class BumpState { Zero, One, Unknown };

BumpState classify(const Rational& a, const Rational& b, const Rational& lo,
                   const Rational& hi) {
  const Rational at_lo = a * lo + b, at_hi = a * hi + b;
  const Rational mn = std::min(at_lo, at_hi), mx = std::max(at_lo, at_hi);
  if (mx <= Rational(0)) return BumpState::Zero;
  if (mn >= Rational(1)) return BumpState::One;
  return BumpState::Unknown;
}

std::string affine_str(const Rational& a, const Rational& b) {
  std::string s = "f(" + a.str() + "t";
  if (b.sign() > 0) s += "+" + b.str();
  if (b.sign() < 0) s += b.str();
  return s + ")";
}

}  // namespace

ContractionCertificate verify_contraction_family(const LieAlgebra& A,
                                                 const HomotopyFamily& family) {
  const int n = A.dim();
  ContractionCertificate cert{true, {}, {}};

  if (const auto* mono = std::get_if<MonomialFamily>(&family)) {
    if (static_cast<int>(mono->exponents.size()) != n)
      throw Error("verify_contraction_family: exponent count mismatch");
    for (int i = 0; i < n; ++i)
      if (mono->exponents[i] < 1) {
        cert.ok = false;
        cert.failures.push_back("h_0 = 0 fails: exponent of " + A.label(i) + " is not positive");
      }
    cert.checks.push_back("h_0 = 0 and h_1 = id for t^n family");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (A.c(i, j, k).is_zero()) continue;
          // c t^{n_i+n_j} vs c t^{n_k}, coefficient-wise in t.
          std::map<long, Rational> lhs, rhs;
          lhs[mono->exponents[i] + mono->exponents[j]] += A.c(i, j, k);
          rhs[mono->exponents[k]] += A.c(i, j, k);
          std::erase_if(lhs, [](const auto& e) { return e.second.is_zero(); });
          std::erase_if(rhs, [](const auto& e) { return e.second.is_zero(); });
          if (lhs != rhs) {
            cert.ok = false;
            cert.failures.push_back("non-homomorphism at [" + A.label(i) + "," + A.label(j) +
                                    "] -> " + A.label(k) + ": t^" +
                                    std::to_string(mono->exponents[i] + mono->exponents[j]) +
                                    " != t^" + std::to_string(mono->exponents[k]));
          } else {
            cert.checks.push_back("t^" + std::to_string(mono->exponents[i]) + " * t^" +
                                  std::to_string(mono->exponents[j]) + " = t^" +
                                  std::to_string(mono->exponents[k]) + " at [" + A.label(i) +
                                  "," + A.label(j) + "]");
          }
        }
    return cert;
  }

  const auto& bump = std::get<BumpFamily>(family);
  if (static_cast<int>(bump.affine.size()) != n)
    throw Error("verify_contraction_family: affine count mismatch");
  for (int i = 0; i < n; ++i) {
    const auto& [a, b] = bump.affine[i];
    if (!(b <= Rational(0))) {
      cert.ok = false;
      cert.failures.push_back("h_0 = 0 not certified for " + A.label(i) + ": f(" + b.str() +
                              ") undetermined");
    }
    if (!(a + b >= Rational(1))) {
      cert.ok = false;
      cert.failures.push_back("h_1 = id not certified for " + A.label(i));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (A.c(i, j, k).is_zero()) continue;
        const auto& [ai, bi] = bump.affine[i];
        const auto& [aj, bj] = bump.affine[j];
        const auto& [ak, bk] = bump.affine[k];
        // Breakpoints where any argument crosses 0 or 1.
        std::vector<Rational> cuts{Rational(0), Rational(1)};
        for (const auto& [a, b] : {bump.affine[i], bump.affine[j], bump.affine[k]}) {
          if (a.is_zero()) continue;
          for (const Rational& level : {Rational(0), Rational(1)}) {
            const Rational t = (level - b) / a;
            if (Rational(0) < t && t < Rational(1)) cuts.push_back(t);
          }
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
          const Rational lo = cuts[s], hi = cuts[s + 1];
          const BumpState si = classify(ai, bi, lo, hi);
          const BumpState sj = classify(aj, bj, lo, hi);
          const BumpState sk = classify(ak, bk, lo, hi);
          // Normal forms: either a certified 0, or a multiset of
          // undetermined bump factors (ones dropped).
          const bool lhs_zero = (si == BumpState::Zero || sj == BumpState::Zero);
          std::multiset<std::pair<std::string, std::string>> lhs_fac, rhs_fac;
          if (!lhs_zero) {
            if (si == BumpState::Unknown) lhs_fac.insert({ai.str(), bi.str()});
            if (sj == BumpState::Unknown) lhs_fac.insert({aj.str(), bj.str()});
          }
          const bool rhs_zero = (sk == BumpState::Zero);
          if (!rhs_zero && sk == BumpState::Unknown) rhs_fac.insert({ak.str(), bk.str()});
          const bool equal = (lhs_zero && rhs_zero) ||
                             (!lhs_zero && !rhs_zero && lhs_fac == rhs_fac);
          if (!equal) {
            cert.ok = false;
            cert.failures.push_back("bracket [" + A.label(i) + "," + A.label(j) + "] -> " +
                                    A.label(k) + " undetermined on [" + lo.str() + "," +
                                    hi.str() + "]");
          } else {
            cert.checks.push_back(affine_str(ai, bi) + "*" + affine_str(aj, bj) + " = " +
                                  affine_str(ak, bk) + " on [" + lo.str() + "," + hi.str() +
                                  "]");
          }
        }
      }
  return cert;
}

std::optional<RatMatrix> evaluate_family(const HomotopyFamily& family, int dim,
                                         const Rational& t) {
  RatMatrix h(dim, dim);
  if (const auto* mono = std::get_if<MonomialFamily>(&family)) {
    for (int i = 0; i < dim; ++i) h.at(i, i) = t.pow(mono->exponents[i]);
    return h;
  }
  const auto& bump = std::get<BumpFamily>(family);
  for (int i = 0; i < dim; ++i) {
    const auto& [a, b] = bump.affine[i];
    const Rational arg = a * t + b;
    if (arg <= Rational(0))
      h.at(i, i) = Rational(0);
    else if (arg >= Rational(1))
      h.at(i, i) = Rational(1);
    else
      return std::nullopt;
  }
  return h;
}

}  // namespace envlab
