#include "envlab/matrix.hpp"

#include <algorithm>
#include <map>

namespace envlab {

RatMatrix RatMatrix::identity(long n) {
  RatMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool RatMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product: shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (long j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix sum: shape mismatch");
  RatMatrix c(a.rows(), a.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix diff: shape mismatch");
  RatMatrix c(a.rows(), a.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<long>(v.size()) != cols_) throw Error("matrix apply: shape mismatch");
  std::vector<Rational> r(rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

namespace {

// Row-scales a rational matrix to integers (each row times the lcm of
// its denominators). Rank and row space are unchanged.
std::vector<std::vector<mpz_class>> scaled_integer_rows(const RatMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (long i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (long j = 0; j < m.cols(); ++j) {
      const mpz_class d = m.at(i, j).denominator();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    for (long j = 0; j < m.cols(); ++j) {
      const Rational& x = m.at(i, j);
      rows[i][j] = x.numerator() * (l / x.denominator());
    }
  }
  return rows;
}

// Bareiss elimination over integer rows; returns the list of pivot
// columns. Destroys `a`. If `det_out` is nonnull the matrix must be
// square and the signed final pivot is stored there.
std::vector<long> bareiss(std::vector<std::vector<mpz_class>>& a, long cols,
                          mpz_class* det_out = nullptr) {
  const long rows = static_cast<long>(a.size());
  std::vector<long> pivots;
  mpz_class prev = 1;
  int sign = 1;
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long p = -1;
    for (long i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      if (det_out) *det_out = 0;
      continue;
    }
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    const mpz_class piv = a[r][c];
    for (long i = r + 1; i < rows; ++i) {
      for (long j = c + 1; j < cols; ++j) {
        mpz_class t = a[i][j] * piv - a[i][c] * a[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  if (det_out && pivots.size() == static_cast<std::size_t>(cols)) *det_out = sign * prev;
  return pivots;
}

}  // namespace

long rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto a = scaled_integer_rows(m);
  return static_cast<long>(bareiss(a, m.cols()).size());
}

Rational det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("det: matrix not square");
  if (m.rows() == 0) return Rational(1);
  // Track the row scalings: det(original) = det(scaled) / prod(scales).
  mpz_class scale_prod = 1;
  for (long i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (long j = 0; j < m.cols(); ++j) {
      const mpz_class d = m.at(i, j).denominator();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    scale_prod *= l;
  }
  auto a = scaled_integer_rows(m);
  mpz_class d = 0;
  bareiss(a, m.cols(), &d);
  mpq_class q(d, scale_prod);
  q.canonicalize();
  return Rational(q);
}

RatMatrix row_echelon_basis(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return RatMatrix(0, m.cols());
  auto a = scaled_integer_rows(m);
  const auto pivots = bareiss(a, m.cols());
  const long r = static_cast<long>(pivots.size());
  // Back-substitute to the reduced form, then normalize leading 1s.
  RatMatrix b(r, m.cols());
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < m.cols(); ++j)
      b.at(i, j) = Rational(mpq_class(a[i][j]));
  for (long i = r - 1; i >= 0; --i) {
    const Rational lead = b.at(i, pivots[i]);
    for (long j = 0; j < m.cols(); ++j) b.at(i, j) /= lead;
    for (long k = 0; k < i; ++k) {
      const Rational f = b.at(k, pivots[i]);
      if (f.is_zero()) continue;
      for (long j = 0; j < m.cols(); ++j) b.at(k, j) -= f * b.at(i, j);
    }
  }
  return b;
}

bool in_row_space(const RatMatrix& rows, const std::vector<Rational>& v) {
  RatMatrix ext(rows.rows() + 1, rows.cols());
  for (long i = 0; i < rows.rows(); ++i)
    for (long j = 0; j < rows.cols(); ++j) ext.at(i, j) = rows.at(i, j);
  for (long j = 0; j < rows.cols(); ++j) ext.at(rows.rows(), j) = v[j];
  return rank(ext) == rank(rows);
}

long SparseMatrix::nnz() const {
  long n = 0;
  for (const auto& r : row_) n += static_cast<long>(r.size());
  return n;
}

void SparseMatrix::add(long i, long j, const Rational& v) {
  if (v.is_zero()) return;
  auto& r = row_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& e, long col) { return e.first < col; });
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (it->second.is_zero()) r.erase(it);
  } else {
    r.insert(it, {j, v});
  }
}

RatMatrix SparseMatrix::dense() const {
  RatMatrix m(rows_, cols_);
  for (long i = 0; i < rows_; ++i)
    for (const auto& [j, v] : row_[i]) m.at(i, j) = v;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const RatMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) s.add(i, j, m.at(i, j));
  return s;
}

SparseMatrix SparseMatrix::mul(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw Error("sparse product: shape mismatch");
  SparseMatrix c(rows_, other.cols_);
  for (long i = 0; i < rows_; ++i) {
    std::map<long, Rational> acc;
    for (const auto& [k, v] : row_[i])
      for (const auto& [j, w] : other.row_[k]) acc[j] += v * w;
    for (const auto& [j, v] : acc)
      if (!v.is_zero()) c.row_[i].emplace_back(j, v);
  }
  return c;
}

bool SparseMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (long i = 0; i < rows_; ++i) {
    if (row_[i].size() != 1) return false;
    if (row_[i][0].first != i || !row_[i][0].second.is_one()) return false;
  }
  return true;
}

namespace {

// Rational elimination with Markowitz-style pivoting; rows held as
// ordered maps so removals stay cheap under fill-in.
long sparse_rank_markowitz(const SparseMatrix& s) {
  const long rows = s.rows(), cols = s.cols();
  std::vector<std::map<long, Rational>> a(rows);
  std::vector<long> col_count(cols, 0);
  for (long i = 0; i < rows; ++i)
    for (const auto& [j, v] : s.row(i)) {
      a[i][j] = v;
      ++col_count[j];
    }
  std::vector<bool> row_done(rows, false);
  long rk = 0;
  while (true) {
    long best_row = -1, best_col = -1;
    long best_score = -1;
    for (long i = 0; i < rows; ++i) {
      if (row_done[i] || a[i].empty()) continue;
      for (const auto& [j, v] : a[i]) {
        (void)v;
        const long score =
            (static_cast<long>(a[i].size()) - 1) * (col_count[j] - 1);
        if (best_score < 0 || score < best_score ||
            (score == best_score && (i < best_row || (i == best_row && j < best_col)))) {
          best_score = score;
          best_row = i;
          best_col = j;
        }
        if (best_score == 0) break;
      }
      if (best_score == 0) break;
    }
    if (best_row < 0) break;
    ++rk;
    row_done[best_row] = true;
    const auto pivot_row = a[best_row];
    const Rational piv = pivot_row.at(best_col);
    for (const auto& [j, v] : pivot_row) {
      (void)v;
      --col_count[j];
    }
    for (long i = 0; i < rows; ++i) {
      if (row_done[i] || a[i].empty()) continue;
      auto it = a[i].find(best_col);
      if (it == a[i].end()) continue;
      const Rational f = it->second / piv;
      for (const auto& [j, v] : pivot_row) {
        auto jt = a[i].find(j);
        if (jt == a[i].end()) {
          Rational nv = -(f * v);
          if (!nv.is_zero()) {
            a[i].emplace(j, std::move(nv));
            ++col_count[j];
          }
        } else {
          jt->second -= f * v;
          if (jt->second.is_zero()) {
            a[i].erase(jt);
            --col_count[j];
          }
        }
      }
    }
  }
  return rk;
}

}  // namespace

long rank(const SparseMatrix& s) {
  if (s.rows() == 0 || s.cols() == 0) return 0;
  // Dense Bareiss is preferable while the whole matrix is small.
  if (s.rows() <= 160 && s.cols() <= 160) return rank(s.dense());
  return sparse_rank_markowitz(s);
}

}  // namespace envlab
