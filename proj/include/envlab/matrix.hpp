#ifndef ENVLAB_MATRIX_HPP
#define ENVLAB_MATRIX_HPP

#include <utility>
#include <vector>

#include "envlab/rational.hpp"

namespace envlab {

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  Rational& at(long i, long j) { return a_[i * cols_ + j]; }
  const Rational& at(long i, long j) const { return a_[i * cols_ + j]; }

  RatMatrix transposed() const;
  bool is_zero() const;
  bool is_identity() const;

  friend RatMatrix operator*(const RatMatrix&, const RatMatrix&);
  friend RatMatrix operator+(const RatMatrix&, const RatMatrix&);
  friend RatMatrix operator-(const RatMatrix&, const RatMatrix&);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
  long rows_, cols_;
  std::vector<Rational> a_;
};

/// Exact rank by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix.
long rank(const RatMatrix&);

/// Exact determinant (square matrices), Bareiss with row-scaling bookkeeping.
Rational det(const RatMatrix&);

/// Reduced row echelon form of the row space: zero rows dropped, each
/// leading entry 1, deterministic for a fixed input. Elimination is
/// fraction-free; the normalization divides each surviving row once.
RatMatrix row_echelon_basis(const RatMatrix&);

/// True iff v lies in the row space of the echelon basis `rows`.
bool in_row_space(const RatMatrix& rows, const std::vector<Rational>& v);

/// Sparse matrix for the large complexes: per-row sorted (col, coeff).
class SparseMatrix {
public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(long rows, long cols) : rows_(rows), cols_(cols), row_(rows) {}

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  long nnz() const;

  void add(long i, long j, const Rational& v);
  const std::vector<std::pair<long, Rational>>& row(long i) const { return row_[i]; }

  RatMatrix dense() const;
  static SparseMatrix from_dense(const RatMatrix&);

  /// this * other, both sparse.
  SparseMatrix mul(const SparseMatrix& other) const;
  bool is_identity() const;

private:
  long rows_, cols_;
  std::vector<std::vector<std::pair<long, Rational>>> row_;
};

/// Exact rank of a sparse matrix. Small inputs are routed through the
/// dense Bareiss elimination; larger ones use rational elimination with
/// Markowitz-style pivot selection to limit fill-in.
long rank(const SparseMatrix&);

}  // namespace envlab

#endif
