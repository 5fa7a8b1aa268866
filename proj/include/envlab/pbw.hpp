#ifndef ENVLAB_PBW_HPP
#define ENVLAB_PBW_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "envlab/lie_algebra.hpp"
#include "envlab/multi_index.hpp"

namespace envlab {

enum class BasisMode { Plain, Divided };

/// Element of U(g) in normal form: a sparse rational combination of PBW
/// monomials e^alpha (Plain) or e_alpha = e^alpha/alpha! (Divided).
/// Zero coefficients are never stored.
class UElement {
public:
  explicit UElement(BasisMode mode = BasisMode::Plain) : mode_(mode) {}

  static UElement one(int nvars, BasisMode mode = BasisMode::Plain);
  static UElement monomial(MultiIndex a, Rational c = Rational(1),
                           BasisMode mode = BasisMode::Plain);

  BasisMode mode() const { return mode_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }

  Rational coeff(const MultiIndex& a) const;
  void add(const MultiIndex& a, const Rational& c);

  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  UElement& operator*=(const Rational& c);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  friend bool operator==(const UElement&, const UElement&) = default;

  std::string str() const;

private:
  BasisMode mode_;
  std::map<MultiIndex, Rational> terms_;
};

/// e_alpha = e^alpha / alpha!: conversion multiplies or divides each
/// coefficient by alpha!. The two maps are mutually inverse.
UElement to_divided(const UElement& plain);
UElement to_plain(const UElement& divided);

/// Normal-form arithmetic for U(g) with respect to the fixed ordered
/// basis. Out-of-order generator pairs e_j e_i (j > i) rewrite to
/// e_i e_j - sum_k c(i,j,k) e_k; the bilinear extension terminates and
/// lands on the PBW basis. Single-generator products are memoized per
/// algebra; the memo is guarded for concurrent use.
class PbwArithmetic {
public:
  explicit PbwArithmetic(LieAlgebra A) : A_(std::move(A)) {}

  const LieAlgebra& algebra() const { return A_; }

  /// Normal form of e^alpha * e_i.
  UElement mul_generator(const MultiIndex& alpha, int i);

  /// Normal form of x*y; both operands in plain mode.
  UElement product(const UElement& x, const UElement& y);

  /// Antipode: S(e^alpha) = (-1)^{|alpha|} * (reversed word, renormalized).
  UElement antipode(const MultiIndex& alpha);

  /// Total straightening steps performed so far (memo misses); the
  /// difference across a product bounds its rewrite work and certifies
  /// termination in tests.
  long rewrite_steps() const { return last_steps_; }

private:
  UElement mul_generator_unmemoized(const MultiIndex& alpha, int i);

  LieAlgebra A_;
  std::map<std::pair<MultiIndex, int>, UElement> memo_;
  std::mutex memo_mutex_;
  long last_steps_ = 0;
  long steps_ = 0;
};

/// Finite-dimensional truncation window: the quotient by
/// J_{W+1} = span{e^alpha : w(alpha) >= W+1}, an ideal because products
/// never lower weight. Quotient basis: all e^alpha with w(alpha) <= W in
/// graded-lex order.
class TruncationContext {
public:
  TruncationContext(const LieAlgebra& A, const WeightStructure& W, long cutoff);

  const LieAlgebra& algebra() const { return pbw_->algebra(); }
  const WeightStructure& weight_structure() const { return ws_; }
  const std::vector<int>& weights() const { return ws_.weights; }
  long cutoff() const { return cutoff_; }

  const std::vector<MultiIndex>& basis() const { return basis_; }
  long dim() const { return static_cast<long>(basis_.size()); }
  long index_of(const MultiIndex& a) const;  // -1 if truncated away
  long weight(const MultiIndex& a) const { return weight_of(a, ws_.weights); }
  long max_generator_weight() const;

  PbwArithmetic& pbw() const { return *pbw_; }

  /// Drops terms of weight > cutoff. Idempotent ring map onto the quotient.
  UElement reduce(const UElement& x) const;

  /// reduce(x*y) through the memoized product.
  UElement product_mod(const UElement& x, const UElement& y) const;

private:
  WeightStructure ws_;
  long cutoff_;
  std::vector<MultiIndex> basis_;
  std::map<MultiIndex, long> index_;
  std::shared_ptr<PbwArithmetic> pbw_;
};

/// Free-function spellings of the core operations.
inline UElement pbw_product(PbwArithmetic& pbw, const UElement& x, const UElement& y) {
  return pbw.product(x, y);
}
UElement reduce_mod(const UElement& x, const TruncationContext& ctx);
std::vector<MultiIndex> quotient_basis(const TruncationContext& ctx);

}  // namespace envlab

#endif
