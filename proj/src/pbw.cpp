#include "envlab/pbw.hpp"

#include <algorithm>

namespace envlab {

UElement UElement::one(int nvars, BasisMode mode) {
  return monomial(mi_zero(nvars), Rational(1), mode);
}

UElement UElement::monomial(MultiIndex a, Rational c, BasisMode mode) {
  UElement u(mode);
  u.add(a, c);
  return u;
}

Rational UElement::coeff(const MultiIndex& a) const {
  const auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UElement::add(const MultiIndex& a, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(a, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UElement& UElement::operator+=(const UElement& o) {
  if (mode_ != o.mode_) throw Error("UElement sum: basis mode mismatch");
  for (const auto& [a, c] : o.terms_) add(a, c);
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  if (mode_ != o.mode_) throw Error("UElement diff: basis mode mismatch");
  for (const auto& [a, c] : o.terms_) add(a, -c);
  return *this;
}

UElement& UElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

std::string UElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [a, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + mi_str(a);
  }
  return s;
}

UElement to_divided(const UElement& plain) {
  if (plain.mode() != BasisMode::Plain) throw Error("to_divided: already divided");
  UElement d(BasisMode::Divided);
  for (const auto& [a, c] : plain.terms())
    d.add(a, c * Rational(mpq_class(mi_factorial(a))));
  return d;
}

UElement to_plain(const UElement& divided) {
  if (divided.mode() != BasisMode::Divided) throw Error("to_plain: already plain");
  UElement p(BasisMode::Plain);
  for (const auto& [a, c] : divided.terms())
    p.add(a, c / Rational(mpq_class(mi_factorial(a))));
  return p;
}

UElement PbwArithmetic::mul_generator(const MultiIndex& alpha, int i) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    const auto it = memo_.find({alpha, i});
    if (it != memo_.end()) return it->second;
    ++steps_;
  }
  UElement r = mul_generator_unmemoized(alpha, i);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  last_steps_ = steps_;
  memo_.emplace(std::make_pair(alpha, i), r);
  return r;
}

// Children recurse through the memoized entry point; each (alpha, i)
// pair is straightened once per algebra.
UElement PbwArithmetic::mul_generator_unmemoized(const MultiIndex& alpha, int i) {
  const int n = A_.dim();
  // Largest generator index occurring past i.
  int j = -1;
  for (int t = n - 1; t > i; --t)
    if (alpha[t] > 0) {
      j = t;
      break;
    }
  if (j < 0) {
    MultiIndex out = alpha;
    ++out[i];
    return UElement::monomial(std::move(out));
  }
  // e^alpha e_i = (e^alpha' e_i) e_j + e^alpha' [e_j, e_i],
  // with alpha' = alpha minus one copy of e_j.
  MultiIndex ap = alpha;
  --ap[j];
  const UElement left = mul_generator(ap, i);
  UElement result(BasisMode::Plain);
  for (const auto& [g, c] : left.terms()) {
    UElement t = mul_generator(g, j);
    t *= c;
    result += t;
  }
  for (int k = 0; k < n; ++k) {
    const Rational& cjk = A_.c(j, i, k);
    if (cjk.is_zero()) continue;
    UElement t = mul_generator(ap, k);
    t *= cjk;
    result += t;
  }
  return result;
}

UElement PbwArithmetic::product(const UElement& x, const UElement& y) {
  if (x.mode() != BasisMode::Plain || y.mode() != BasisMode::Plain)
    throw Error("pbw product requires plain basis mode");
  const int n = A_.dim();
  UElement out(BasisMode::Plain);
  for (const auto& [b, cy] : y.terms()) {
    // Multiply x by the generators of e^b, left to right.
    UElement acc = x;
    for (int i = 0; i < n; ++i)
      for (int rep = 0; rep < b[i]; ++rep) {
        UElement next(BasisMode::Plain);
        for (const auto& [a, ca] : acc.terms()) {
          UElement t = mul_generator(a, i);
          t *= ca;
          next += t;
        }
        acc = std::move(next);
      }
    acc *= cy;
    out += acc;
  }
  return out;
}

UElement PbwArithmetic::antipode(const MultiIndex& alpha) {
  const int n = A_.dim();
  UElement acc = UElement::one(n);
  for (int i = n - 1; i >= 0; --i)
    for (int rep = 0; rep < alpha[i]; ++rep) {
      UElement next(BasisMode::Plain);
      for (const auto& [a, ca] : acc.terms()) {
        UElement t = mul_generator(a, i);
        t *= ca;
        next += t;
      }
      acc = std::move(next);
    }
  if (degree_of(alpha) % 2 != 0) acc *= Rational(-1);
  return acc;
}

TruncationContext::TruncationContext(const LieAlgebra& A, const WeightStructure& W,
                                     long cutoff)
    : ws_(W), cutoff_(cutoff), pbw_(std::make_shared<PbwArithmetic>(A)) {
  if (cutoff < 0) throw Error("TruncationContext: cutoff must be >= 0");
  const auto rep = verify_weight_structure(A, W);
  if (!rep.valid()) throw Error("TruncationContext: weight structure invalid for this algebra");
  basis_ = enumerate_weighted(ws_.weights, cutoff_);
  for (std::size_t t = 0; t < basis_.size(); ++t) index_[basis_[t]] = static_cast<long>(t);
}

long TruncationContext::index_of(const MultiIndex& a) const {
  const auto it = index_.find(a);
  return it == index_.end() ? -1 : it->second;
}

long TruncationContext::max_generator_weight() const {
  return *std::max_element(ws_.weights.begin(), ws_.weights.end());
}

UElement TruncationContext::reduce(const UElement& x) const {
  UElement r(x.mode());
  for (const auto& [a, c] : x.terms())
    if (weight(a) <= cutoff_) r.add(a, c);
  return r;
}

UElement TruncationContext::product_mod(const UElement& x, const UElement& y) const {
  return reduce(pbw_->product(x, y));
}

UElement reduce_mod(const UElement& x, const TruncationContext& ctx) { return ctx.reduce(x); }

std::vector<MultiIndex> quotient_basis(const TruncationContext& ctx) { return ctx.basis(); }

}  // namespace envlab
