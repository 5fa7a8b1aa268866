#ifndef ENVLAB_POLY_HPP
#define ENVLAB_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "envlab/multi_index.hpp"
#include "envlab/rational.hpp"

namespace envlab {

/// Sparse multivariate polynomial over exact rationals.
class Poly {
public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int i);               // z_{i+1}
  static Poly monomial(MultiIndex e, Rational c = Rational(1));

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  long total_degree() const;
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  Rational coeff(const MultiIndex& e) const;
  Rational constant_term() const;

  void add(const MultiIndex& e, const Rational& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly partial(int i) const;                    // d/dz_{i+1}
  Poly truncate_degree(long cap) const;         // drop |e| > cap
  std::string str() const;

private:
  int nvars_;
  std::map<MultiIndex, Rational> terms_;
};

/// Polynomial differential form: sparse combination of z^e dz_I with
/// strictly increasing index sets I.
class PolyForm {
public:
  using Key = std::pair<MultiIndex, std::vector<int>>;

  PolyForm(int nvars, int degree) : nvars_(nvars), degree_(degree) {}
  static PolyForm from_poly(const Poly& p);  // degree 0

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }

  void add(const MultiIndex& e, const std::vector<int>& I, const Rational& c);
  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend bool operator==(const PolyForm&, const PolyForm&) = default;

  std::string str() const;

private:
  int nvars_;
  int degree_;
  std::map<Key, Rational> terms_;
};

/// Exterior derivative, exact (no degree cap).
PolyForm exterior_derivative(const PolyForm& w);
PolyForm exterior_derivative(const Poly& f);

/// Radial (Euler) contracting homotopy on monomial forms:
///   h(z^a dz_{i_1}^...^dz_{i_p}) =
///     (|a|+p)^{-1} sum_j (-1)^{j-1} z_{i_j} z^a dz_{...^j...},  p >= 1;
/// h = 0 on 0-forms.
PolyForm radial_homotopy(const PolyForm& w);

}  // namespace envlab

#endif
