#include "envlab/poly.hpp"

#include <algorithm>

namespace envlab {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add(mi_zero(nvars), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  p.add(mi_unit(nvars, i), Rational(1));
  return p;
}

Poly Poly::monomial(MultiIndex e, Rational c) {
  Poly p(static_cast<int>(e.size()));
  p.add(e, c);
  return p;
}

long Poly::total_degree() const {
  long d = 0;
  for (const auto& [e, c] : terms_) {
    (void)c;
    d = std::max(d, degree_of(e));
  }
  return d;
}

Rational Poly::coeff(const MultiIndex& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coeff(mi_zero(nvars_)); }

void Poly::add(const MultiIndex& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add(mi_add(ea, eb), ca * cb);
  return p;
}

Poly Poly::partial(int i) const {
  Poly p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    MultiIndex d = e;
    --d[i];
    p.add(d, c * Rational(e[i]));
  }
  return p;
}

Poly Poly::truncate_degree(long cap) const {
  Poly p(nvars_);
  for (const auto& [e, c] : terms_)
    if (degree_of(e) <= cap) p.add(e, c);
  return p;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "z" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      s += c.str();
    else if (c.is_one())
      s += mono;
    else
      s += c.str() + "*" + mono;
  }
  return s;
}

PolyForm PolyForm::from_poly(const Poly& p) {
  PolyForm w(p.nvars(), 0);
  for (const auto& [e, c] : p.terms()) w.add(e, {}, c);
  return w;
}

void PolyForm::add(const MultiIndex& e, const std::vector<int>& I, const Rational& c) {
  if (c.is_zero()) return;
  Key k{e, I};
  auto [it, fresh] = terms_.emplace(std::move(k), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (degree_ != o.degree_) throw Error("form sum: degree mismatch");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  if (degree_ != o.degree_) throw Error("form diff: degree mismatch");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

std::string PolyForm::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + Poly::monomial(k.first, c).str() + ")";
    for (int i : k.second) s += " dz" + std::to_string(i + 1);
  }
  return s;
}

PolyForm exterior_derivative(const PolyForm& w) {
  PolyForm out(w.nvars(), w.degree() + 1);
  for (const auto& [k, c] : w.terms()) {
    const auto& [e, I] = k;
    for (int i = 0; i < w.nvars(); ++i) {
      if (e[i] == 0) continue;
      // z^e dz_I -> e_i z^{e - u_i} dz_i ^ dz_I
      int below = 0;
      bool dup = false;
      for (int x : I) {
        if (x == i) dup = true;
        if (x < i) ++below;
      }
      if (dup) continue;
      MultiIndex d = e;
      --d[i];
      std::vector<int> J = I;
      J.insert(std::upper_bound(J.begin(), J.end(), i), i);
      const int sgn = (below % 2 == 0) ? 1 : -1;
      out.add(d, J, c * Rational(e[i]) * Rational(sgn));
    }
  }
  return out;
}

PolyForm exterior_derivative(const Poly& f) {
  return exterior_derivative(PolyForm::from_poly(f));
}

PolyForm radial_homotopy(const PolyForm& w) {
  if (w.degree() == 0) return PolyForm(w.nvars(), 0);
  PolyForm out(w.nvars(), w.degree() - 1);
  for (const auto& [k, c] : w.terms()) {
    const auto& [e, I] = k;
    const long denom = degree_of(e) + static_cast<long>(I.size());
    const Rational f = c / Rational(denom);
    for (std::size_t j = 0; j < I.size(); ++j) {
      MultiIndex up = e;
      ++up[I[j]];
      std::vector<int> J;
      for (std::size_t t = 0; t < I.size(); ++t)
        if (t != j) J.push_back(I[t]);
      const int sgn = (j % 2 == 0) ? 1 : -1;
      out.add(up, J, f * Rational(sgn));
    }
  }
  return out;
}

}  // namespace envlab
