#include "envlab/rational.hpp"

#include <ostream>

namespace envlab {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw Error("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::optional<Rational> Rational::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  const auto slash = s.find('/');
  const auto digits_ok = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  try {
    if (slash == std::string_view::npos) {
      if (!digits_ok(s)) return std::nullopt;
      return Rational(mpq_class(mpz_class(std::string(s))));
    }
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den)) return std::nullopt;
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) return std::nullopt;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw Error("Rational: 0 to a negative power");
    return Rational(0);
  }
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num = ipow(v_.get_num(), k), den = ipow(v_.get_den(), k);
  mpq_class q = (e > 0) ? mpq_class(num, den) : mpq_class(den, num);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  return v_.get_den() == 1 ? v_.get_num().get_str() : v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class ipow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace envlab
