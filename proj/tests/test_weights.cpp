#include <doctest.h>

#include <random>

#include "envlab/corpus.hpp"
#include "envlab/weights.hpp"

using namespace envlab;
namespace cp = envlab::corpus;

TEST_CASE("weight sequence validation") {
  // Factorial family at cutoff 8, trivial weights.
  const auto fact = WeightSequence::fact({1, 1});
  const auto frep = validate_weight_sequence(fact, 8);
  CHECK(frep.valid());
  CHECK(frep.triples_checked > 0);

  // Ones validate as a weight sequence (1 <= 1 everywhere).
  CHECK(validate_weight_sequence(WeightSequence::ones({1, 1}), 8).valid());

  // Custom violation: M_(2) > M_(1)^2.
  WeightSequence bad{WeightSequence::Family::Custom, {1}, {}};
  bad.table[{1}] = Rational(1);
  bad.table[{2}] = Rational(2);
  bad.table[{3}] = Rational(1);
  bad.table[{4}] = Rational(1);
  const auto brep = validate_weight_sequence(bad, 4);
  CHECK_FALSE(brep.valid());
  bool found = false;
  for (const auto& v : brep.violations)
    if (v.gamma == MultiIndex{2} && v.alpha == MultiIndex{1} && v.beta == MultiIndex{1})
      found = true;
  CHECK(found);
}

TEST_CASE("validation is monotone in the cutoff") {
  const auto fact = WeightSequence::fact({1, 1, 1});
  REQUIRE(validate_weight_sequence(fact, 8).valid());
  for (long c : {0L, 2L, 5L}) CHECK(validate_weight_sequence(fact, c).valid());
}

TEST_CASE("factorial family is tied to the trivial filtration") {
  // With genuinely weighted variables the degree-based factorial family
  // stops being an F-weight sequence: a heavy single variable of small
  // degree beats a long light product; the family belongs to the
  // trivial filtration.
  const auto fact = WeightSequence::fact({1, 1, 2});
  const auto rep = validate_weight_sequence(fact, 8);
  CHECK_FALSE(rep.valid());
}

TEST_CASE("entire diagnostics") {
  // Ones at r = 1, one variable: shell sums are constant 1.
  const auto ones = WeightSequence::ones({1});
  const auto d1 = entire_diagnostics(ones, Rational(1), 10);
  CHECK(d1.divergence_evidence);
  CHECK(ones.known_entire() == std::optional<bool>{false});

  // Factorial at r = 1: shells collapse superexponentially.
  const auto fact = WeightSequence::fact({1});
  const auto d2 = entire_diagnostics(fact, Rational(1), 10);
  CHECK_FALSE(d2.divergence_evidence);
  CHECK(fact.known_entire() == std::optional<bool>{true});
  // shell at weight n is n^{-n}; frozen: 10th shell
  CHECK(d2.rows[10].shell_sum == Rational(mpq_class(1, ipow(mpz_class(10), 10))));
  // Shell ratios: for the factorial family at r = 1 every ratio
  // between consecutive shells is below 1 from weight 2 on.
  for (std::size_t t = 2; t < d2.rows.size(); ++t) {
    REQUIRE(d2.rows[t].ratio.has_value());
    CHECK(*d2.rows[t].ratio < Rational(1));
  }
  // r = 0: the sum is exactly M_0 = 1.
  const auto d3 = entire_diagnostics(fact, Rational(0), 6);
  CHECK(d3.rows.back().partial_sum.is_one());
  CHECK_FALSE(d3.divergence_evidence);
}

TEST_CASE("seminorm evaluation") {
  const auto ones = WeightSequence::ones({1, 1, 2});
  CHECK(seminorm_eval(UElement::one(3), ones, Rational(2)).is_one());

  // h3 ones family: ||e1 + e3||_2 = 2 + 4 = 6.
  UElement x(BasisMode::Plain);
  x.add({1, 0, 0}, Rational(1));
  x.add({0, 0, 1}, Rational(1));
  CHECK(seminorm_eval(x, ones, Rational(2)) == Rational(6));

  // Ordered product sample: ||e1 e2||_r <= ||e1||_r ||e2||_r.
  UElement e1 = UElement::monomial({1, 0, 0});
  UElement e2 = UElement::monomial({0, 1, 0});
  UElement e12 = UElement::monomial({1, 1, 0});
  for (const Rational& r : {Rational(1, 2), Rational(1), Rational(3)}) {
    CHECK(seminorm_eval(e12, ones, r) <= seminorm_eval(e1, ones, r) * seminorm_eval(e2, ones, r));
  }

  // Absolute homogeneity in the coefficients and monotonicity in r.
  UElement sx = x;
  sx *= Rational(-7, 3);
  CHECK(seminorm_eval(sx, ones, Rational(2)) == Rational(7, 3) * Rational(6));
  CHECK(seminorm_eval(x, ones, Rational(1)) <= seminorm_eval(x, ones, Rational(2)));
}

TEST_CASE("factorial comparison with the explicit witness") {
  // N = 1: alpha = (3): 6 <= 27 <= 27 * 6.
  const auto r1 = factorial_comparison_check(1, 4);
  CHECK(r1.ok);
  // alpha = 0 passes with the 0^0 = 1 convention (checked inside).
  const auto r2 = factorial_comparison_check(2, 10);
  CHECK(r2.ok);
  CHECK(r2.witness_constant == Rational(6));
  CHECK(r2.checked == 66);  // C(12, 2) lattice points
}

TEST_CASE("homogeneous norm") {
  const std::vector<int> w{1, 1, 2};
  // g = exp(3 e1 + 4 e3): max(3, 4^{1/2}) = 3 since 3^2 = 9 > 4.
  const std::vector<Rational> t{Rational(3), Rational(0), Rational(4)};
  const auto n = HomogeneousNorm::of(t, w);
  CHECK(n.exact() == std::optional<Rational>{Rational(3)});

  CHECK(HomogeneousNorm::of({Rational(0), Rational(0), Rational(0)}, w).is_zero());

  // Dilation: |delta_2 g| = 2 |g| = 6.
  const auto d = HomogeneousNorm::of(dilate(t, Rational(2), w), w);
  CHECK(d.exact() == std::optional<Rational>{Rational(6)});
  CHECK(d == n.scaled(Rational(2)));

  // An irrational value still compares exactly: |(0,0,2)| = sqrt(2).
  const auto s = HomogeneousNorm::of({Rational(0), Rational(0), Rational(2)}, w);
  CHECK_FALSE(s.exact().has_value());
  CHECK(s < HomogeneousNorm(Rational(3, 2), 1));
  CHECK(HomogeneousNorm(Rational(7, 5), 1) < s);
}

TEST_CASE("dilation identity on random samples") {
  std::mt19937_64 rng(12345);
  auto small = [&rng]() {
    return Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 9));
  };
  for (const auto& w : {std::vector<int>{1, 1, 2}, std::vector<int>{1, 2, 3, 5}}) {
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<Rational> t(w.size());
      for (auto& x : t) x = small();
      Rational z = small();
      if (z.is_zero()) z = Rational(1, 2);
      CHECK(HomogeneousNorm::of(dilate(t, z, w), w) == HomogeneousNorm::of(t, w).scaled(z));
    }
  }
}

TEST_CASE("graded seminorm: h3 quotient family at n = 2") {
  const GradedSeminorm p{2, {}};
  const auto rep = validate_graded_seminorm(cp::heisenberg3(), cp::h3_grading(), p, 3);
  CHECK(rep.submultiplicative);
  CHECK(rep.norm_at_designated);
  CHECK(rep.pairs_checked > 0);
}

TEST_CASE("graded seminorm fault injections") {
  // Zero family: trivially submultiplicative, not a norm at n.
  GradedSeminorm zero{2, {{0, Rational(0)}, {1, Rational(0)}, {2, Rational(0)}, {3, Rational(0)}}};
  const auto zrep = validate_graded_seminorm(cp::heisenberg3(), cp::h3_grading(), zero, 3);
  CHECK(zrep.submultiplicative);
  CHECK_FALSE(zrep.norm_at_designated);

  // Scaling one degree down breaks a product pair.
  GradedSeminorm skew{2, {{1, Rational(1, 10)}}};
  const auto srep = validate_graded_seminorm(cp::heisenberg3(), cp::h3_grading(), skew, 3);
  CHECK_FALSE(srep.submultiplicative);
  CHECK_FALSE(srep.violations.empty());
}

TEST_CASE("factorial family agrees with the primed seminorms up to the witness") {
  // ||f||'_{r/C} <= ||f||_r <= ||f||'_r with ||f||'_r = sum |c| r^{|a|},
  // sampled on truncated elements with trivial weights.
  const auto fact = WeightSequence::fact({1, 1});
  std::mt19937_64 rng(7);
  const Rational C(6);  // 3N with N = 2
  auto primed = [](const UElement& x, const Rational& r) {
    Rational s;
    for (const auto& [a, c] : x.terms()) s += c.abs() * r.pow(degree_of(a));
    return s;
  };
  for (int rep = 0; rep < 25; ++rep) {
    UElement x(BasisMode::Plain);
    for (int t = 0; t < 3; ++t) {
      MultiIndex a{static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)};
      x.add(a, Rational(static_cast<long>(rng() % 9) - 4));
    }
    for (const Rational& r : {Rational(1), Rational(2), Rational(1, 2)}) {
      const Rational norm = seminorm_eval(x, fact, r);
      CHECK(primed(x, r / C) <= norm);
      CHECK(norm <= primed(x, r));
    }
  }
}
