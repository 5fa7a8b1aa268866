#include "envlab/weights.hpp"

#include <algorithm>
#include <numeric>

namespace envlab {

Rational WeightSequence::value(const MultiIndex& a) const {
  switch (family) {
    case Family::Ones:
      return Rational(1);
    case Family::Factorial: {
      const long d = degree_of(a);
      if (d == 0) return Rational(1);
      return Rational(mpq_class(1, ipow(mpz_class(d), static_cast<unsigned long>(d))));
    }
    case Family::Custom: {
      if (mi_is_zero(a)) return Rational(1);
      const auto it = table.find(a);
      if (it == table.end()) throw Error("WeightSequence: value missing from custom table");
      return it->second;
    }
  }
  throw Error("WeightSequence: bad family");
}

std::optional<bool> WeightSequence::known_entire() const {
  if (family == Family::Factorial) return true;   // entire
  if (family == Family::Ones) return false;       // not entire
  return std::nullopt;
}

WeightSequence WeightSequence::ones(std::vector<int> w) {
  return {Family::Ones, std::move(w), {}};
}

WeightSequence WeightSequence::fact(std::vector<int> w) {
  return {Family::Factorial, std::move(w), {}};
}

WeightSeqReport validate_weight_sequence(const WeightSequence& M, long cutoff) {
  WeightSeqReport rep{};
  rep.m0_is_one = M.value(mi_zero(static_cast<int>(M.ambient_weights.size()))).is_one();
  rep.triples_checked = 0;

  const auto list = enumerate_weighted(M.ambient_weights, cutoff);

  if (M.family != WeightSequence::Family::Custom) {
    // The named families depend on the degree only, so multi-indices
    // sharing (degree, weight) behave identically: one representative
    // per class covers the whole exhaustive check.
    std::map<std::pair<long, long>, MultiIndex> classes;
    for (const auto& a : list)
      classes.try_emplace({degree_of(a), weight_of(a, M.ambient_weights)}, a);
    std::vector<std::pair<std::pair<long, long>, MultiIndex>> cls(classes.begin(),
                                                                  classes.end());
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a; b < cls.size(); ++b) {
        const long sum = cls[a].first.second + cls[b].first.second;
        if (sum > cutoff) continue;
        const Rational prod = M.value(cls[a].second) * M.value(cls[b].second);
        for (std::size_t g = 0; g < cls.size(); ++g) {
          if (cls[g].first.second < sum) continue;
          ++rep.triples_checked;
          if (!(M.value(cls[g].second) <= prod))
            rep.violations.push_back({cls[g].second, cls[a].second, cls[b].second});
        }
      }
    return rep;
  }

  std::vector<long> w(list.size());
  std::vector<Rational> val(list.size());
  for (std::size_t t = 0; t < list.size(); ++t) {
    w[t] = weight_of(list[t], M.ambient_weights);
    val[t] = M.value(list[t]);
  }
  for (std::size_t a = 0; a < list.size(); ++a)
    for (std::size_t b = a; b < list.size(); ++b) {
      const long sum = w[a] + w[b];
      if (sum > cutoff) continue;
      const Rational prod = val[a] * val[b];
      for (std::size_t g = 0; g < list.size(); ++g) {
        if (w[g] < sum) continue;
        ++rep.triples_checked;
        if (!(val[g] <= prod))
          rep.violations.push_back({list[g], list[a], list[b]});
      }
    }
  return rep;
}

EntireDiagnostics entire_diagnostics(const WeightSequence& M, const Rational& r,
                                     long shell_cutoff) {
  EntireDiagnostics diag{r, {}, false};
  const auto list = enumerate_weighted(M.ambient_weights, shell_cutoff);
  std::map<long, Rational> shell;
  for (const auto& a : list) shell[weight_of(a, M.ambient_weights)] += M.value(a);
  Rational partial;
  for (long n = 0; n <= shell_cutoff; ++n) {
    const Rational s = shell.count(n) ? shell[n] * r.abs().pow(n) : Rational(0);
    partial += s;
    std::optional<Rational> ratio;
    if (n > 0 && !diag.rows.back().shell_sum.is_zero())
      ratio = s / diag.rows.back().shell_sum;
    diag.rows.push_back({n, s, partial, ratio});
  }
  // Evidence: shell sums nondecreasing (and positive) over the tail.
  diag.divergence_evidence = shell_cutoff >= 2;
  for (long n = shell_cutoff / 2; n <= shell_cutoff && diag.divergence_evidence; ++n) {
    if (diag.rows[n].shell_sum.is_zero() ||
        diag.rows[n].shell_sum < diag.rows[n - 1].shell_sum)
      diag.divergence_evidence = false;
  }
  return diag;
}

Rational seminorm_eval(const UElement& x, const WeightSequence& M, const Rational& r) {
  if (x.mode() != BasisMode::Plain) throw Error("seminorm_eval: plain coordinates expected");
  Rational sum;
  for (const auto& [a, c] : x.terms()) {
    const long wa = weight_of(a, M.ambient_weights);
    sum += c.abs() * Rational(mpq_class(mi_factorial(a))) * M.value(a) * r.abs().pow(wa);
  }
  return sum;
}

FactorialComparison factorial_comparison_check(int nvars, long cutoff) {
  FactorialComparison res{true, 0, Rational(3L * nvars), {}};
  for (const auto& a : enumerate_degree(nvars, cutoff)) {
    ++res.checked;
    const long d = degree_of(a);
    const mpz_class fact = mi_factorial(a);
    const mpz_class dd = (d == 0) ? mpz_class(1) : ipow(mpz_class(d), static_cast<unsigned long>(d));
    const mpz_class cpow = ipow(mpz_class(3L * nvars), static_cast<unsigned long>(d));
    if (!(fact <= dd)) {
      res.ok = false;
      res.failures.push_back("alpha! > |alpha|^|alpha| at " + mi_str(a));
    }
    if (!(dd <= cpow * fact)) {
      res.ok = false;
      res.failures.push_back("|alpha|^|alpha| > C^|alpha| alpha! at " + mi_str(a));
    }
  }
  return res;
}

HomogeneousNorm::HomogeneousNorm(Rational base, int root) : base_(base.abs()), root_(root) {
  if (root_ <= 0) throw Error("HomogeneousNorm: root must be positive");
  if (base_.is_zero()) root_ = 1;
}

HomogeneousNorm HomogeneousNorm::of(const std::vector<Rational>& t,
                                    const std::vector<int>& weights) {
  if (t.size() != weights.size()) throw Error("HomogeneousNorm: length mismatch");
  HomogeneousNorm best;  // zero
  for (std::size_t i = 0; i < t.size(); ++i) {
    const HomogeneousNorm cand(t[i], weights[i]);
    if (best < cand) best = cand;
  }
  return best;
}

HomogeneousNorm HomogeneousNorm::scaled(const Rational& s) const {
  return HomogeneousNorm(base_ * s.abs().pow(root_), root_);
}

std::optional<Rational> HomogeneousNorm::exact() const {
  if (root_ == 1) return base_;
  mpz_class num, den;
  const int exact_num = mpz_root(num.get_mpz_t(), base_.numerator().get_mpz_t(), root_);
  const int exact_den = mpz_root(den.get_mpz_t(), base_.denominator().get_mpz_t(), root_);
  if (!exact_num || !exact_den) return std::nullopt;
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

bool operator==(const HomogeneousNorm& a, const HomogeneousNorm& b) {
  const int l = std::lcm(a.root_, b.root_);
  return a.base_.pow(l / a.root_) == b.base_.pow(l / b.root_);
}

bool operator<(const HomogeneousNorm& a, const HomogeneousNorm& b) {
  const int l = std::lcm(a.root_, b.root_);
  return a.base_.pow(l / a.root_) < b.base_.pow(l / b.root_);
}

std::vector<Rational> dilate(const std::vector<Rational>& t, const Rational& z,
                             const std::vector<int>& weights) {
  std::vector<Rational> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[i] * z.pow(weights[i]);
  return out;
}

Rational GradedSeminorm::scale_at(int degree) const {
  const auto it = scale.find(degree);
  return it == scale.end() ? Rational(1) : it->second;
}

namespace {

// Column-sum norm of the left-multiplication matrix of x on the quotient.
Rational quotient_left_norm(const TruncationContext& ctx, const UElement& x) {
  Rational best;
  for (long b = 0; b < ctx.dim(); ++b) {
    const UElement col = ctx.product_mod(x, UElement::monomial(ctx.basis()[b]));
    Rational colsum;
    for (const auto& [g, c] : col.terms()) {
      (void)g;
      colsum += c.abs();
    }
    if (best < colsum) best = colsum;
  }
  return best;
}

}  // namespace

GradedSeminormReport validate_graded_seminorm(const LieAlgebra& A,
                                              const WeightStructure& grading,
                                              const GradedSeminorm& p, long sample_cutoff) {
  if (grading.kind != WeightKind::Grading)
    throw Error("validate_graded_seminorm: a grading is required");
  GradedSeminormReport rep{true, {}, true, 0};
  TruncationContext ctx(A, grading, p.designated_n);

  auto pnorm = [&](const UElement& x, int degree) {
    return p.scale_at(degree) * quotient_left_norm(ctx, ctx.reduce(x));
  };

  const auto sample = enumerate_weighted(grading.weights, sample_cutoff);
  for (std::size_t s = 0; s < sample.size(); ++s)
    for (std::size_t t = s; t < sample.size(); ++t) {
      const long wi = weight_of(sample[s], grading.weights);
      const long wj = weight_of(sample[t], grading.weights);
      if (wi + wj > sample_cutoff) continue;
      ++rep.pairs_checked;
      const UElement a = UElement::monomial(sample[s]);
      const UElement b = UElement::monomial(sample[t]);
      const UElement ab = ctx.pbw().product(a, b);
      const Rational lhs = pnorm(ab, static_cast<int>(wi + wj));
      const Rational rhs = pnorm(a, static_cast<int>(wi)) * pnorm(b, static_cast<int>(wj));
      if (!(lhs <= rhs)) {
        rep.submultiplicative = false;
        rep.violations.push_back("p(" + mi_str(sample[s]) + " * " + mi_str(sample[t]) +
                                 ") exceeds the product bound");
      }
    }

  // Definiteness on U(g)^n: the linear map x -> L_{tau(x)} restricted to
  // the degree-n span must be injective and the scale nonzero.
  const int n = p.designated_n;
  std::vector<MultiIndex> degree_n;
  for (const auto& a : ctx.basis())
    if (ctx.weight(a) == n) degree_n.push_back(a);
  if (p.scale_at(n).is_zero()) {
    rep.norm_at_designated = false;
  } else if (!degree_n.empty()) {
    RatMatrix cols(ctx.dim() * ctx.dim(), static_cast<long>(degree_n.size()));
    for (std::size_t c = 0; c < degree_n.size(); ++c) {
      for (long b = 0; b < ctx.dim(); ++b) {
        const UElement col =
            ctx.product_mod(UElement::monomial(degree_n[c]), UElement::monomial(ctx.basis()[b]));
        for (const auto& [g, v] : col.terms())
          cols.at(ctx.index_of(g) * ctx.dim() + b, static_cast<long>(c)) = v;
      }
    }
    rep.norm_at_designated = (rank(cols) == static_cast<long>(degree_n.size()));
  }
  return rep;
}

}  // namespace envlab
