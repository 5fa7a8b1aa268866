#ifndef ENVLAB_WEIGHTS_HPP
#define ENVLAB_WEIGHTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "envlab/pbw.hpp"

namespace envlab {

/// Weight sequence M_alpha over the multi-indices of a weighted
/// basis: M_0 = 1 and M_gamma <= M_alpha M_beta whenever
/// w(gamma) >= w(alpha) + w(beta).
struct WeightSequence {
  enum class Family { Ones, Factorial, Custom };
  Family family = Family::Ones;
  std::vector<int> ambient_weights;
  std::map<MultiIndex, Rational> table;  // Custom only

  /// Ones: 1. Factorial: |alpha|^{-|alpha|} (1 at alpha = 0).
  Rational value(const MultiIndex& a) const;

  /// Known verdicts for the two named families; nullopt for Custom
  /// (entireness is not decidable from finitely many terms).
  std::optional<bool> known_entire() const;

  static WeightSequence ones(std::vector<int> w);
  static WeightSequence fact(std::vector<int> w);
};

struct WeightSeqViolation {
  MultiIndex gamma, alpha, beta;
};

struct WeightSeqReport {
  bool m0_is_one;
  std::vector<WeightSeqViolation> violations;
  long triples_checked;
  bool valid() const { return m0_is_one && violations.empty(); }
};

/// Exhaustive submultiplicativity check over all triples with weights
/// up to the cutoff.
WeightSeqReport validate_weight_sequence(const WeightSequence& M, long cutoff);

struct ShellRow {
  long shell_weight;
  Rational shell_sum;    // sum over w(alpha) = shell of M_alpha r^shell
  Rational partial_sum;  // cumulative
  std::optional<Rational> ratio;  // shell / previous shell, when defined
};

struct EntireDiagnostics {
  Rational r;
  std::vector<ShellRow> rows;
  bool divergence_evidence;  // nondecreasing shell sums over the tail
};

/// Partial sums of sum_alpha M_alpha r^{w(alpha)} by weight shell; a
/// diagnostic, not a decision procedure.
EntireDiagnostics entire_diagnostics(const WeightSequence& M, const Rational& r,
                                     long shell_cutoff);

/// ||x||_r = sum |c_alpha| alpha! M_alpha r^{w(alpha)} on plain
/// coordinates; exact finite sum.
Rational seminorm_eval(const UElement& x, const WeightSequence& M, const Rational& r);

struct FactorialComparison {
  bool ok;
  long checked;
  Rational witness_constant;  // C = 3N
  std::vector<std::string> failures;
};

/// alpha! <= |alpha|^{|alpha|} <= (3N)^{|alpha|} alpha! for all
/// |alpha| <= cutoff (0^0 = 1), the exact-rational witness for the
/// Cauchy-estimate constant.
FactorialComparison factorial_comparison_check(int nvars, long cutoff);

/// max_i |t_i|^{1/w_i}, kept in exact form (base, root) and compared by
/// lcm cross-powering. No floating point.
class HomogeneousNorm {
public:
  HomogeneousNorm() : base_(0), root_(1) {}
  HomogeneousNorm(Rational base, int root);

  static HomogeneousNorm of(const std::vector<Rational>& t, const std::vector<int>& weights);

  const Rational& base() const { return base_; }
  int root() const { return root_; }
  bool is_zero() const { return base_.is_zero(); }

  /// |s| * this, exact: (base * |s|^root, root).
  HomogeneousNorm scaled(const Rational& s) const;

  /// Rational value when the root is exact, nullopt otherwise.
  std::optional<Rational> exact() const;

  friend bool operator==(const HomogeneousNorm& a, const HomogeneousNorm& b);
  friend bool operator<(const HomogeneousNorm& a, const HomogeneousNorm& b);

private:
  Rational base_;  // >= 0
  int root_;       // value = base^(1/root)
};

/// Coordinates of the dilation delta_z: t_i -> z^{w_i} t_i.
std::vector<Rational> dilate(const std::vector<Rational>& t, const Rational& z,
                             const std::vector<int>& weights);

/// Per-degree seminorm family built from one truncation: for the
/// designated n, p_i(a) = scale_i * ||L_{tau(a)}||_1 with tau the
/// quotient map onto U/J_{n+1} and ||.||_1 the column-sum matrix norm.
struct GradedSeminorm {
  int designated_n;
  std::map<int, Rational> scale;  // per-degree factors; default 1

  Rational scale_at(int degree) const;
};

struct GradedSeminormReport {
  bool submultiplicative;
  std::vector<std::string> violations;
  bool norm_at_designated;  // definite on U(g)^n
  long pairs_checked;
};

/// Requires a grading. Checks p_{i+j}(ab) <= p_i(a) p_j(b) on all
/// homogeneous basis-monomial pairs with i + j <= sample_cutoff, and
/// definiteness of p_n on the degree-n component.
GradedSeminormReport validate_graded_seminorm(const LieAlgebra& A, const WeightStructure& grading,
                                              const GradedSeminorm& p, long sample_cutoff);

}  // namespace envlab

#endif
