#ifndef ENVLAB_LIE_ALGEBRA_HPP
#define ENVLAB_LIE_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "envlab/matrix.hpp"
#include "envlab/rational.hpp"

namespace envlab {

/// Finite-dimensional Lie algebra over the rationals, presented by
/// structure constants on an ordered basis e_1..e_N:
///   [e_i, e_j] = sum_k c(i,j,k) e_k.
/// Constructors take entries for i < j only; the antisymmetric
/// completion is automatic.
class LieAlgebra {
public:
  struct BracketTerm {
    int k;
    Rational c;
  };
  struct BracketLine {
    int i, j;  // 0-based, i < j
    std::vector<BracketTerm> terms;
  };

  LieAlgebra() : dim_(0) {}
  LieAlgebra(int dim, const std::vector<BracketLine>& brackets,
             std::string name = "", std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::string& label(int i) const { return labels_[i]; }

  const Rational& c(int i, int j, int k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  /// [u, v] for coordinate vectors.
  std::vector<Rational> bracket(const std::vector<Rational>& u,
                                const std::vector<Rational>& v) const;

  /// Matrix of ad(e_i): column j holds [e_i, e_j].
  RatMatrix ad(int i) const;

private:
  int dim_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Rational> c_;  // dense N^3
};

struct StructureViolation {
  enum class Kind { Antisymmetry, Jacobi } kind;
  int i, j, k;  // Jacobi: the violating triple; Antisymmetry: (i,j) with k the coordinate
  std::string detail;
};

struct ValidationReport {
  std::vector<StructureViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks antisymmetry (including [x,x]=0 on the diagonal) and the
/// Jacobi identity by the exhaustive triple loop. Violations are data,
/// not failures.
ValidationReport validate_lie_algebra(const LieAlgebra& A);

enum class WeightKind { Grading, Filtration };

/// Positive integer weights attached to the basis, nondecreasing.
struct WeightStructure {
  WeightKind kind = WeightKind::Filtration;
  std::vector<int> weights;
};

struct WeightViolation {
  int i, j, k;
  long lhs;  // w_i + w_j
  long rhs;  // w_k
  std::string detail;
};

struct WeightReport {
  std::vector<WeightViolation> violations;
  std::vector<std::string> basis_problems;  // nondecreasing / F-basis findings
  bool valid() const { return violations.empty() && basis_problems.empty(); }
};

/// Grading: c(i,j,k) != 0 requires w_k == w_i + w_j.
/// Filtration: c(i,j,k) != 0 requires w_k >= w_i + w_j.
/// Also checks positivity and the nondecreasing basis order, and, for
/// filtrations on nilpotent algebras, that the basis spans the lower
/// central series term by term (F-basis condition).
WeightReport verify_weight_structure(const LieAlgebra& A, const WeightStructure& W);

struct SeriesResult {
  std::vector<RatMatrix> bases;  // echelon bases of g_1 >= g_2 >= ...
  std::vector<int> dims;         // including the stabilized tail term
  bool reaches_zero;
};

/// g_1 = g, g_{n+1} = [g, g_n]; nilpotent iff it reaches 0.
SeriesResult lower_central_series(const LieAlgebra& A);

/// g^(1) = g, g^(n+1) = [g^(n), g^(n)]; solvable iff it reaches 0.
SeriesResult derived_series(const LieAlgebra& A);

bool is_nilpotent(const LieAlgebra& A);
bool is_solvable(const LieAlgebra& A);

/// B_{ij} = trace(ad e_i ad e_j).
RatMatrix killing_form(const LieAlgebra& A);
bool killing_nondegenerate(const LieAlgebra& A);

/// The solvability flag, exposed under the name of the criterion it
/// realizes: the algebra of analytic functionals on the associated
/// simply connected group is stably flat over U(g) iff g is solvable.
bool analytic_functionals_stably_flat(const LieAlgebra& A);

/// Weights w_i = max{n : e_i in g_n} from the lower central series,
/// provided the algebra is nilpotent and the given basis is an F-basis
/// for that filtration. This is the default weight structure.
std::optional<WeightStructure> lower_central_weights(const LieAlgebra& A);

/// Searches for positive integer weights making the bracket relations
/// exactly graded. Exact on the forced part; the free part is scanned
/// over a small bounded grid, so a nullopt answer is a certificate only
/// when the constraint system itself is infeasible (reported via the
/// bool flag: true = proven none, false = none found in scan).
struct GradingSearchResult {
  std::optional<std::vector<int>> weights;
  bool infeasible_proven = false;
};
GradingSearchResult find_positive_grading(const LieAlgebra& A);

}  // namespace envlab

#endif
