#include <doctest.h>

#include "envlab/ce_complex.hpp"
#include "envlab/corpus.hpp"
#include "envlab/koszul.hpp"
#include "oracles.hpp"

using namespace envlab;
namespace cp = envlab::corpus;

namespace {
std::vector<long> betti_by_oracle(const ChainComplex& C) {
  std::vector<long> rk(C.maps.size());
  for (std::size_t k = 0; k < C.maps.size(); ++k) rk[k] = oracles::gauss_rank(C.maps[k]);
  std::vector<long> b(C.dims.size());
  for (std::size_t k = 0; k < C.dims.size(); ++k)
    b[k] = C.dims[k] - (k > 0 ? rk[k - 1] : 0) - (k < rk.size() ? rk[k] : 0);
  return b;
}
}  // namespace

TEST_CASE("chain complex for h3 with trivial coefficients") {
  const auto M = ModuleAction::trivial(cp::heisenberg3(), ModuleAction::Side::Right);
  const auto C = ce_chain_complex(cp::heisenberg3(), M);
  CHECK(C.dims == std::vector<long>{1, 3, 3, 1});
  CHECK(composite_zero(C));
  // The only nonzero differential entry comes from [e1,e2] = e3.
  long nnz = 0;
  for (const auto& d : C.maps) nnz += d.nnz();
  CHECK(nnz == 1);
}

TEST_CASE("abelian: all differentials vanish, binomial Betti") {
  for (int n : {1, 2, 3, 4}) {
    CAPTURE(n);
    const auto A = cp::abelian(n);
    const auto C = ce_chain_complex(A, ModuleAction::trivial(A, ModuleAction::Side::Right));
    for (const auto& d : C.maps) CHECK(d.nnz() == 0);
    const auto b = homology_dims(C);
    for (int p = 0; p <= n; ++p) {
      mpz_class bin;
      mpz_bin_uiui(bin.get_mpz_t(), n, p);
      CHECK(b[p] == bin.get_si());
    }
  }
}

TEST_CASE("cochain d^1 is the negated bracket dual") {
  // d^1 f (X ^ Y) = -f([X,Y]) for trivial coefficients.
  const auto A = cp::heisenberg3();
  const auto ds = ce_cochain_maps(A, ModuleAction::trivial(A, ModuleAction::Side::Left));
  REQUIRE(ds.size() == 3);
  CHECK(ds[0].nnz() == 0);  // d^0 = 0 on the trivial module
  // C^1 has basis f = e_k^*; C^2 basis indexed by pairs (i<j).
  // Entry at row (0,1) [the e1^e2 slot], column k=2 must be -1.
  const auto d1 = ds[1].dense();
  CHECK(d1.rows() == 3);
  CHECK(d1.cols() == 3);
  CHECK(d1.at(0, 2) == Rational(-1));
  long nnz = 0;
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j)
      if (!d1.at(i, j).is_zero()) ++nnz;
  CHECK(nnz == 1);
}

TEST_CASE("sl2 trivial coefficients: d^1 is a full 3x3 block") {
  const auto ds = ce_cochain_maps(cp::sl2(), ModuleAction::trivial(cp::sl2(), ModuleAction::Side::Left));
  const auto d1 = ds[1];
  CHECK(d1.rows() == 3);
  CHECK(d1.cols() == 3);
  CHECK(d1.nnz() == 3);  // one entry per bracket relation
  CHECK(rank(d1) == 3);
}

TEST_CASE("cochain of the dual module transposes the chain complex") {
  for (const auto& A : {cp::heisenberg3(), cp::sl2(), cp::solvable2(), cp::favre7()}) {
    CAPTURE(A.name());
    // Right module: the adjoint-flavored action m.X via ad matrices.
    ModuleAction M{ModuleAction::Side::Right, A.dim(), {}};
    for (int i = 0; i < A.dim(); ++i) {
      // right action by -ad(e_i): a right module since ad is a left one
      M.rho.push_back(RatMatrix(A.dim(), A.dim()) - A.ad(i));
    }
    REQUIRE(action_valid(A, M));
    const auto chain = ce_chain_complex(A, M);
    const auto dual = dual_action_module(M);  // left module on M'
    REQUIRE(action_valid(A, dual));
    const auto cochain = ce_cochain_maps(A, dual);
    REQUIRE(chain.maps.size() == cochain.size());
    for (std::size_t k = 0; k < chain.maps.size(); ++k) {
      const RatMatrix lhs = cochain[k].dense();
      const RatMatrix rhs = chain.maps[k].dense().transposed();
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Betti numbers with trivial coefficients, rank oracle frozen") {
  const auto left3 = ModuleAction::trivial(cp::heisenberg3(), ModuleAction::Side::Left);
  const auto Ch3 = ce_cochain_complex(cp::heisenberg3(), left3);
  CHECK(betti_by_oracle(Ch3) == std::vector<long>{1, 2, 2, 1});
  CHECK(homology_dims(Ch3) == std::vector<long>{1, 2, 2, 1});

  const auto leftsl2 = ModuleAction::trivial(cp::sl2(), ModuleAction::Side::Left);
  const auto Csl2 = ce_cochain_complex(cp::sl2(), leftsl2);
  CHECK(betti_by_oracle(Csl2) == std::vector<long>{1, 0, 0, 1});
  CHECK(homology_dims(Csl2) == std::vector<long>{1, 0, 0, 1});
}

TEST_CASE("b1 equals the abelianization dimension") {
  for (const auto& A : {cp::heisenberg3(), cp::sl2(), cp::favre7(), cp::solvable2()}) {
    CAPTURE(A.name());
    const auto b = lie_cohomology_betti(A, ModuleAction::trivial(A, ModuleAction::Side::Left));
    const auto lcs = lower_central_series(A);
    CHECK(b[1] == A.dim() - lcs.dims[1]);
  }
  CHECK(lie_cohomology_betti(cp::heisenberg3(),
                             ModuleAction::trivial(cp::heisenberg3(), ModuleAction::Side::Left))[1] == 2);
  CHECK(lie_cohomology_betti(cp::sl2(),
                             ModuleAction::trivial(cp::sl2(), ModuleAction::Side::Left))[1] == 0);
  CHECK(lie_cohomology_betti(cp::favre7(),
                             ModuleAction::trivial(cp::favre7(), ModuleAction::Side::Left))[1] == 2);
}

TEST_CASE("Euler characteristic vanishes") {
  for (const auto& A : {cp::heisenberg3(), cp::sl2(), cp::favre7()}) {
    CAPTURE(A.name());
    const auto C = ce_cochain_complex(A, ModuleAction::trivial(A, ModuleAction::Side::Left));
    CHECK(euler_characteristic(C) == 0);
    const auto b = homology_dims(C);
    long chi = 0;
    int sign = 1;
    for (long x : b) {
      chi += sign * x;
      sign = -sign;
    }
    CHECK(chi == 0);
  }
}

TEST_CASE("homology rejects a non-complex") {
  ChainComplex C;
  C.dims = {1, 1};
  SparseMatrix d(1, 1);
  d.add(0, 0, Rational(1));
  C.maps.push_back(d);
  ChainComplex C2;
  C2.dims = {1, 1, 1};
  C2.maps.push_back(d);
  C2.maps.push_back(d);
  CHECK_THROWS_AS(homology_dims(C2), Error);
}

TEST_CASE("Poincare duality for the nilpotent corpus") {
  for (const auto& A : {cp::heisenberg3(), cp::favre7(), cp::abelian(3)}) {
    CAPTURE(A.name());
    const auto rep = poincare_duality_check(A, ModuleAction::trivial(A, ModuleAction::Side::Left));
    CHECK(rep.nilpotent_simplification);
    CHECK(rep.holds);
  }
  const auto h3rep = poincare_duality_check(cp::heisenberg3(),
                                            ModuleAction::trivial(cp::heisenberg3(), ModuleAction::Side::Left));
  CHECK(h3rep.cohomology == std::vector<long>{1, 2, 2, 1});
  CHECK(h3rep.homology == std::vector<long>{1, 2, 2, 1});
}

TEST_CASE("Poincare duality with the trace twist on solvable2") {
  const auto rep = poincare_duality_check(cp::solvable2(),
                                          ModuleAction::trivial(cp::solvable2(), ModuleAction::Side::Left));
  CHECK_FALSE(rep.nilpotent_simplification);
  CHECK(rep.holds);
  CHECK(rep.cohomology == std::vector<long>{1, 1, 0});
  CHECK(rep.homology == std::vector<long>{0, 1, 1});
}

TEST_CASE("Koszul quotient exactness") {
  SUBCASE("abelian dim 1 at several cutoffs") {
    for (long W : {0L, 3L, 10L}) {
      CAPTURE(W);
      const auto cert = koszul_quotient_exactness(cp::abelian(1), cp::trivial_grading(1), W);
      CHECK(cert.exact);
      CHECK(cert.weight_monotone);
      CHECK(cert.weight_preserved);
    }
  }
  SUBCASE("h3 at W <= 8") {
    for (long W : {0L, 2L, 5L, 8L}) {
      CAPTURE(W);
      const auto cert = koszul_quotient_exactness(
          cp::heisenberg3(), WeightStructure{WeightKind::Filtration, {1, 1, 2}}, W);
      CHECK(cert.exact);
      CHECK(cert.weight_monotone);
      CHECK(cert.weight_preserved);  // these weights grade h3
    }
  }
  SUBCASE("favre7 at W <= 6: filtered but not graded") {
    const auto cert = koszul_quotient_exactness(cp::favre7(), cp::favre7_filtration(), 6);
    CHECK(cert.exact);
    CHECK(cert.weight_monotone);
    CHECK_FALSE(cert.weight_preserved);
    // exactness again via the naive oracle on the same complex
    const auto C = truncated_koszul_complex(cp::favre7(), cp::favre7_filtration(), 4);
    ChainComplex aug;
    aug.dims.push_back(1);
    for (long d : C.dims) aug.dims.push_back(d);
    aug.maps.push_back(*C.augmentation);
    for (const auto& m : C.maps) aug.maps.push_back(m);
    for (long b : betti_by_oracle(aug)) CHECK(b == 0);
  }
  SUBCASE("requires nilpotency") {
    CHECK_THROWS_AS(truncated_koszul_complex(cp::sl2(), cp::trivial_grading(3), 2), Error);
  }
}

TEST_CASE("dim-4 composite: Koszul exactness and duality") {
  using BL = LieAlgebra::BracketLine;
  const LieAlgebra A(4, {BL{0, 1, {{3, Rational(1)}}}});
  const WeightStructure g{WeightKind::Filtration, {1, 1, 1, 2}};
  for (long W : {2L, 4L}) {
    CAPTURE(W);
    const auto cert = koszul_quotient_exactness(A, g, W);
    CHECK(cert.exact);
    CHECK(cert.weight_preserved);
  }
  const auto rep = poincare_duality_check(A, ModuleAction::trivial(A, ModuleAction::Side::Left));
  CHECK(rep.holds);
  // Betti table by the Kuenneth pattern: (1,3,4,3,1) for h3 x line.
  CHECK(rep.cohomology == std::vector<long>{1, 3, 4, 3, 1});
}

TEST_CASE("nontrivial module: the standard h3 representation") {
  // rho(e1) = E12, rho(e2) = E23, rho(e3) = E13 on column vectors:
  // [rho(e1), rho(e2)] = E13, all other brackets vanish.
  const auto A = cp::heisenberg3();
  ModuleAction M{ModuleAction::Side::Left, 3, std::vector<RatMatrix>(3, RatMatrix(3, 3))};
  M.rho[0].at(0, 1) = Rational(1);
  M.rho[1].at(1, 2) = Rational(1);
  M.rho[2].at(0, 2) = Rational(1);
  REQUIRE(action_valid(A, M));

  const auto C = ce_cochain_complex(A, M);
  CHECK(composite_zero(C));
  const auto b = homology_dims(C);
  long chi = 0;
  int sign = 1;
  for (long x : b) {
    chi += sign * x;
    sign = -sign;
  }
  CHECK(chi == 0);
  // Nilpotent, so duality holds without a twist even for this module.
  CHECK(poincare_duality_check(A, M).holds);
}

TEST_CASE("an action violating the bracket identity is rejected") {
  // Claim e1, e2 act as noncommuting matrices while [e1,e2] acts as 0:
  // the bracket identity fails and the complex constructors refuse.
  const auto A = cp::heisenberg3();
  ModuleAction M{ModuleAction::Side::Right, 2, std::vector<RatMatrix>(3, RatMatrix(2, 2))};
  M.rho[0].at(0, 1) = Rational(1);
  M.rho[1].at(1, 0) = Rational(1);
  REQUIRE_FALSE(action_valid(A, M));
  CHECK_THROWS_AS(ce_chain_complex(A, M), Error);
  ModuleAction L = M;
  L.side = ModuleAction::Side::Left;
  CHECK_THROWS_AS(ce_cochain_maps(A, L), Error);
}
