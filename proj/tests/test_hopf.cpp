#include <doctest.h>

#include "envlab/corpus.hpp"
#include "envlab/hochschild.hpp"
#include "envlab/hopf.hpp"
#include "oracles.hpp"

using namespace envlab;
namespace cp = envlab::corpus;

namespace {
TruncatedHopf h3_hopf(long W) {
  return build_truncated_hopf(TruncationContext(cp::heisenberg3(), cp::h3_grading(), W));
}
}  // namespace

TEST_CASE("comultiplication splittings") {
  const auto H = h3_hopf(2);
  const long e1 = H.ctx.index_of({1, 0, 0});
  const long one = H.unit_index;

  // Delta(e1) = e1 ox 1 + 1 ox e1
  Tensor2 expect{{{e1, one}, Rational(1)}, {{one, e1}, Rational(1)}};
  CHECK(H.comul[e1] == expect);

  // In the divided basis Delta(e_(2,0,0)) = e_(2,0,0) ox 1 +
  // e_(1,0,0) ox e_(1,0,0) + 1 ox e_(2,0,0); in plain coordinates the
  // middle coefficient is the binomial 2.
  const long e1sq = H.ctx.index_of({2, 0, 0});
  Tensor2 expect2{{{e1sq, one}, Rational(1)},
                  {{e1, e1}, Rational(2)},
                  {{one, e1sq}, Rational(1)}};
  CHECK(H.comul[e1sq] == expect2);
}

TEST_CASE("antipode by word reversal") {
  const auto H = h3_hopf(2);
  // S(e1 e2) = e2 e1 = e1 e2 - e3
  const long e12 = H.ctx.index_of({1, 1, 0});
  Tensor1 expect{{e12, Rational(1)}, {H.ctx.index_of({0, 0, 1}), Rational(-1)}};
  CHECK(H.antipode[e12] == expect);
  // S(e1) = -e1
  const long e1 = H.ctx.index_of({1, 0, 0});
  CHECK(H.antipode[e1] == Tensor1{{e1, Rational(-1)}});
}

TEST_CASE("all Hopf axioms pass on the bundled quotients") {
  for (long W = 0; W <= 3; ++W) {
    CAPTURE(W);
    CHECK(verify_hopf_axioms(h3_hopf(W)).all_ok());
  }
  CHECK(verify_hopf_axioms(build_truncated_hopf(
                               TruncationContext(cp::abelian(2), cp::trivial_grading(2), 3)))
            .all_ok());
  CHECK(verify_hopf_axioms(build_truncated_hopf(
                               TruncationContext(cp::favre7(), cp::favre7_filtration(), 3)))
            .all_ok());
}

TEST_CASE("corrupted comultiplication is located at coassociativity") {
  auto H = h3_hopf(2);
  // An extra e1 ox 1 term: (Delta ox 1) picks up 1 ox e1 ox 1 which
  // (1 ox Delta) does not.
  H.comul[H.ctx.index_of({1, 1, 0})][{H.ctx.index_of({1, 0, 0}), H.unit_index}] +=
      Rational(1, 3);
  const auto rep = verify_hopf_axioms(H);
  CHECK_FALSE(rep.all_ok());
  bool coassoc_failed = false;
  for (const auto& e : rep.entries)
    if (e.name == "coassociativity" && !e.ok) coassoc_failed = true;
  CHECK(coassoc_failed);
}

TEST_CASE("inverse process: frozen two-step example") {
  const auto H = h3_hopf(2);
  const long d = H.dim;
  const long e1 = H.ctx.index_of({1, 0, 0});
  const long one = H.unit_index;
  const SparseMatrix Phi = phi_matrix(H), Psi = psi_matrix(H);

  // Phi(1 ox e1) = e1 ox 1 + 1 ox e1, then Psi returns 1 ox e1.
  auto column = [d](const SparseMatrix& M, long col) {
    std::map<long, Rational> out;
    for (long r = 0; r < M.rows(); ++r)
      for (const auto& [c, v] : M.row(r))
        if (c == col) out[r] += v;
    return out;
  };
  const auto phi_col = column(Phi, one * d + e1);
  std::map<long, Rational> expect{{e1 * d + one, Rational(1)}, {one * d + e1, Rational(1)}};
  CHECK(phi_col == expect);

  // Phi(a ox 1) = a ox 1 for every basis a.
  for (long a = 0; a < d; ++a) {
    const auto col = column(Phi, a * d + one);
    CHECK(col == std::map<long, Rational>{{a * d + one, Rational(1)}});
  }

  // Psi applied to Phi(1 ox e1): expand by linearity.
  std::map<long, Rational> psi_of;
  for (const auto& [row, val] : phi_col)
    for (const auto& [r2, v2] : column(Psi, row)) psi_of[r2] += val * v2;
  std::erase_if(psi_of, [](const auto& e) { return e.second.is_zero(); });
  CHECK(psi_of == std::map<long, Rational>{{one * d + e1, Rational(1)}});
}

TEST_CASE("inverse process holds on all bundled quotients") {
  for (long W = 0; W <= 3; ++W) {
    CAPTURE(W);
    CHECK(inverse_process_check(h3_hopf(W)).ok());
  }
  CHECK(inverse_process_check(
            build_truncated_hopf(TruncationContext(cp::abelian(2), cp::trivial_grading(2), 4)))
            .ok());
  CHECK(inverse_process_check(
            build_truncated_hopf(TruncationContext(cp::favre7(), cp::favre7_filtration(), 3)))
            .ok());
}

TEST_CASE("Hochschild vs Ext: commutative dim-3 quotient") {
  // U(h3)/J_2 has basis {1, e1, e2} with every product of generators 0:
  // commutative, so H^0(H,H) is everything.
  const auto H = h3_hopf(1);
  REQUIRE(H.dim == 3);
  const auto M = Bimodule::regular(H);
  REQUIRE(bimodule_valid(H, M));
  const auto res = hochschild_ext_compare(H, M, 2);
  CHECK(res.agree);
  CHECK(res.hochschild[0] == 3);

  // Center oracle: dim of center = dim - rank of the stacked commutator
  // map x -> [x, e_a], assembled directly from the product tensors.
  std::vector<std::vector<Rational>> commute_rows;
  for (long a = 0; a < H.dim; ++a)
    for (long c = 0; c < H.dim; ++c) {
      std::vector<Rational> row(H.dim);
      for (long b = 0; b < H.dim; ++b) {
        Rational v;
        for (const auto& [cc, vv] : H.mul[b][a])
          if (cc == c) v += vv;
        for (const auto& [cc, vv] : H.mul[a][b])
          if (cc == c) v -= vv;
        row[b] = v;
      }
      commute_rows.push_back(row);
    }
  const long center_dim = H.dim - oracles::gauss_rank(std::move(commute_rows));
  CHECK(res.hochschild[0] == center_dim);
}

TEST_CASE("Hochschild vs Ext: dim-7 quotient center") {
  const auto H = h3_hopf(2);
  REQUIRE(H.dim == 7);
  const auto M = Bimodule::regular(H);
  const auto res = hochschild_ext_compare(H, M, 1);
  CHECK(res.agree);
  // Center of U(h3)/J_3: everything except e1, e2 (their commutator e3
  // survives the cutoff, all higher commutators do not).
  CHECK(res.hochschild[0] == 5);
}

TEST_CASE("size cap is enforced") {
  const auto H = h3_hopf(2);
  const auto M = Bimodule::regular(H);
  CHECK_THROWS_AS(hochschild_ext_compare(H, M, 3, 60), SizeCapError);
}

TEST_CASE("E-twisted action is the commutator action on primitives") {
  const auto H = h3_hopf(2);
  const auto M = Bimodule::regular(H);
  const auto rho = e_twisted_left_action(H, M);
  for (long a : {H.ctx.index_of({1, 0, 0}), H.ctx.index_of({0, 1, 0})}) {
    const RatMatrix expect = M.left[a] - M.right[a];
    CHECK(rho[a] == expect);
  }
}

TEST_CASE("trivial coefficients: invariants in degree zero") {
  const auto H = h3_hopf(2);
  const auto M = Bimodule::trivial(H);
  REQUIRE(bimodule_valid(H, M));
  const auto res = hochschild_ext_compare(H, M, 1);
  CHECK(res.agree);
  CHECK(res.hochschild[0] == 1);
}

TEST_CASE("axioms hold at cutoff five") {
  CHECK(verify_hopf_axioms(h3_hopf(5)).all_ok());
  CHECK(verify_hopf_axioms(build_truncated_hopf(
                               TruncationContext(cp::abelian(2), cp::trivial_grading(2), 5)))
            .all_ok());
  CHECK(verify_hopf_axioms(build_truncated_hopf(
                               TruncationContext(cp::favre7(), cp::favre7_filtration(), 5)))
            .all_ok());
}

TEST_CASE("a dim-4 composite: central line adjoined to h3") {
  // basis (e1, e2, a, e4) with [e1,e2] = e4 and a central; graded by
  // (1, 1, 1, 2). Exercises the machinery off the bundled corpus.
  using BL = LieAlgebra::BracketLine;
  const LieAlgebra A(4, {BL{0, 1, {{3, Rational(1)}}}});
  REQUIRE(validate_lie_algebra(A).valid());
  const WeightStructure g{WeightKind::Grading, {1, 1, 1, 2}};
  REQUIRE(verify_weight_structure(A, g).valid());
  for (long W : {0L, 2L, 3L}) {
    CAPTURE(W);
    const TruncationContext ctx(A, g, W);
    const auto H = build_truncated_hopf(ctx);
    CHECK(verify_hopf_axioms(H).all_ok());
    CHECK(inverse_process_check(H).ok());
  }
}
