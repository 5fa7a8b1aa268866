// Acceptance suite: every check exact over the rationals, one verdict
// line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "envlab/ce_complex.hpp"
#include "envlab/contract.hpp"
#include "envlab/corpus.hpp"
#include "envlab/de_rham.hpp"
#include "envlab/dual_poly.hpp"
#include "envlab/hochschild.hpp"
#include "envlab/hopf.hpp"
#include "envlab/koszul.hpp"
#include "envlab/weights.hpp"

using namespace envlab;
namespace cp = envlab::corpus;

namespace {

struct Harness {
  int failed = 0;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void criterion(int num, const std::string& label, bool ok, const std::string& note = "") {
    const auto t1 = std::chrono::steady_clock::now();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    t0 = t1;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << num << ". " << label;
    if (!note.empty()) std::cout << " -- " << note;
    std::cout << " (" << ms << " ms)" << std::endl;
    if (!ok) ++failed;
  }
};

ModuleAction trivial_left(const LieAlgebra& A) {
  return ModuleAction::trivial(A, ModuleAction::Side::Left);
}

bool betti_equal(const std::vector<long>& a, const std::vector<long>& b) { return a == b; }

}  // namespace

int main() {
  Harness h;

  // 1. Structure: the whole corpus validates; fault injections are flagged.
  {
    bool ok = true;
    for (const auto& A : {cp::abelian(1), cp::abelian(2), cp::abelian(3), cp::heisenberg3(),
                          cp::sl2(), cp::favre7(), cp::solvable2()})
      ok = ok && validate_lie_algebra(A).valid();
    using BL = LieAlgebra::BracketLine;
    const LieAlgebra bad1(3, {BL{0, 1, {{2, Rational(1)}}}, BL{0, 2, {{1, Rational(1)}}},
                              BL{1, 2, {{1, Rational(1)}}}});
    ok = ok && !validate_lie_algebra(bad1).valid();
    std::vector<BL> fb;
    for (int i = 2; i <= 6; ++i) fb.push_back(BL{0, i - 1, {{i, Rational(1)}}});
    fb.push_back(BL{1, 2, {{5, Rational(-1)}}});
    fb.push_back(BL{2, 3, {{5, Rational(1)}}});  // corrupted: [X3,X4] = X6
    fb.push_back(BL{1, 3, {{6, Rational(-1)}}});
    fb.push_back(BL{1, 4, {{6, Rational(-1)}}});
    ok = ok && !validate_lie_algebra(LieAlgebra(7, fb)).valid();
    h.criterion(1, "structure validation + fault injection", ok);
  }

  // 2. Series dims.
  {
    const bool ok = lower_central_series(cp::heisenberg3()).dims == std::vector<int>{3, 1, 0} &&
                    lower_central_series(cp::favre7()).dims ==
                        std::vector<int>{7, 5, 4, 3, 2, 1, 0} &&
                    derived_series(cp::solvable2()).dims == std::vector<int>{2, 1, 0} &&
                    !is_solvable(cp::sl2());
    h.criterion(2, "lower central and derived series", ok);
  }

  // 3. Killing forms.
  {
    const bool ok = killing_nondegenerate(cp::sl2()) &&
                    killing_form(cp::heisenberg3()).is_zero() &&
                    killing_form(cp::favre7()).is_zero();
    h.criterion(3, "Killing: sl2 nondegenerate, h3/favre7 zero", ok);
  }

  // 4. Hopf axioms and the inverse process at every cutoff up to 4.
  {
    bool ok = true;
    std::string note;
    for (const auto& [A, Wt] : {std::pair{cp::abelian(2), cp::trivial_grading(2)},
                                std::pair{cp::heisenberg3(), cp::h3_grading()},
                                std::pair{cp::favre7(), cp::favre7_filtration()}}) {
      for (long W = 0; W <= 4; ++W) {
        const TruncationContext ctx(A, Wt, W);
        const TruncatedHopf H = build_truncated_hopf(ctx);
        const auto rep = verify_hopf_axioms(H);
        const auto inv = inverse_process_check(H);
        if (!rep.all_ok() || !inv.ok()) {
          ok = false;
          note = A.name() + " at cutoff " + std::to_string(W);
        }
      }
    }
    h.criterion(4, "Hopf axioms + PhiPsi inverse + muE identity (W <= 4)", ok, note);
  }

  // 5. Cohomology Betti tables.
  {
    bool ok =
        betti_equal(lie_cohomology_betti(cp::heisenberg3(), trivial_left(cp::heisenberg3())),
                    {1, 2, 2, 1}) &&
        betti_equal(lie_cohomology_betti(cp::sl2(), trivial_left(cp::sl2())), {1, 0, 0, 1});
    for (int n : {1, 2, 3}) {
      const auto b = lie_cohomology_betti(cp::abelian(n), trivial_left(cp::abelian(n)));
      for (int p = 0; p <= n; ++p) {
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), n, p);
        ok = ok && b[p] == bin.get_si();
      }
    }
    for (const auto& A : {cp::heisenberg3(), cp::sl2(), cp::favre7(), cp::solvable2()}) {
      const auto b = lie_cohomology_betti(A, trivial_left(A));
      ok = ok && b[1] == A.dim() - lower_central_series(A).dims[1];
      long chi = 0;
      int sign = 1;
      for (long x : b) {
        chi += sign * x;
        sign = -sign;
      }
      ok = ok && chi == 0;
    }
    h.criterion(5, "Betti tables, b1 = dim g/[g,g], Euler characteristic 0", ok);
  }

  // 6. Poincare duality.
  {
    const auto r1 = poincare_duality_check(cp::heisenberg3(), trivial_left(cp::heisenberg3()));
    const auto r2 = poincare_duality_check(cp::favre7(), trivial_left(cp::favre7()));
    h.criterion(6, "Poincare duality for h3 and favre7", r1.holds && r2.holds);
  }

  // 7. Koszul exactness.
  {
    bool ok = true;
    std::string note;
    for (long W = 0; W <= 10; ++W)
      if (!koszul_quotient_exactness(cp::abelian(1), cp::trivial_grading(1), W).exact) {
        ok = false;
        note = "abelian1 at W=" + std::to_string(W);
      }
    const WeightStructure h3f{WeightKind::Filtration, {1, 1, 2}};
    for (long W : {2L, 5L, 8L})
      if (!koszul_quotient_exactness(cp::heisenberg3(), h3f, W).exact) {
        ok = false;
        note = "h3 at W=" + std::to_string(W);
      }
    for (long W : {2L, 4L, 6L}) {
      const auto cert = koszul_quotient_exactness(cp::favre7(), cp::favre7_filtration(), W);
      if (!cert.exact || !cert.weight_monotone) {
        ok = false;
        note = "favre7 at W=" + std::to_string(W);
      }
    }
    h.criterion(7, "augmented Koszul quotients exact (abelian1/h3/favre7)", ok, note);
  }

  // 8. Parallelizability certificates.
  {
    TruncationContext h3ctx(cp::heisenberg3(), cp::h3_grading(), 4);
    const auto c1 = parallelizability_certificate(h3ctx, 2);
    const Poly one = Poly::constant(3, Rational(1));
    bool ok = c1.ok() && c1.phi[0][0] == one && c1.phi[1][1] == one && c1.phi[2][2] == one &&
              c1.phi[0][1].is_zero() && c1.phi[1][0].is_zero() && c1.phi[1][2].is_zero() &&
              c1.phi[2][0].is_zero() && c1.phi[2][1].is_zero() &&
              c1.phi[0][2] == (Poly(3) - Poly::variable(3, 1));
    TruncationContext fctx(cp::favre7(), cp::favre7_filtration(), 9);
    const auto c2 = parallelizability_certificate(fctx, 3);
    ok = ok && c2.ok();
    h.criterion(8, "phi unitriangular (h3 frozen matrix, favre7), partial = delta", ok);
  }

  // 9. de Rham complex and the contracting homotopy.
  {
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
      ok = ok && composite_zero(de_rham_complex(n, 6));
      const auto hc = poincare_homotopy_check(n, 6);
      ok = ok && hc.ok;
    }
    h.criterion(9, "d^2 = 0 and dh + hd = id - eval_0, N <= 4, degree <= 6", ok);
  }

  // 10. Contractibility certificates and obstructions.
  {
    const auto g1 = verify_contraction_family(cp::heisenberg3(), MonomialFamily{{1, 1, 2}});
    const auto g2 = verify_contraction_family(cp::abelian(3), MonomialFamily{{1, 1, 1}});
    const BumpFamily bf{{{Rational(2), Rational(0)}, {Rational(2), Rational(-1)}}};
    const auto g3 = verify_contraction_family(cp::solvable2(), bf);
    const auto diag = diagonal_endomorphism_solve(cp::favre7());
    const bool sl2_evidence =
        killing_nondegenerate(cp::sl2()) && find_positive_grading(cp::sl2()).infeasible_proven;
    h.criterion(10, "graded/bump certificates, favre7 rigidity, sl2 obstruction",
                g1.ok && g2.ok && g3.ok && diag.rigid_identity && sl2_evidence);
  }

  // 11. kappa multiplicativity and pairing orthogonality.
  {
    bool ok = true;
    std::string note;
    std::mt19937_64 rng(20240811);
    for (const auto& [A, Wt, W] : {std::tuple{cp::abelian(1), cp::trivial_grading(1), 8L},
                                   std::tuple{cp::abelian(2), cp::trivial_grading(2), 6L},
                                   std::tuple{cp::abelian(3), cp::trivial_grading(3), 5L},
                                   std::tuple{cp::heisenberg3(), cp::h3_grading(), 6L},
                                   std::tuple{cp::favre7(), cp::favre7_filtration(), 5L}}) {
      const TruncationContext ctx(A, Wt, W);
      const TruncatedHopf H = build_truncated_hopf(ctx);
      const auto& basis = ctx.basis();
      auto random_functional = [&](long wcap) {
        DualFunctional f(A.dim());
        for (int t = 0; t < 3; ++t) {
          const auto& a = basis[rng() % basis.size()];
          if (ctx.weight(a) > wcap) continue;
          f.set(a,
                Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4)));
        }
        return f;
      };
      for (int rep = 0; rep < 100; ++rep) {
        const auto f = random_functional(W / 2), g = random_functional(W / 2);
        if (!(kappa(functional_product(f, g, H)) == kappa(f) * kappa(g))) {
          ok = false;
          note = "kappa multiplicativity on " + A.name();
        }
      }
    }
    for (int reps = 0; reps < 200; ++reps) {
      MultiIndex a(3), b(3);
      for (int i = 0; i < 3; ++i) {
        a[i] = static_cast<int>(rng() % 4);
        b[i] = static_cast<int>(rng() % 4);
      }
      const Rational expect =
          (a == b) ? Rational(mpq_class(mi_factorial(a))) : Rational(0);
      if (dual_pairing(a, Poly::monomial(b)) != expect) {
        ok = false;
        note = "pairing orthogonality";
      }
    }
    h.criterion(11, "kappa multiplicativity (>= 100 pairs each), pairing", ok, note);
  }

  // 12. Hochschild vs Ext dimension columns.
  {
    bool ok = true;
    std::string note;
    for (long W : {1L, 2L}) {
      const TruncationContext ctx(cp::heisenberg3(), cp::h3_grading(), W);
      const TruncatedHopf H = build_truncated_hopf(ctx);
      const auto M = Bimodule::regular(H);
      const auto res = hochschild_ext_compare(H, M, 2);
      if (!res.agree) ok = false;
      std::ostringstream os;
      os << "dim " << H.dim << ": H(" << res.hochschild[0] << "," << res.hochschild[1] << ","
         << res.hochschild[2] << ") Ext(" << res.ext[0] << "," << res.ext[1] << ","
         << res.ext[2] << ")";
      note += (note.empty() ? "" : "; ") + os.str();
    }
    h.criterion(12, "Hochschild/Ext columns agree, U(h3)/J_2 and /J_3, k <= 2", ok, note);
  }

  // 13. Weight sequences, factorial comparison, homogeneous norm.
  {
    bool ok = true;
    for (int n : {1, 2, 3}) {
      const std::vector<int> tw(n, 1);
      ok = ok && validate_weight_sequence(WeightSequence::fact(tw), 8).valid();
      ok = ok && validate_weight_sequence(WeightSequence::ones(tw), 8).valid();
    }
    ok = ok && entire_diagnostics(WeightSequence::ones({1}), Rational(1), 10).divergence_evidence;
    ok = ok &&
         !entire_diagnostics(WeightSequence::fact({1}), Rational(1), 10).divergence_evidence;
    ok = ok && factorial_comparison_check(1, 10).ok && factorial_comparison_check(2, 10).ok;
    std::mt19937_64 rng(0xd11a);
    const std::vector<int> w{1, 1, 2};
    auto small = [&rng]() {
      return Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6));
    };
    for (int s = 0; s < 50; ++s) {
      std::vector<Rational> t(3);
      for (auto& x : t) x = small();
      Rational z = small();
      if (z.is_zero()) z = Rational(3, 2);
      if (!(HomogeneousNorm::of(dilate(t, z, w), w) == HomogeneousNorm::of(t, w).scaled(z)))
        ok = false;
    }
    h.criterion(13, "weight sequences, factorial witness, dilation identity", ok);
  }

  // 14. Solvability predicate.
  {
    const bool ok = analytic_functionals_stably_flat(cp::solvable2()) &&
                    analytic_functionals_stably_flat(cp::heisenberg3()) &&
                    analytic_functionals_stably_flat(cp::favre7()) &&
                    !analytic_functionals_stably_flat(cp::sl2());
    h.criterion(14, "stable flatness of analytic functionals iff solvable", ok);
  }

  std::cout << (h.failed == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(h.failed) + " criterion(s) failed")
            << std::endl;
  return h.failed == 0 ? 0 : 1;
}
