#include "envlab/report.hpp"

#include <algorithm>
#include <random>

#include "envlab/ce_complex.hpp"
#include "envlab/de_rham.hpp"
#include "envlab/dual_poly.hpp"
#include "envlab/hochschild.hpp"
#include "envlab/hopf.hpp"
#include "envlab/koszul.hpp"
#include "envlab/weights.hpp"

namespace envlab {

using json = nlohmann::ordered_json;

const char* const kSuiteNames[] = {"structure", "series",      "hopf",     "cohomology",
                                   "koszul",    "parallelize", "contract", "weights",
                                   "all",       nullptr};

bool suite_known(const std::string& name) {
  for (const char* const* p = kSuiteNames; *p; ++p)
    if (name == *p) return true;
  return false;
}

namespace {

json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json weights_json(const WeightStructure& w) {
  json j;
  j["kind"] = (w.kind == WeightKind::Grading) ? "grading" : "filtration";
  j["values"] = w.weights;
  return j;
}

class SuiteRunner {
 public:
  SuiteRunner(const AlgebraSpec& spec, const SuiteParams& params)
      : A_(spec.algebra), declared_(spec.weights), params_(params) {
    effective_ = declared_;
    if (!effective_) effective_ = lower_central_weights(A_);
    if (effective_) {
      const auto rep = verify_weight_structure(A_, *effective_);
      if (!rep.valid()) effective_.reset();
    }
  }

  void check(const std::string& name, bool ok, json detail = json::object()) {
    json c;
    c["name"] = name;
    c["status"] = ok ? "pass" : "fail";
    c["detail"] = std::move(detail);
    checks_.push_back(std::move(c));
    (ok ? ++report_.passed : ++report_.failed);
  }

  void skip(const std::string& name, const std::string& reason) {
    json c;
    c["name"] = name;
    c["status"] = "skipped";
    c["detail"] = json{{"reason", reason}};
    checks_.push_back(std::move(c));
    ++report_.skipped;
  }

  void info(const std::string& name, json detail) {
    check(name, true, std::move(detail));
  }

  // ---- structure ----------------------------------------------------
  void structure() {
    const auto rep = validate_lie_algebra(A_);
    json detail;
    detail["violations"] = json::array();
    for (const auto& v : rep.violations) detail["violations"].push_back(v.detail);
    check("structure-constants", rep.valid(), detail);

    const RatMatrix B = killing_form(A_);
    json kd;
    kd["matrix"] = matrix_json(B);
    kd["determinant"] = det(B).str();
    kd["nondegenerate"] = killing_nondegenerate(A_);
    info("killing-form", kd);

    if (declared_) {
      const auto wrep = verify_weight_structure(A_, *declared_);
      json wd;
      wd["violations"] = json::array();
      for (const auto& v : wrep.violations)
        wd["violations"].push_back(v.detail + ": " + std::to_string(v.lhs) + " vs " +
                                   std::to_string(v.rhs));
      for (const auto& p : wrep.basis_problems) wd["violations"].push_back(p);
      check("weight-structure", wrep.valid(), wd);
    } else {
      skip("weight-structure", "no weights declared");
    }

    if (const auto lw = lower_central_weights(A_)) {
      json wd;
      wd["weights"] = lw->weights;
      info("lower-central-weights", wd);
    } else if (is_nilpotent(A_)) {
      check("lower-central-weights", false,
            json{{"reason", "basis is not an F-basis for the lower central series"}});
    } else {
      skip("lower-central-weights", "algebra is not nilpotent");
    }
  }

  // ---- series -------------------------------------------------------
  void series() {
    const auto lcs = lower_central_series(A_);
    const auto der = derived_series(A_);
    json ld, dd;
    ld["dims"] = lcs.dims;
    ld["nilpotent"] = lcs.reaches_zero;
    dd["dims"] = der.dims;
    dd["solvable"] = der.reaches_zero;

    auto monotone = [](const std::vector<int>& v) {
      for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
      return true;
    };
    check("lower-central-series", monotone(lcs.dims) &&
                                      lcs.dims.size() <= static_cast<std::size_t>(A_.dim()) + 2,
          ld);
    check("derived-series", monotone(der.dims), dd);
    info("analytic-functionals-stably-flat",
         json{{"stably_flat", analytic_functionals_stably_flat(A_)},
              {"criterion", "solvability"}});
    if (lcs.reaches_zero) {
      check("nilpotent-implies-solvable", der.reaches_zero, {});
      check("nilpotent-killing-zero", killing_form(A_).is_zero(), {});
    }
  }

  // ---- hopf -----------------------------------------------------------
  void hopf() {
    if (!effective_) {
      skip("hopf-axioms", "no valid weight structure available");
      skip("inverse-process", "no valid weight structure available");
      skip("hochschild-ext-compare", "no valid weight structure available");
      return;
    }
    const TruncationContext ctx(A_, *effective_, params_.cutoff);
    const TruncatedHopf H = build_truncated_hopf(ctx);
    const auto rep = verify_hopf_axioms(H);
    json detail;
    detail["dimension"] = H.dim;
    detail["cutoff"] = params_.cutoff;
    detail["axioms"] = json::array();
    for (const auto& e : rep.entries)
      detail["axioms"].push_back(json{{"name", e.name},
                                      {"ok", e.ok},
                                      {"max_violation", e.max_violation.str()}});
    check("hopf-axioms", rep.all_ok(), detail);

    const auto inv = inverse_process_check(H);
    check("inverse-process", inv.ok(),
          json{{"phi_psi_is_identity", inv.phi_psi_left},
               {"psi_phi_is_identity", inv.phi_psi_right},
               {"mu_E_equals_unit_counit", inv.mu_E}});

    // Hochschild vs Ext at a small cutoff (the bar complexes grow fast).
    const long hcut = std::min<long>(params_.cutoff, 2);
    try {
      const TruncationContext hctx(A_, *effective_, hcut);
      const TruncatedHopf Hh = build_truncated_hopf(hctx);
      const auto res = hochschild_ext_compare(Hh, Bimodule::regular(Hh), 2);
      check("hochschild-ext-compare", res.agree,
            json{{"cutoff", hcut},
                 {"hochschild", res.hochschild},
                 {"ext", res.ext}});
    } catch (const SizeCapError& e) {
      skip("hochschild-ext-compare", e.what());
    }
  }

  // ---- cohomology -----------------------------------------------------
  void cohomology() {
    const int N = A_.dim();
    const auto trivialL = ModuleAction::trivial(A_, ModuleAction::Side::Left);
    const auto betti = lie_cohomology_betti(A_, trivialL);
    json bd;
    bd["betti"] = betti;
    long chi = 0;
    int sign = 1;
    for (long b : betti) {
      chi += sign * b;
      sign = -sign;
    }
    bd["euler_characteristic"] = chi;
    check("euler-characteristic-zero", chi == 0 && N >= 1, bd);

    const auto lcs = lower_central_series(A_);
    const long b1_expected = N - lcs.dims[1];
    check("b1-equals-abelianization", betti[1] == b1_expected,
          json{{"b1", betti[1]}, {"dim_g_mod_[g,g]", b1_expected}});

    const auto dual = poincare_duality_check(A_, trivialL);
    check("poincare-duality", dual.holds,
          json{{"cohomology", dual.cohomology},
               {"homology", dual.homology},
               {"nilpotent_simplification", dual.nilpotent_simplification}});
  }

  // ---- koszul ---------------------------------------------------------
  void koszul() {
    if (!effective_ || !is_nilpotent(A_)) {
      skip("koszul-exactness", "requires a nilpotent algebra with weights");
      return;
    }
    const auto cert = koszul_quotient_exactness(A_, *effective_, params_.cutoff);
    json detail;
    detail["cutoff"] = params_.cutoff;
    detail["dims"] = cert.dims;
    detail["augmented_homology"] = cert.homology;
    detail["weight_monotone"] = cert.weight_monotone;
    detail["weight_preserved"] = cert.weight_preserved;
    check("koszul-exactness", cert.exact && cert.weight_monotone, detail);
  }

  // ---- parallelize ----------------------------------------------------
  void parallelize() {
    if (!effective_ || !is_nilpotent(A_)) {
      skip("parallelizability", "requires a nilpotent algebra with weights");
      skip("loc-act", "requires a nilpotent algebra with weights");
      skip("ce-de-rham", "requires a nilpotent algebra with weights");
    } else {
      int maxw = 0;
      for (int w : effective_->weights) maxw = std::max(maxw, w);
      const long W = std::max(params_.cutoff, params_.degree + maxw);
      const TruncationContext ctx(A_, *effective_, W);
      const auto cert = parallelizability_certificate(ctx, params_.degree);
      json detail;
      detail["effective_cutoff"] = W;
      detail["degree"] = params_.degree;
      json rows = json::array();
      for (const auto& r : cert.phi) {
        json row = json::array();
        for (const auto& p : r) row.push_back(p.str());
        rows.push_back(std::move(row));
      }
      detail["phi"] = rows;
      detail["failures"] = cert.failures;
      check("parallelizability", cert.ok(), detail);

      const auto loc = loc_act_check(ctx);
      check("loc-act", loc.ok, json{{"constant_terms", matrix_json(loc.constant_terms)}});

      const auto ce = ce_iso_de_rham_check(ctx, std::min<long>(params_.degree, 2));
      check("ce-de-rham", ce.ok,
            json{{"polynomials_checked", ce.polynomials_checked}, {"failures", ce.failures}});
    }
    const int nv = std::min(A_.dim(), 4);
    const auto hc = poincare_homotopy_check(nv, std::max<long>(params_.degree, 4));
    check("de-rham-homotopy", hc.ok,
          json{{"variables", nv}, {"monomial_forms_checked", hc.monomials_checked}});
  }

  // ---- contract -------------------------------------------------------
  void contract() {
    std::optional<std::vector<int>> grading;
    if (declared_ && declared_->kind == WeightKind::Grading &&
        verify_weight_structure(A_, *declared_).valid())
      grading = declared_->weights;
    if (!grading) {
      const auto found = find_positive_grading(A_);
      if (found.weights)
        grading = found.weights;
      else
        skip("graded-contraction",
             found.infeasible_proven ? "no positive grading exists"
                                     : "no positive grading found within the search bounds");
    }
    if (grading) {
      const auto cert = verify_contraction_family(A_, MonomialFamily{*grading});
      json detail;
      detail["exponents"] = *grading;
      detail["failures"] = cert.failures;
      check("graded-contraction", cert.ok, detail);
    }

    if (params_.bump) {
      json detail;
      const auto cert = verify_contraction_family(A_, *params_.bump);
      detail["failures"] = cert.failures;
      detail["certified"] = cert.checks;
      check("bump-contraction", cert.ok, detail);
    } else {
      skip("bump-contraction", "no bump family supplied (--bump)");
    }

    const auto diag = diagonal_endomorphism_solve(A_);
    json dd;
    dd["description"] = diag.describe();
    dd["family_dimension"] = diag.family_dim;
    dd["rigid_identity"] = diag.rigid_identity;
    dd["triangular"] = diag.triangular;
    info("diagonal-endomorphisms", dd);

    const bool kn = killing_nondegenerate(A_);
    info("killing-obstruction",
         json{{"nondegenerate", kn},
              {"note", kn ? "nondegenerate Killing form: no contracting family can exist"
                          : "Killing form degenerate: no obstruction from this test"}});
  }

  // ---- weights ----------------------------------------------------------
  void weights() {
    // The two named families live over the trivial filtration (the
    // degree-based factorial family is not an F-weight sequence for
    // genuinely weighted bases); the dilation identity uses the
    // algebra's own weights.
    const std::vector<int> trivial(A_.dim(), 1);
    const long wcut = params_.weight_cutoff;
    {
      const auto rep = validate_weight_sequence(WeightSequence::fact(trivial), wcut);
      check("weight-sequence-factorial", rep.valid(),
            json{{"cutoff", wcut}, {"triples_checked", rep.triples_checked}});
    }
    {
      const auto rep = validate_weight_sequence(WeightSequence::ones(trivial), wcut);
      check("weight-sequence-ones", rep.valid(),
            json{{"cutoff", wcut}, {"triples_checked", rep.triples_checked}});
    }
    {
      const auto ones = entire_diagnostics(WeightSequence::ones(trivial), Rational(1), wcut);
      const auto fact = entire_diagnostics(WeightSequence::fact(trivial), Rational(1), wcut);
      json detail;
      auto shells = [](const EntireDiagnostics& d) {
        json rows = json::array();
        for (const auto& r : d.rows)
          rows.push_back(json{{"weight", r.shell_weight},
                              {"shell_sum", r.shell_sum.str()},
                              {"partial_sum", r.partial_sum.str()},
                              {"ratio", r.ratio ? json(r.ratio->str()) : json(nullptr)}});
        return rows;
      };
      detail["ones_r1"] = json{{"divergence_evidence", ones.divergence_evidence},
                               {"shells", shells(ones)},
                               {"known_verdict", "not entire"}};
      detail["factorial_r1"] = json{{"divergence_evidence", fact.divergence_evidence},
                                    {"shells", shells(fact)},
                                    {"known_verdict", "entire"}};
      check("entire-diagnostics", ones.divergence_evidence && !fact.divergence_evidence,
            detail);
    }
    if (!effective_) {
      skip("homogeneous-norm-dilation", "no valid weight structure available");
    } else {
      // Dilation identity on seeded pseudo-random rational samples.
      const auto& w = effective_->weights;
      std::mt19937_64 rng(0x5eed);
      auto small = [&rng]() {
        const long num = static_cast<long>(rng() % 19) - 9;
        const long den = 1 + static_cast<long>(rng() % 7);
        return Rational(num, den);
      };
      bool ok = true;
      const int n = A_.dim();
      for (int s = 0; s < 50; ++s) {
        std::vector<Rational> t(n);
        for (auto& x : t) x = small();
        Rational z = small();
        if (z.is_zero()) z = Rational(2);
        const auto lhs = HomogeneousNorm::of(dilate(t, z, w), w);
        const auto rhs = HomogeneousNorm::of(t, w).scaled(z);
        if (!(lhs == rhs)) ok = false;
      }
      check("homogeneous-norm-dilation", ok, json{{"samples", 50}});
    }
    {
      const long cap = (A_.dim() <= 3) ? std::min<long>(params_.weight_cutoff, 10) : 6;
      const auto rep = factorial_comparison_check(A_.dim(), cap);
      check("factorial-comparison", rep.ok,
            json{{"cutoff", cap},
                 {"checked", rep.checked},
                 {"witness_constant", rep.witness_constant.str()}});
    }
    if (effective_ && effective_->kind == WeightKind::Grading) {
      const GradedSeminorm gs{2, {}};
      const auto rep = validate_graded_seminorm(A_, *effective_, gs, 3);
      check("graded-seminorm", rep.submultiplicative && rep.norm_at_designated,
            json{{"designated_degree", gs.designated_n},
                 {"pairs_checked", rep.pairs_checked},
                 {"violations", rep.violations}});
    } else {
      skip("graded-seminorm", "requires a valid grading");
    }
  }

  Report run(const std::string& suite) {
    if (suite == "structure" || suite == "all") structure();
    if (suite == "series" || suite == "all") series();
    if (suite == "hopf" || suite == "all") hopf();
    if (suite == "cohomology" || suite == "all") cohomology();
    if (suite == "koszul" || suite == "all") koszul();
    if (suite == "parallelize" || suite == "all") parallelize();
    if (suite == "contract" || suite == "all") contract();
    if (suite == "weights" || suite == "all") weights();

    json doc;
    doc["schema"] = "envlab-report-v1";
    json alg;
    alg["name"] = A_.name();
    alg["dim"] = A_.dim();
    alg["declared_weights"] = declared_ ? weights_json(*declared_) : json(nullptr);
    alg["effective_weights"] = effective_ ? weights_json(*effective_) : json(nullptr);
    doc["algebra"] = std::move(alg);
    doc["suite"] = suite;
    doc["parameters"] = json{{"cutoff", params_.cutoff},
                             {"degree", params_.degree},
                             {"weight_cutoff", params_.weight_cutoff}};
    doc["checks"] = std::move(checks_);
    doc["summary"] = json{{"pass", report_.passed},
                          {"fail", report_.failed},
                          {"skipped", report_.skipped}};
    report_.doc = std::move(doc);
    return std::move(report_);
  }

 private:
  const LieAlgebra& A_;
  std::optional<WeightStructure> declared_;
  std::optional<WeightStructure> effective_;
  SuiteParams params_;
  json checks_ = json::array();
  Report report_;
};

}  // namespace

Report run_suite(const AlgebraSpec& spec, const std::string& suite, const SuiteParams& params) {
  if (!suite_known(suite)) throw Error("unknown suite: " + suite);
  SuiteRunner runner(spec, params);
  return runner.run(suite);
}

}  // namespace envlab
