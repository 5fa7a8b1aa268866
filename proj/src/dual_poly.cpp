#include "envlab/dual_poly.hpp"

#include <algorithm>

namespace envlab {

Rational DualFunctional::value(const MultiIndex& a) const {
  const auto it = vals_.find(a);
  return it == vals_.end() ? Rational(0) : it->second;
}

void DualFunctional::set(const MultiIndex& a, const Rational& c) {
  if (c.is_zero())
    vals_.erase(a);
  else
    vals_[a] = c;
  nvars_ = static_cast<int>(a.size());
}

DualFunctional DualFunctional::counit(int nvars) {
  DualFunctional f(nvars);
  f.set(mi_zero(nvars), Rational(1));
  return f;
}

DualFunctional DualFunctional::delta(MultiIndex a) {
  DualFunctional f(static_cast<int>(a.size()));
  f.set(std::move(a), Rational(1));
  return f;
}

Poly kappa(const DualFunctional& f) {
  Poly p(f.nvars());
  for (const auto& [a, c] : f.values()) p.add(a, c);
  return p;
}

DualFunctional kappa_inverse(const Poly& p) {
  DualFunctional f(p.nvars());
  for (const auto& [a, c] : p.terms()) f.set(a, c);
  return f;
}

DualFunctional functional_product(const DualFunctional& f, const DualFunctional& g,
                                  const TruncatedHopf& H) {
  const auto& ctx = H.ctx;
  const int n = ctx.algebra().dim();
  long max_support = 0;
  for (const auto& [a, c] : f.values()) {
    (void)c;
    max_support = std::max(max_support, ctx.weight(a));
  }
  for (const auto& [a, c] : g.values()) {
    (void)c;
    max_support = std::max(max_support, ctx.weight(a));
  }
  if (max_support > ctx.cutoff())
    throw CutoffError("functional_product: support exceeds the truncation window");

  // (f*g)(e_gamma) = (f ox g)(Delta e_gamma), read through the plain
  // tensors: Delta e^gamma = sum D_(a,b) e^a ox e^b and
  // f(e^a) = a! f(e_a).
  DualFunctional out(n);
  for (long gi = 0; gi < ctx.dim(); ++gi) {
    const MultiIndex& gamma = ctx.basis()[gi];
    Rational acc;
    for (const auto& [pq, v] : H.comul[gi]) {
      const MultiIndex& a = ctx.basis()[pq.first];
      const MultiIndex& b = ctx.basis()[pq.second];
      const Rational fa = f.value(a), gb = g.value(b);
      if (fa.is_zero() || gb.is_zero()) continue;
      // v carries gamma!/(a! b!); the divided-basis evaluation needs
      // v * a! b! / gamma!.
      const Rational scale{mpq_class(mi_factorial(a) * mi_factorial(b), mi_factorial(gamma))};
      acc += v * scale * fa * gb;
    }
    if (!acc.is_zero()) out.set(gamma, acc);
  }
  return out;
}

Rational dual_pairing(const MultiIndex& alpha, const Poly& psi) {
  return Rational(mpq_class(mi_factorial(alpha))) * psi.coeff(alpha);
}

Poly dual_generator_action(const TruncationContext& ctx, int i, const Poly& a) {
  const int n = ctx.algebra().dim();
  if (a.nvars() != n) throw Error("dual_generator_action: variable count mismatch");
  Poly out(n);
  long max_w = 0;
  for (const auto& [g, c] : a.terms()) {
    (void)c;
    max_w = std::max(max_w, weight_of(g, ctx.weights()));
  }
  const long budget = max_w - ctx.weights()[i];
  if (budget < 0) return out;
  // coefficient at alpha: (1/alpha!) sum_gamma [e^alpha e_i]_gamma gamma! a_gamma
  for (const auto& alpha : enumerate_weighted(ctx.weights(), budget)) {
    const UElement prod = ctx.pbw().mul_generator(alpha, i);
    Rational acc;
    for (const auto& [gamma, u] : prod.terms()) {
      const Rational ag = a.coeff(gamma);
      if (ag.is_zero()) continue;
      acc += u * Rational(mpq_class(mi_factorial(gamma))) * ag;
    }
    if (!acc.is_zero()) out.add(alpha, acc / Rational(mpq_class(mi_factorial(alpha))));
  }
  return out;
}

namespace {

std::vector<std::vector<Poly>> invert_unitriangular(const std::vector<std::vector<Poly>>& phi,
                                                    int n, int nvars) {
  // phi = I + Nil with Nil strictly upper triangular, so the inverse is
  // the finite alternating Neumann sum.
  std::vector<std::vector<Poly>> nil(n, std::vector<Poly>(n, Poly(nvars)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      nil[i][j] = phi[i][j];
      if (i == j) nil[i][j] -= Poly::constant(nvars, Rational(1));
    }
  std::vector<std::vector<Poly>> inv(n, std::vector<Poly>(n, Poly(nvars)));
  for (int i = 0; i < n; ++i) inv[i][i] = Poly::constant(nvars, Rational(1));
  std::vector<std::vector<Poly>> power = nil;
  int sign = -1;
  for (int k = 1; k < n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Poly t = power[i][j];
        t *= Rational(sign);
        inv[i][j] += t;
      }
    // next power
    std::vector<std::vector<Poly>> nxt(n, std::vector<Poly>(n, Poly(nvars)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k2 = 0; k2 < n; ++k2)
          if (!power[i][k2].is_zero() && !nil[k2][j].is_zero())
            nxt[i][j] += power[i][k2] * nil[k2][j];
    power = std::move(nxt);
    sign = -sign;
  }
  return inv;
}

}  // namespace

ParallelizabilityCertificate parallelizability_certificate(const TruncationContext& ctx,
                                                           long degree_bound) {
  const LieAlgebra& A = ctx.algebra();
  const int n = A.dim();
  if (!is_nilpotent(A))
    throw Error("parallelizability_certificate: algebra must be nilpotent");
  if (ctx.cutoff() < degree_bound + ctx.max_generator_weight())
    throw CutoffError("parallelizability_certificate: cutoff below D + max weight");

  ParallelizabilityCertificate cert;
  cert.unitriangular = true;
  cert.phi.assign(n, std::vector<Poly>(n, Poly(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Poly full = dual_generator_action(ctx, i, Poly::variable(n, j));
      cert.phi[i][j] = full.truncate_degree(degree_bound);
      if (i > j && !cert.phi[i][j].is_zero()) {
        cert.unitriangular = false;
        cert.failures.push_back("phi_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                " below the diagonal is nonzero");
      }
      if (i == j && !(cert.phi[i][j] == Poly::constant(n, Rational(1)))) {
        cert.unitriangular = false;
        cert.failures.push_back("phi_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                " != 1 on the diagonal");
      }
    }
  if (!cert.unitriangular) {
    cert.partial_identity = false;
    return cert;
  }
  cert.phi_inv = invert_unitriangular(cert.phi, n, n);
  // d_i(z_j) = sum_k (phi^{-1})_ik (e_k . z_j) must be delta_ij.
  cert.partial_identity = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly acc(n);
      for (int k = 0; k < n; ++k)
        if (!cert.phi_inv[i][k].is_zero() && !cert.phi[k][j].is_zero())
          acc += cert.phi_inv[i][k] * cert.phi[k][j];
      const Poly expect =
          (i == j) ? Poly::constant(n, Rational(1)) : Poly(n);
      if (!(acc.truncate_degree(degree_bound) == expect)) {
        cert.partial_identity = false;
        cert.failures.push_back("partial_" + std::to_string(i + 1) + "(z" +
                                std::to_string(j + 1) + ") != delta");
      }
    }
  return cert;
}

LocActCertificate loc_act_check(const TruncationContext& ctx) {
  const int n = ctx.algebra().dim();
  LocActCertificate cert{true, RatMatrix(n, n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Poly act = dual_generator_action(ctx, i, Poly::variable(n, j));
      cert.constant_terms.at(i, j) = act.constant_term();
      if (cert.constant_terms.at(i, j) != Rational(i == j ? 1 : 0)) cert.ok = false;
    }
  return cert;
}

CeDeRhamCertificate ce_iso_de_rham_check(const TruncationContext& ctx, long degree_bound) {
  const int n = ctx.algebra().dim();
  // Exact phi entries: truncated ones would shed high-degree terms that
  // the left-hand side keeps.
  std::vector<std::vector<Poly>> phi(n, std::vector<Poly>(n, Poly(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      phi[i][j] = dual_generator_action(ctx, i, Poly::variable(n, j));
  CeDeRhamCertificate out{true, 0, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i > j && !phi[i][j].is_zero()) out.ok = false;
      if (i == j && !(phi[i][j] == Poly::constant(n, Rational(1)))) out.ok = false;
    }
  if (!out.ok) {
    out.failures.push_back("phi is not unitriangular");
    return out;
  }
  for (const auto& mono : enumerate_degree(n, degree_bound)) {
    const Poly a = Poly::monomial(mono);
    ++out.polynomials_checked;
    for (int i = 0; i < n; ++i) {
      const Poly lhs = dual_generator_action(ctx, i, a);
      Poly rhs(n);
      for (int j = 0; j < n; ++j) {
        const Poly da = a.partial(j);
        if (!da.is_zero() && !phi[i][j].is_zero()) rhs += phi[i][j] * da;
      }
      if (!(lhs == rhs)) {
        out.ok = false;
        out.failures.push_back("coboundary mismatch at e" + std::to_string(i + 1) + " . " +
                               a.str());
      }
    }
  }
  return out;
}

}  // namespace envlab
