#include "envlab/hopf.hpp"

#include <array>

namespace envlab {

namespace {

void tadd(Tensor1& t, long i, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = t.emplace(i, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
  }
}

void tadd(Tensor2& t, long i, long j, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = t.emplace(std::make_pair(i, j), v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
  }
}

void tadd(Tensor3& t, long i, long j, long k, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = t.emplace(std::array<long, 3>{i, j, k}, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
  }
}

Rational max_abs(const Rational& a, const Rational& b) {
  const Rational bb = b.abs();
  return a < bb ? bb : a;
}

template <typename T>
Rational tensor_diff(const T& a, const T& b) {
  Rational m;
  T d = a;
  for (const auto& [k, v] : b) {
    auto it = d.find(k);
    if (it == d.end())
      d.emplace(k, -v);
    else {
      it->second -= v;
      if (it->second.is_zero()) d.erase(it);
    }
  }
  for (const auto& [k, v] : d) {
    (void)k;
    m = max_abs(m, v);
  }
  return m;
}

}  // namespace

Tensor1 TruncatedHopf::mul_apply(const Tensor1& x, const Tensor1& y) const {
  Tensor1 out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      const Rational f = ca * cb;
      for (const auto& [c, v] : mul[a][b]) tadd(out, c, f * v);
    }
  return out;
}

Tensor2 TruncatedHopf::comul_apply(const Tensor1& x) const {
  Tensor2 out;
  for (const auto& [a, ca] : x)
    for (const auto& [pq, v] : comul[a]) tadd(out, pq.first, pq.second, ca * v);
  return out;
}

Tensor1 TruncatedHopf::antipode_apply(const Tensor1& x) const {
  Tensor1 out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, v] : antipode[a]) tadd(out, b, ca * v);
  return out;
}

Rational TruncatedHopf::counit_apply(const Tensor1& x) const {
  Rational r;
  for (const auto& [a, ca] : x) r += ca * counit[a];
  return r;
}

Tensor2 TruncatedHopf::truncate_square(const Tensor2& t) const {
  Tensor2 out;
  for (const auto& [pq, v] : t)
    if (weight_of_index(pq.first) + weight_of_index(pq.second) <= ctx.cutoff())
      out.emplace(pq, v);
  return out;
}

TruncatedHopf build_truncated_hopf(const TruncationContext& ctx) {
  TruncatedHopf H{ctx, ctx.dim(), 0, {}, {}, {}, {}};
  const long d = H.dim;
  H.unit_index = ctx.index_of(mi_zero(ctx.algebra().dim()));
  if (H.unit_index < 0) throw Error("build_truncated_hopf: empty quotient");

  H.mul.assign(d, std::vector<Tensor1>(d));
  for (long a = 0; a < d; ++a)
    for (long b = 0; b < d; ++b) {
      const UElement prod = ctx.reduce(ctx.pbw().product(
          UElement::monomial(ctx.basis()[a]), UElement::monomial(ctx.basis()[b])));
      for (const auto& [g, c] : prod.terms()) H.mul[a][b][ctx.index_of(g)] = c;
    }

  // Splitting with binomial coefficients: the plain-basis form of the
  // divided-power formula. Both legs stay below the cutoff since their
  // weights sum to w(gamma).
  H.comul.assign(d, {});
  const int n = ctx.algebra().dim();
  for (long g = 0; g < d; ++g) {
    const MultiIndex& gamma = ctx.basis()[g];
    MultiIndex a = mi_zero(n);
    while (true) {
      MultiIndex b(n);
      for (int i = 0; i < n; ++i) b[i] = gamma[i] - a[i];
      const Rational coeff{mpq_class(mi_binomial(gamma, a))};
      H.comul[g][{ctx.index_of(a), ctx.index_of(b)}] = coeff;
      int i = 0;
      while (i < n && a[i] == gamma[i]) a[i++] = 0;
      if (i == n) break;
      ++a[i];
    }
  }

  H.counit.assign(d, Rational(0));
  H.counit[H.unit_index] = Rational(1);

  H.antipode.assign(d, {});
  for (long a = 0; a < d; ++a) {
    const UElement s = ctx.reduce(ctx.pbw().antipode(ctx.basis()[a]));
    for (const auto& [g, c] : s.terms()) H.antipode[a][ctx.index_of(g)] = c;
  }
  return H;
}

bool AxiomReport::all_ok() const {
  for (const auto& e : entries)
    if (!e.ok) return false;
  return true;
}

AxiomReport verify_hopf_axioms(const TruncatedHopf& H) {
  const long d = H.dim;
  AxiomReport rep;
  auto push = [&rep](const std::string& name, const Rational& maxv) {
    rep.entries.push_back({name, maxv.is_zero(), maxv});
  };

  // 1: associativity
  {
    Rational m;
    for (long a = 0; a < d; ++a)
      for (long b = 0; b < d; ++b) {
        const Tensor1& ab = H.mul[a][b];
        for (long c = 0; c < d; ++c) {
          Tensor1 lhs;
          for (const auto& [x, v] : ab)
            for (const auto& [y, w] : H.mul[x][c]) tadd(lhs, y, v * w);
          Tensor1 rhs;
          for (const auto& [x, v] : H.mul[b][c])
            for (const auto& [y, w] : H.mul[a][x]) tadd(rhs, y, v * w);
          m = max_abs(m, tensor_diff(lhs, rhs));
        }
      }
    push("associativity", m);
  }
  // 2: unit
  {
    Rational m;
    for (long a = 0; a < d; ++a) {
      Tensor1 ea{{a, Rational(1)}};
      m = max_abs(m, tensor_diff(H.mul[H.unit_index][a], ea));
      m = max_abs(m, tensor_diff(H.mul[a][H.unit_index], ea));
    }
    push("unit", m);
  }
  // 3: coassociativity
  {
    Rational m;
    for (long a = 0; a < d; ++a) {
      Tensor3 lhs, rhs;
      for (const auto& [pq, v] : H.comul[a]) {
        for (const auto& [rs, w] : H.comul[pq.first]) tadd(lhs, rs.first, rs.second, pq.second, v * w);
        for (const auto& [rs, w] : H.comul[pq.second]) tadd(rhs, pq.first, rs.first, rs.second, v * w);
      }
      m = max_abs(m, tensor_diff(lhs, rhs));
    }
    push("coassociativity", m);
  }
  // 4: counit
  {
    Rational m;
    for (long a = 0; a < d; ++a) {
      Tensor1 left, right, ea{{a, Rational(1)}};
      for (const auto& [pq, v] : H.comul[a]) {
        tadd(left, pq.second, v * H.counit[pq.first]);
        tadd(right, pq.first, v * H.counit[pq.second]);
      }
      m = max_abs(m, tensor_diff(left, ea));
      m = max_abs(m, tensor_diff(right, ea));
    }
    push("counit", m);
  }
  // 5: comultiplication is an algebra map into the truncated square
  {
    Rational m;
    for (long a = 0; a < d; ++a)
      for (long b = 0; b < d; ++b) {
        Tensor1 ab;
        for (const auto& [c, v] : H.mul[a][b]) tadd(ab, c, v);
        const Tensor2 lhs = H.truncate_square(H.comul_apply(ab));
        Tensor2 rhs;
        for (const auto& [pq, v] : H.comul[a])
          for (const auto& [rs, w] : H.comul[b]) {
            const Rational f = v * w;
            for (const auto& [x, cx] : H.mul[pq.first][rs.first])
              for (const auto& [y, cy] : H.mul[pq.second][rs.second])
                tadd(rhs, x, y, f * cx * cy);
          }
        m = max_abs(m, tensor_diff(lhs, H.truncate_square(rhs)));
      }
    // Delta(1) = 1 ox 1
    Tensor2 one{{{H.unit_index, H.unit_index}, Rational(1)}};
    m = max_abs(m, tensor_diff(H.comul[H.unit_index], one));
    push("comultiplication algebra map", m);
  }
  // 6: counit is an algebra map
  {
    Rational m;
    for (long a = 0; a < d; ++a)
      for (long b = 0; b < d; ++b) {
        Rational lhs;
        for (const auto& [c, v] : H.mul[a][b]) lhs += v * H.counit[c];
        m = max_abs(m, Rational((lhs - H.counit[a] * H.counit[b])).abs());
      }
    m = max_abs(m, (H.counit[H.unit_index] - Rational(1)).abs());
    push("counit algebra map", m);
  }
  // 7: antipode axiom
  {
    Rational m;
    for (long a = 0; a < d; ++a) {
      Tensor1 left, right, target;
      tadd(target, H.unit_index, H.counit[a]);
      for (const auto& [pq, v] : H.comul[a]) {
        for (const auto& [s, cs] : H.antipode[pq.first])
          for (const auto& [y, w] : H.mul[s][pq.second]) tadd(left, y, v * cs * w);
        for (const auto& [s, cs] : H.antipode[pq.second])
          for (const auto& [y, w] : H.mul[pq.first][s]) tadd(right, y, v * cs * w);
      }
      m = max_abs(m, tensor_diff(left, target));
      m = max_abs(m, tensor_diff(right, target));
    }
    push("antipode", m);
  }
  // extras: cocommutativity, S^2 = id, weight additivity of the splitting
  {
    Rational m;
    for (long a = 0; a < d; ++a) {
      Tensor2 flip;
      for (const auto& [pq, v] : H.comul[a]) tadd(flip, pq.second, pq.first, v);
      m = max_abs(m, tensor_diff(H.comul[a], flip));
    }
    push("cocommutativity", m);
  }
  {
    Rational m;
    for (long a = 0; a < d; ++a) {
      Tensor1 ssa = H.antipode_apply(H.antipode[a]);
      Tensor1 ea{{a, Rational(1)}};
      m = max_abs(m, tensor_diff(ssa, ea));
    }
    push("antipode involutive", m);
  }
  {
    // Each splitting term satisfies w(p) + w(q) = w(a) on the nose.
    Rational m;
    for (long a = 0; a < d; ++a)
      for (const auto& [pq, v] : H.comul[a]) {
        (void)v;
        if (H.weight_of_index(pq.first) + H.weight_of_index(pq.second) !=
            H.weight_of_index(a))
          m = max_abs(m, Rational(1));
      }
    push("comultiplication weight additivity", m);
  }
  return rep;
}

SparseMatrix phi_matrix(const TruncatedHopf& H) {
  const long d = H.dim;
  SparseMatrix P(d * d, d * d);
  for (long a = 0; a < d; ++a)
    for (long b = 0; b < d; ++b)
      for (const auto& [pq, v] : H.comul[b])
        for (const auto& [m, w] : H.mul[a][pq.first])
          P.add(m * d + pq.second, a * d + b, v * w);
  return P;
}

SparseMatrix psi_matrix(const TruncatedHopf& H) {
  const long d = H.dim;
  SparseMatrix P(d * d, d * d);
  for (long a = 0; a < d; ++a)
    for (long b = 0; b < d; ++b)
      for (const auto& [pq, v] : H.comul[b])
        for (const auto& [s, cs] : H.antipode[pq.first])
          for (const auto& [m, w] : H.mul[a][s])
            P.add(m * d + pq.second, a * d + b, v * cs * w);
  return P;
}

InverseProcessReport inverse_process_check(const TruncatedHopf& H) {
  InverseProcessReport rep{};
  const SparseMatrix phi = phi_matrix(H), psi = psi_matrix(H);
  rep.phi_psi_left = phi.mul(psi).is_identity();
  rep.phi_psi_right = psi.mul(phi).is_identity();
  rep.mu_E = true;
  for (long a = 0; a < H.dim; ++a) {
    Tensor1 muE, target;
    for (const auto& [pq, v] : H.comul[a])
      for (const auto& [s, cs] : H.antipode[pq.second])
        for (const auto& [y, w] : H.mul[pq.first][s]) tadd(muE, y, v * cs * w);
    tadd(target, H.unit_index, H.counit[a]);
    if (!tensor_diff(muE, target).is_zero()) rep.mu_E = false;
  }
  return rep;
}

}  // namespace envlab
