#include "envlab/de_rham.hpp"

#include <map>

#include "envlab/ce_complex.hpp"

namespace envlab {

ChainComplex de_rham_complex(int nvars, long degree_cap) {
  ChainComplex C;
  C.cochain_orientation = true;
  const auto monos = enumerate_degree(nvars, degree_cap);
  std::map<MultiIndex, long> mono_index;
  for (std::size_t t = 0; t < monos.size(); ++t) mono_index[monos[t]] = static_cast<long>(t);

  std::vector<std::vector<std::vector<int>>> wedges(nvars + 1);
  std::vector<std::map<std::vector<int>, long>> wedge_index(nvars + 1);
  for (int p = 0; p <= nvars; ++p) {
    wedges[p] = wedge_basis(nvars, p);
    for (std::size_t t = 0; t < wedges[p].size(); ++t)
      wedge_index[p][wedges[p][t]] = static_cast<long>(t);
    C.dims.push_back(static_cast<long>(wedges[p].size() * monos.size()));
  }
  const long M = static_cast<long>(monos.size());

  for (int p = 0; p + 1 <= nvars; ++p) {
    // d^p : C^p -> C^{p+1}, stored transposed for the homology routine.
    SparseMatrix dT(C.dims[p], C.dims[p + 1]);
    for (std::size_t w = 0; w < wedges[p].size(); ++w)
      for (long m = 0; m < M; ++m) {
        const PolyForm src = [&] {
          PolyForm f(nvars, p);
          f.add(monos[m], wedges[p][w], Rational(1));
          return f;
        }();
        const PolyForm img = exterior_derivative(src);
        const long col = static_cast<long>(w) * M + m;
        for (const auto& [k, c] : img.terms()) {
          const auto& [e, I] = k;
          const long row = wedge_index[p + 1].at(I) * M + mono_index.at(e);
          dT.add(col, row, c);
        }
      }
    C.maps.push_back(std::move(dT));
  }
  return C;
}

HomotopyCheck poincare_homotopy_check(int nvars, long degree_cap) {
  HomotopyCheck res{true, 0, {}};
  const auto monos = enumerate_degree(nvars, degree_cap);
  for (int p = 0; p <= nvars; ++p) {
    for (const auto& I : wedge_basis(nvars, p))
      for (const auto& e : monos) {
        PolyForm w(nvars, p);
        w.add(e, I, Rational(1));
        ++res.monomials_checked;
        const PolyForm dd = exterior_derivative(exterior_derivative(w));
        if (!dd.is_zero()) {
          res.ok = false;
          res.failures.push_back("d d != 0 at " + w.str());
          continue;
        }
        if (p == 0) {
          // h(df) = f - f(0): the constant monomial dies, every other
          // monomial comes back unchanged.
          const PolyForm hd = radial_homotopy(exterior_derivative(w));
          PolyForm expect = w;
          if (mi_is_zero(e)) expect -= w;
          if (!(hd == expect)) {
            res.ok = false;
            res.failures.push_back("h d != id - eval_0 at " + w.str());
          }
        } else {
          PolyForm lhs = exterior_derivative(radial_homotopy(w));
          lhs += radial_homotopy(exterior_derivative(w));
          if (!(lhs == w)) {
            res.ok = false;
            res.failures.push_back("d h + h d != id at " + w.str());
          }
        }
      }
  }
  return res;
}

}  // namespace envlab
