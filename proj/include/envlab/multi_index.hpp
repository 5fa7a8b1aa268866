#ifndef ENVLAB_MULTI_INDEX_HPP
#define ENVLAB_MULTI_INDEX_HPP

#include <string>
#include <vector>

#include "envlab/rational.hpp"

namespace envlab {

/// PBW exponent vector: e^alpha = e_1^{a_1} ... e_N^{a_N}.
using MultiIndex = std::vector<int>;

long degree_of(const MultiIndex& a);

/// Weighted degree sum(w_i * a_i).
long weight_of(const MultiIndex& a, const std::vector<int>& weights);

/// alpha! = prod a_i!
mpz_class mi_factorial(const MultiIndex& a);

/// Componentwise binomial prod C(a_i, b_i); zero unless b <= a.
mpz_class mi_binomial(const MultiIndex& a, const MultiIndex& b);

MultiIndex mi_unit(int n, int i);
MultiIndex mi_zero(int n);
bool mi_is_zero(const MultiIndex& a);
MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b);

/// Graded-lex order: by weight, ties by lexicographic comparison.
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b,
                     const std::vector<int>& weights);

/// All alpha with weight_of(alpha) <= cutoff, in graded-lex order.
/// Requires strictly positive weights.
std::vector<MultiIndex> enumerate_weighted(const std::vector<int>& weights, long cutoff);

/// All alpha of length n with |alpha| <= cap, lex order within degree.
std::vector<MultiIndex> enumerate_degree(int n, long cap);

/// "1", "e1 e3^2", ...
std::string mi_str(const MultiIndex& a);

}  // namespace envlab

#endif
