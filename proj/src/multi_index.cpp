#include "envlab/multi_index.hpp"

#include <algorithm>

namespace envlab {

long degree_of(const MultiIndex& a) {
  long d = 0;
  for (int x : a) d += x;
  return d;
}

long weight_of(const MultiIndex& a, const std::vector<int>& weights) {
  if (a.size() != weights.size()) throw Error("weight_of: length mismatch");
  long w = 0;
  for (std::size_t i = 0; i < a.size(); ++i) w += static_cast<long>(a[i]) * weights[i];
  return w;
}

mpz_class mi_factorial(const MultiIndex& a) {
  mpz_class r = 1;
  for (int x : a) r *= factorial(static_cast<unsigned long>(x));
  return r;
}

mpz_class mi_binomial(const MultiIndex& a, const MultiIndex& b) {
  mpz_class r = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a[i]),
                 static_cast<unsigned long>(b[i]));
    r *= c;
  }
  return r;
}

MultiIndex mi_unit(int n, int i) {
  MultiIndex a(n, 0);
  a[i] = 1;
  return a;
}

MultiIndex mi_zero(int n) { return MultiIndex(n, 0); }

bool mi_is_zero(const MultiIndex& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b,
                     const std::vector<int>& weights) {
  const long wa = weight_of(a, weights), wb = weight_of(b, weights);
  if (wa != wb) return wa < wb;
  return a < b;
}

namespace {
void enumerate_rec(const std::vector<int>& weights, long budget, std::size_t pos,
                   MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos == weights.size()) {
    out.push_back(cur);
    return;
  }
  for (long k = 0; k * weights[pos] <= budget; ++k) {
    cur[pos] = static_cast<int>(k);
    enumerate_rec(weights, budget - k * weights[pos], pos + 1, cur, out);
  }
  cur[pos] = 0;
}
}  // namespace

std::vector<MultiIndex> enumerate_weighted(const std::vector<int>& weights, long cutoff) {
  for (int w : weights)
    if (w <= 0) throw Error("enumerate_weighted: weights must be positive");
  std::vector<MultiIndex> out;
  MultiIndex cur(weights.size(), 0);
  if (cutoff >= 0) enumerate_rec(weights, cutoff, 0, cur, out);
  std::sort(out.begin(), out.end(), [&](const MultiIndex& a, const MultiIndex& b) {
    return graded_lex_less(a, b, weights);
  });
  return out;
}

std::vector<MultiIndex> enumerate_degree(int n, long cap) {
  return enumerate_weighted(std::vector<int>(n, 1), cap);
}

std::string mi_str(const MultiIndex& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += "e" + std::to_string(i + 1);
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace envlab
