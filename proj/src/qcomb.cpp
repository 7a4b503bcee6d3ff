#include "qfib/qcomb.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qfib/sequences.hpp"

namespace qfib {

PolyFraction PolyFraction::reduced(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("PolyFraction: zero denominator");
  try {
    return {exact_div(num, den), Poly(1)};
  } catch (const NotDivisible&) {
    return {std::move(num), std::move(den)};
  }
}

bool same_value(const PolyFraction& a, const PolyFraction& b) { return a.num * b.den == a.den * b.num; }

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Poly qbinom(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  // row[j] = [i j]_q for the current i.
  std::vector<Poly> row{Poly(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<Poly> next(static_cast<std::size_t>(i) + 1);
    next[0] = 1;
    next[i] = 1;
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j].mul_term(1, Monomial(0, 0, j, 0));
    row = std::move(next);
  }
  return row[k];
}

Poly qbinom_theorem_residual(int n) {
  Poly lhs = 1;
  for (int j = 0; j < n; ++j) lhs *= Poly(1) - Poly::monomial(1, Monomial(0, 0, j, 1));
  Poly rhs;
  for (int k = 0; k <= n; ++k) {
    BigInt sign = k % 2 == 0 ? 1 : -1;
    rhs += qbinom(n, k).mul_term(sign, Monomial(0, 0, k * (k - 1) / 2, k));
  }
  return lhs - rhs;
}

Poly fibonomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("fibonomial: n must be nonnegative");
  if (k < 0 || k > n) return {};
  return fibonomial_ell(n, k, 1);
}

Poly fibonomial_ell(int k, int j, int ell) {
  if (ell < 1) throw std::invalid_argument("fibonomial_ell: ell must be positive");
  if (j < 0 || j > k) return {};
  Poly num = 1;
  Poly den = 1;
  for (int i = 0; i < j; ++i) num *= fib((k - i) * ell);
  for (int i = 1; i <= j; ++i) den *= fib(i * ell);
  return exact_div(num, den);
}

PolyFraction qfibonomial_ell(int m, int j, int ell) {
  if (ell < 1) throw std::invalid_argument("qfibonomial_ell: ell must be positive");
  if (j < 0 || j > m) throw std::invalid_argument("qfibonomial_ell: need 0 <= j <= m");
  Poly num = 1;
  Poly den = 1;
  for (int i = 1; i <= m; ++i) num *= qfib(ell * i);
  for (int i = 1; i <= j; ++i) den *= qfib(ell * i, ell * (j - i));
  for (int i = 1; i <= m - j; ++i) den *= qfib(ell * i, ell * j);
  return PolyFraction::reduced(std::move(num), std::move(den));
}

PolyFraction qfibonomial(int k, int j) { return qfibonomial_ell(k, j, 1); }

PolyFraction fibo_transformed(int k, int j, int n) {
  if (j < 0 || j > k) throw std::invalid_argument("fibo_transformed: need 0 <= j <= k");
  Poly num = 1;
  Poly den = 1;
  for (int i = 1; i <= k; ++i) num *= qfib(i, n - i);
  for (int i = 1; i <= j; ++i) den *= qfib(i, n - j);
  for (int i = 1; i <= k - j; ++i) den *= qfib(i, n - i - j);
  return PolyFraction::reduced(std::move(num), std::move(den));
}

Poly fac(int n, int shift, int ell) {
  Poly r = 1;
  for (int i = 1; i <= n; ++i) r *= qfib(i * ell, shift);
  return r;
}

Poly fac_classical(int n, int ell) {
  Poly r = 1;
  for (int i = 1; i <= n; ++i) r *= fib(i * ell);
  return r;
}

BigInt binom_product(int k) {
  BigInt r = 1;
  for (int j = 0; j <= k; ++j) r *= binomial(k, j);
  return r;
}

}  // namespace qfib
