// q-binomial coefficients, (q-)fibonomial coefficients and the factorial-type
// products Fac / fac.
#pragma once

#include "qfib/poly.hpp"

namespace qfib {

/// A quotient num/den kept as a pair when the division is not exact.
/// `den == 1` whenever the quotient is itself a Poly.
struct PolyFraction {
  Poly num;
  Poly den = 1;

  bool is_poly() const { return den == Poly(1); }
  /// Divides through when possible; otherwise returns the pair unchanged.
  static PolyFraction reduced(Poly num, Poly den);

  friend bool operator==(const PolyFraction&, const PolyFraction&) = default;
};

/// True iff a/b == c/d, checked as a*d == b*c.
bool same_value(const PolyFraction& a, const PolyFraction& b);

BigInt binomial(long long n, long long k);

/// Gaussian binomial [n k]_q via [n k] = [n-1 k-1] + q^k [n-1 k]; 0 outside 0 <= k <= n.
Poly qbinom(int n, int k);

/// prod_{j<n} (1 - q^j z) - sum_k (-1)^k q^{binom(k,2)} [n k] z^k.
Poly qbinom_theorem_residual(int n);

/// <n k>(x, s) = prod_{i<k} F_{n-i} / prod_{i=1..k} F_i.
Poly fibonomial(int n, int k);

/// <k j>(x, s, q) = prod_{i=1..k} f(i) / (prod_{i=1..j} f(i, q^{j-i}s) prod_{i=1..k-j} f(i, q^j s)).
PolyFraction qfibonomial(int k, int j);

/// Stride-ell version: f(i) -> f(ell i) with q^{j-i} -> q^{ell(j-i)} and q^j -> q^{ell j}.
PolyFraction qfibonomial_ell(int m, int j, int ell);

/// prod_{i<j} F_{(k-i) ell} / prod_{i=1..j} F_{i ell}.
Poly fibonomial_ell(int k, int j, int ell);

/// The coefficient <k j>(x, q^{n-1}s, q^{-1}) written directly:
/// prod_{i=1..k} f(i, q^{n-i}s) / (prod_{i=1..j} f(i, q^{n-j}s) prod_{i=1..k-j} f(i, q^{n-i-j}s)).
PolyFraction fibo_transformed(int k, int j, int n);

/// fac(n, q^shift s, ell) = f(ell, x, q^shift s) f(2 ell, ...) ... f(n ell, ...).
Poly fac(int n, int shift, int ell);
/// Fac(n, s, ell) = F_ell F_{2 ell} ... F_{n ell}.
Poly fac_classical(int n, int ell);

/// prod_{j=0..k} binom(k, j).
BigInt binom_product(int k);

}  // namespace qfib
