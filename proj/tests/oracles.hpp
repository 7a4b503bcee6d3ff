// Independent reference computations used only by the tests.  Nothing here
// calls the library's arithmetic kernels beyond Poly construction.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qfib/poly.hpp"
#include "qfib/poly_matrix.hpp"

namespace oracle {

using qfib::BigInt;
using qfib::Monomial;
using qfib::Poly;
using qfib::PolyMatrix;
using qfib::Rational;
using qfib::Term;

/// Random sparse Laurent polynomials with small coefficients.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Poly operator()(int max_terms = 4, int lo = -2, int hi = 3, int max_coeff = 5, bool use_z = false) {
    std::vector<Term> terms;
    const int count = uniform(0, max_terms);
    for (int t = 0; t < count; ++t) {
      Monomial m(uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), use_z ? uniform(0, 2) : 0);
      int c = 0;
      while (c == 0) c = uniform(-max_coeff, max_coeff);
      terms.push_back({m, BigInt(c)});
    }
    return Poly::from_terms(std::move(terms));
  }

  /// Nonzero rational in [-4, 4] with denominator at most 3.
  Rational nonzero_rational() {
    int num = 0;
    while (num == 0) num = uniform(-4, 4);
    return Rational(num, uniform(1, 3));
  }

 private:
  std::mt19937_64 rng_;
};

/// Schoolbook product through an ordered map of exponent vectors.
inline Poly naive_mul(const Poly& a, const Poly& b) {
  std::map<std::array<std::int32_t, 4>, BigInt> acc;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      std::array<std::int32_t, 4> e{};
      for (std::size_t i = 0; i < 4; ++i) e[i] = s.mono.exp[i] + t.mono.exp[i];
      acc[e] += s.coeff * t.coeff;
    }
  }
  std::vector<Term> terms;
  for (const auto& [e, c] : acc) terms.push_back({Monomial(e[0], e[1], e[2], e[3]), c});
  return Poly::from_terms(std::move(terms));
}

/// Laplace expansion along the first row.
inline Poly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Poly(1);
  if (n == 1) return m(0, 0);
  Poly total;
  for (std::size_t j = 0; j < n; ++j) {
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Poly term = naive_mul(m(0, j), cofactor_det(minor));
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

/// Gaussian elimination over the rationals.
inline Rational rational_det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

inline Rational rpow(const Rational& b, long long e) {
  Rational r = 1;
  const Rational base = e < 0 ? Rational(1) / b : b;
  for (long long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  return r;
}

/// f(n, x, q^shift s) at a numeric point, by the three-term recurrence in
/// either direction.  q = 1 gives the classical F_n(x, s).
inline Rational qfib_at(int n, const Rational& x, const Rational& s, const Rational& q, int shift = 0) {
  const Rational ss = s * rpow(q, shift);
  std::map<int, Rational> v{{0, 0}, {1, 1}};
  for (int m = 2; m <= n; ++m) v[m] = x * v[m - 1] + rpow(q, m - 2) * ss * v[m - 2];
  for (int m = 1; m - 2 >= n; --m) v[m - 2] = (v[m] - x * v[m - 1]) / (rpow(q, m - 2) * ss);
  return v.at(n);
}

inline Rational fib_at(int n, const Rational& x, const Rational& s) { return qfib_at(n, x, s, 1); }

/// Product of factors written "c*m*(p1)*(p2)...", each parenthesized factor in the
/// flat term grammar.  Used to expand printed factored forms.
inline Poly factored(const std::string& text) {
  Poly acc(1);
  std::size_t depth = 0, start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : '*';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c != '*' || depth != 0) continue;
    std::string f = text.substr(start, i - start);
    if (!f.empty() && f.front() == '(') f = f.substr(1, f.size() - 2);
    acc = naive_mul(acc, qfib::parse(f));
    start = i + 1;
  }
  return acc;
}

/// Gaussian binomial as the inversion generating function of 0/1 words
/// with k ones and n-k zeros.
inline Poly qbinom_words(int n, int k) {
  if (k < 0 || k > n) return Poly(0);
  std::map<int, BigInt> counts;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    int inversions = 0;
    int ones_seen = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) ++ones_seen;
      else inversions += ones_seen;
    }
    counts[inversions] += 1;
  }
  std::vector<Term> terms;
  for (const auto& [e, c] : counts) terms.push_back({Monomial(0, 0, e, 0), c});
  return Poly::from_terms(std::move(terms));
}

/// Number of partitions of m into parts of size at most k.
inline BigInt partitions_bounded(int m, int k) {
  if (m < 0) return 0;
  std::vector<BigInt> ways(static_cast<std::size_t>(m) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= k; ++part) {
    for (int t = part; t <= m; ++t) ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - part)];
  }
  return ways[static_cast<std::size_t>(m)];
}

inline BigInt choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
