// Fibonacci, Lucas and Carlitz q-Fibonacci polynomials over all integer
// indices, plus the truncated generating function of f(n, 1, s) as n -> oo.
#pragma once

#include <deque>
#include <shared_mutex>
#include <vector>

#include "qfib/poly.hpp"

namespace qfib {

/// Memo tables for the three recurrences.  Thread-safe; every lookup returns
/// exactly what a from-scratch recomputation would.
class SeqCache {
 public:
  Poly fib(int n);
  Poly lucas(int n);
  Poly qfib(int n);

  /// The process-wide cache used by the free functions below.
  static SeqCache& shared();

 private:
  // Values for n >= 0 and for n = -1, -2, ... respectively.
  struct Table {
    std::deque<Poly> nonneg;
    std::deque<Poly> neg;
  };
  enum class Kind { fib, lucas, qfib };

  Poly lookup(Kind kind, int n);
  void extend(Kind kind, Table& t, int n);
  Table& table(Kind kind);

  std::shared_mutex mutex_;
  Table fib_;
  Table lucas_;
  Table qfib_;
};

/// F_n(x, s): F_0 = 0, F_1 = 1, F_n = x F_{n-1} + s F_{n-2}.
Poly fib(int n);
/// L_n(x, s): L_0 = 2, L_1 = x, same recurrence.  Requires n >= 0.
Poly lucas(int n);
/// f(n, x, q^shift s) with f(n) = x f(n-1) + q^{n-2} s f(n-2), f(0) = 0, f(1) = 1.
Poly qfib(int n, int shift = 0);
/// Sum over k of [n-1-k choose k]_q q^{k^2} x^{n-1-2k} s^k.  Requires n >= 0.
Poly qfib_explicit(int n);
/// (-1)^{n-1} q^{binom(n+1,2)} f(n, x, q^{-n} s) / s^n.  Requires n >= 1.
Poly qfib_neg_closed(int n);
/// q -> 1/q followed by s -> q^{n-1} s.
Poly transform_T(const Poly& p, int n);

/// Sum_{k < order_s} q^{k^2} / ((1-q)...(1-q^k)) s^k, each coefficient taken mod q^order_q.
struct TruncatedSeries {
  int order_s = 0;
  int order_q = 0;
  /// coeffs[k] is the q-polynomial multiplying s^k; all q-exponents in [0, order_q).
  std::vector<Poly> coeffs;

  Poly to_poly() const;
};

TruncatedSeries gf_truncated(int order_s, int order_q);

}  // namespace qfib
