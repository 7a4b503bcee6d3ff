// The quadratic extension R[alpha]/(alpha^2 - x*alpha - s) over the Laurent
// polynomial ring.  alpha and beta = x - alpha are the two roots of
// t^2 = x t + s; beta is never stored, it is conj(alpha).
#pragma once

#include <utility>

#include "qfib/poly.hpp"

namespace qfib {

/// u + v*alpha.
struct QuadElem {
  Poly u;
  Poly v;

  QuadElem() = default;
  QuadElem(Poly u_, Poly v_) : u(std::move(u_)), v(std::move(v_)) {}
  QuadElem(const Poly& base) : u(base) {}  // NOLINT(google-explicit-constructor)

  static QuadElem alpha() { return {Poly(0), Poly(1)}; }
  static QuadElem beta() { return {Poly::var(Var::x), Poly(-1)}; }

  bool is_base() const { return v.is_zero(); }

  friend bool operator==(const QuadElem&, const QuadElem&) = default;
};

QuadElem qe_add(const QuadElem& a, const QuadElem& b);
QuadElem qe_sub(const QuadElem& a, const QuadElem& b);
QuadElem qe_mul(const QuadElem& a, const QuadElem& b);
QuadElem qe_neg(const QuadElem& a);

inline QuadElem operator+(const QuadElem& a, const QuadElem& b) { return qe_add(a, b); }
inline QuadElem operator-(const QuadElem& a, const QuadElem& b) { return qe_sub(a, b); }
inline QuadElem operator*(const QuadElem& a, const QuadElem& b) { return qe_mul(a, b); }
inline QuadElem operator-(const QuadElem& a) { return qe_neg(a); }

/// alpha <-> beta: (u, v) -> (u + v x, -v).
QuadElem conj(const QuadElem& e);

/// alpha^n for any integer n; negative powers use alpha^-1 = (alpha - x)/s.
QuadElem alpha_pow(int n);

/// e + conj(e) = 2u + v x.
Poly trace(const QuadElem& e);

}  // namespace qfib
