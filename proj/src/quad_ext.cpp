#include "qfib/quad_ext.hpp"

namespace qfib {

QuadElem qe_add(const QuadElem& a, const QuadElem& b) { return {a.u + b.u, a.v + b.v}; }

QuadElem qe_sub(const QuadElem& a, const QuadElem& b) { return {a.u - b.u, a.v - b.v}; }

QuadElem qe_neg(const QuadElem& a) { return {-a.u, -a.v}; }

// (a + b alpha)(c + d alpha) = ac + (ad + bc) alpha + bd (x alpha + s)
QuadElem qe_mul(const QuadElem& a, const QuadElem& b) {
  Poly bd = a.v * b.v;
  Poly u = a.u * b.u + bd * Poly::var(Var::s);
  Poly v = a.u * b.v + a.v * b.u + bd * Poly::var(Var::x);
  return {std::move(u), std::move(v)};
}

QuadElem conj(const QuadElem& e) { return {e.u + e.v * Poly::var(Var::x), -e.v}; }

QuadElem alpha_pow(int n) {
  QuadElem base = QuadElem::alpha();
  if (n < 0) {
    Poly s_inv = Poly::var(Var::s, -1);
    base = {-(Poly::var(Var::x) * s_inv), s_inv};
  }
  unsigned e = n < 0 ? static_cast<unsigned>(-static_cast<long long>(n)) : static_cast<unsigned>(n);
  QuadElem result{Poly(1), Poly(0)};
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Poly trace(const QuadElem& e) { return Poly(2) * e.u + e.v * Poly::var(Var::x); }

}  // namespace qfib
