#include "qfib/sequences.hpp"

#include <mutex>
#include <stdexcept>

#include "qfib/qcomb.hpp"

namespace qfib {

SeqCache& SeqCache::shared() {
  static SeqCache cache;
  return cache;
}

SeqCache::Table& SeqCache::table(Kind kind) {
  switch (kind) {
    case Kind::fib: return fib_;
    case Kind::lucas: return lucas_;
    case Kind::qfib: return qfib_;
  }
  return fib_;
}

Poly SeqCache::fib(int n) { return lookup(Kind::fib, n); }

Poly SeqCache::lucas(int n) {
  if (n < 0) throw std::invalid_argument("lucas: index must be nonnegative");
  return lookup(Kind::lucas, n);
}

Poly SeqCache::qfib(int n) { return lookup(Kind::qfib, n); }

Poly SeqCache::lookup(Kind kind, int n) {
  {
    std::shared_lock lock(mutex_);
    const Table& t = table(kind);
    if (n >= 0 && static_cast<std::size_t>(n) < t.nonneg.size()) return t.nonneg[n];
    if (n < 0 && static_cast<std::size_t>(-n) <= t.neg.size()) return t.neg[-n - 1];
  }
  std::unique_lock lock(mutex_);
  Table& t = table(kind);
  extend(kind, t, n);
  return n >= 0 ? t.nonneg[n] : t.neg[-n - 1];
}

void SeqCache::extend(Kind kind, Table& t, int n) {
  const Poly x = Poly::var(Var::x);
  // Coefficient of v(m-2) in v(m) = x v(m-1) + c(m) v(m-2).
  auto step_coeff = [&](int m) {
    if (kind == Kind::qfib) return Poly::monomial(1, Monomial(0, 1, m - 2, 0));
    return Poly::var(Var::s);
  };
  if (t.nonneg.empty()) {
    t.nonneg.push_back(kind == Kind::lucas ? Poly(2) : Poly(0));
    t.nonneg.push_back(kind == Kind::lucas ? x : Poly(1));
  }
  auto at = [&](int m) -> const Poly& { return m >= 0 ? t.nonneg[m] : t.neg[-m - 1]; };

  while (n >= 0 && static_cast<std::size_t>(n) >= t.nonneg.size()) {
    int m = static_cast<int>(t.nonneg.size());
    t.nonneg.push_back(x * at(m - 1) + step_coeff(m) * at(m - 2));
  }
  while (n < 0 && static_cast<std::size_t>(-n) > t.neg.size()) {
    // Solve v(m) = x v(m-1) + c(m) v(m-2) for v(m-2), with m-2 the next negative index.
    int m = 1 - static_cast<int>(t.neg.size());
    Monomial inverse = kind == Kind::qfib ? Monomial(0, -1, 2 - m, 0) : Monomial(0, -1, 0, 0);
    t.neg.push_back((at(m) - x * at(m - 1)).mul_term(1, inverse));
  }
}

Poly fib(int n) { return SeqCache::shared().fib(n); }

Poly lucas(int n) { return SeqCache::shared().lucas(n); }

Poly qfib(int n, int shift) { return subst_s_scale(SeqCache::shared().qfib(n), shift); }

Poly qfib_explicit(int n) {
  if (n < 0) throw std::invalid_argument("qfib_explicit: index must be nonnegative");
  Poly sum;
  for (int k = 0; 2 * k <= n - 1; ++k) {
    sum += qbinom(n - 1 - k, k).mul_term(1, Monomial(n - 1 - 2 * k, k, k * k, 0));
  }
  return sum;
}

Poly qfib_neg_closed(int n) {
  if (n < 1) throw std::invalid_argument("qfib_neg_closed: index must be positive");
  BigInt sign = (n - 1) % 2 == 0 ? 1 : -1;
  return qfib(n, -n).mul_term(sign, Monomial(0, -n, n * (n + 1) / 2, 0));
}

Poly transform_T(const Poly& p, int n) { return subst_s_scale(subst_q_invert(p), n - 1); }

Poly TruncatedSeries::to_poly() const {
  Poly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out += coeffs[k].mul_term(1, Monomial(0, static_cast<std::int32_t>(k), 0, 0));
  }
  return out;
}

TruncatedSeries gf_truncated(int order_s, int order_q) {
  if (order_s < 1 || order_q < 1) throw std::invalid_argument("gf_truncated: orders must be positive");
  TruncatedSeries series{order_s, order_q, {}};
  // Dense q-series of 1/((1-q)...(1-q^k)), grown one factor at a time.
  std::vector<BigInt> inv(static_cast<std::size_t>(order_q), BigInt(0));
  inv[0] = 1;
  for (int k = 0; k < order_s; ++k) {
    if (k > 0) {
      // Multiply by 1/(1 - q^k) = 1 + q^k + q^{2k} + ...
      for (int e = k; e < order_q; ++e) inv[e] += inv[e - k];
    }
    std::vector<Term> terms;
    for (int e = 0; e + k * k < order_q; ++e) {
      if (inv[e] != 0) terms.push_back({Monomial(0, 0, e + k * k, 0), inv[e]});
    }
    series.coeffs.push_back(Poly::from_terms(std::move(terms)));
  }
  return series;
}

}  // namespace qfib
