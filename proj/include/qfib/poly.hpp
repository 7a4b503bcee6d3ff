// Sparse Laurent polynomials in the four fixed variables x, s, q, z with
// arbitrary-precision integer coefficients.
//
// Terms are kept sorted in canonical order (see Monomial::compare) with no
// stored zero coefficients, so two Polys are equal iff their term vectors are
// identical.  Every value is immutable once built; all operations are pure.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qfib {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Var : std::uint8_t { x = 0, s = 1, q = 2, z = 3 };
inline constexpr std::size_t kNumVars = 4;

/// Thrown by exact_div when the divisor does not divide the dividend.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a negative exponent is evaluated at zero.
class PoleAtZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// x^ex s^es q^eq z^ez with signed (Laurent) exponents.
struct Monomial {
  std::array<std::int32_t, kNumVars> exp{};

  constexpr Monomial() = default;
  constexpr Monomial(std::int32_t ex, std::int32_t es, std::int32_t eq, std::int32_t ez)
      : exp{ex, es, eq, ez} {}

  static constexpr Monomial one() { return {}; }
  static Monomial of(Var v, std::int32_t e = 1) {
    Monomial m;
    m[v] = e;
    return m;
  }

  std::int32_t& operator[](Var v) { return exp[static_cast<std::size_t>(v)]; }
  std::int32_t operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }

  bool is_one() const { return exp == std::array<std::int32_t, kNumVars>{}; }
  std::int64_t total_degree() const {
    return std::int64_t{exp[0]} + exp[1] + exp[2] + exp[3];
  }

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial pow(std::int32_t e) const;

  /// Canonical term order, a lexicographic group order: higher z-degree first,
  /// then higher x-degree, then lower s-degree, then lower q-degree.
  /// Returns <0, 0, >0 when *this precedes, equals, follows `o` in output order.
  static int compare(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Strict "comes first in canonical order" predicate.
struct CanonicalBefore {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) < 0;
  }
};

struct Term {
  Monomial mono;
  BigInt coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

class Poly {
 public:
  Poly() = default;
  Poly(long long c);  // NOLINT(google-explicit-constructor): integers embed in the ring
  Poly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static Poly var(Var v, std::int32_t e = 1);
  static Poly monomial(const BigInt& c, const Monomial& m);
  /// Builds a canonical Poly from arbitrary terms (merges duplicates, drops zeros).
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// The constant coefficient (0 if absent).
  BigInt constant_term() const;
  /// First term in canonical order; requires a nonzero Poly.
  const Term& leading() const;

  bool uses(Var v) const;
  std::int32_t min_exponent(Var v) const;
  std::int32_t max_exponent(Var v) const;
  /// Nonnegative gcd of all coefficients (0 for the zero Poly).
  BigInt content() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly mul_term(const BigInt& c, const Monomial& m) const;

 private:
  std::vector<Term> terms_;
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly pow(const Poly& a, unsigned e);

/// Quotient of an exact division; throws NotDivisible on a nonzero remainder
/// and std::domain_error when `b` is zero.  In a variable where neither a nor
/// b has a negative exponent the quotient must not have one either, so
/// x^2 + s is not divisible by x.
Poly exact_div(const Poly& a, const Poly& b);
/// Like exact_div, but a quotient may use negative exponents even when a and b do not.
Poly laurent_div(const Poly& a, const Poly& b);

/// s -> q^m s.
Poly subst_s_scale(const Poly& p, std::int32_t m);
/// q -> 1/q.
Poly subst_q_invert(const Poly& p);
/// q -> 1.
Poly subst_q_one(const Poly& p);
/// v -> value for an integer value; PoleAtZero for 0 under a negative power.
Poly substitute(const Poly& p, Var v, const BigInt& value);

/// Values for (x, s, q, z), in that order.
using EvalPoint = std::array<Rational, kNumVars>;
Rational eval(const Poly& p, const EvalPoint& at);

/// Drops every term whose s-degree is >= order_s or q-degree >= order_q.
Poly truncate(const Poly& p, std::int32_t order_s, std::int32_t order_q);

std::string to_canonical_string(const Poly& p);
Poly parse(std::string_view text);

/// Sign of `(-1)^e` as a Poly constant.
Poly sign_power(long long e);

}  // namespace qfib
