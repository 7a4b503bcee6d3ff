// Catalog of identities and conjectures, each expressed as a pair of sides
// whose difference (the residual) is the zero polynomial exactly when the
// instance holds.  Identities with polynomial-fraction coefficients are
// multiplied through by their denominators before the residual is formed.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qfib/poly.hpp"
#include "qfib/poly_matrix.hpp"

namespace qfib {

using Params = std::map<std::string, int, std::less<>>;

struct IntRange {
  int lo = 0;
  int hi = 0;
  bool empty() const { return lo > hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Parses "a..b" (inclusive, negative bounds allowed) or a single integer "a".
IntRange parse_range(std::string_view text);

using ParamGrid = std::map<std::string, IntRange, std::less<>>;

class BadParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownIdentity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonIntegralExponent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotProportional : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (-1)^sign c x^x s^s q^q with exponents given as exact rationals in the
/// parameters.  Fractional bases such as q^{(n+k-1)/2} are allowed as long as
/// the total exponent comes out integral.
struct MonomialTemplate {
  std::function<Rational(const Params&)> sign;
  std::function<Rational(const Params&)> x;
  std::function<Rational(const Params&)> s;
  std::function<Rational(const Params&)> q;
};

/// Builds (-1)^sign x^x s^s q^q; throws NonIntegralExponent on a fractional total.
Poly signed_monomial(const Rational& sign, const Rational& x, const Rational& s, const Rational& q);
Poly instantiate(const MonomialTemplate& t, const Params& p);

/// Determinant/sum side and product/closed-form side of one identity instance.
struct IdentitySides {
  Poly lhs;
  Poly rhs;
  Poly residual() const { return lhs - rhs; }
};

struct IdentityEntry {
  std::string id;
  std::string summary;
  /// Parameter names in display and iteration order.
  std::vector<std::string> params;
  ParamGrid default_grid;
  std::function<bool(const Params&)> in_domain;
  std::function<IdentitySides(const Params&)> build;
  /// Closed-form monomial prefactor, for entries whose printed exponents are fractional.
  std::optional<MonomialTemplate> prefactor;
  bool fit_by_default = false;
};

const std::vector<IdentityEntry>& catalog();
/// Throws UnknownIdentity.
const IdentityEntry& find_entry(std::string_view id);

/// Checks that `p` has exactly the entry's parameters and lies in its domain; throws BadParams.
void check_params(const IdentityEntry& entry, const Params& p);
IdentitySides build_sides(const IdentityEntry& entry, const Params& p);
Poly residual(const IdentityEntry& entry, const Params& p);

/// c * x^d s^b q^a with c = +-1.
struct SignedMonomial {
  int sign = 1;
  Monomial mono;

  Poly to_poly() const { return Poly::monomial(sign, mono); }
  std::string to_string() const;
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

/// The signed monomial m with lhs = m * rhs; throws NotProportional if none exists.
SignedMonomial fit_monomial_correction(const Poly& lhs, const Poly& rhs);

/// Matrix (f(n+i-j, x, q^{ell j} s)^k)_{i,j=0..k} with stride ell (shared by the determinant conjectures).
PolyMatrix strided_power_matrix(int n, int k, int ell);

/// det(f(k+i-j, q^j s)^k)_{i,j=0..k} for k = 1..max_k.
std::vector<Poly> det_table(int max_k);

}  // namespace qfib
