#include "qfib/identities.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include "qfib/qcomb.hpp"
#include "qfib/sequences.hpp"

namespace qfib {

IntRange parse_range(std::string_view text) {
  auto to_int = [&](std::string_view part) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw std::invalid_argument("bad range '" + std::string(text) + "'");
    }
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    int v = to_int(text);
    return {v, v};
  }
  IntRange r{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  if (r.empty()) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

// ---------------------------------------------------------------------------
// Monomial templates

namespace {

std::int32_t integral_exponent(const Rational& e, const char* what) {
  if (boost::multiprecision::denominator(e) != 1) {
    throw NonIntegralExponent(std::string("non-integral total exponent of ") + what);
  }
  return boost::multiprecision::numerator(e).convert_to<std::int32_t>();
}

}  // namespace

Poly signed_monomial(const Rational& sign, const Rational& x, const Rational& s, const Rational& q) {
  const std::int32_t sg = integral_exponent(sign, "-1");
  Monomial m(integral_exponent(x, "x"), integral_exponent(s, "s"), integral_exponent(q, "q"), 0);
  return Poly::monomial(sg % 2 == 0 ? 1 : -1, m);
}

Poly instantiate(const MonomialTemplate& t, const Params& p) {
  auto eval_or_zero = [&](const std::function<Rational(const Params&)>& fn) {
    return fn ? fn(p) : Rational(0);
  };
  return signed_monomial(eval_or_zero(t.sign), eval_or_zero(t.x), eval_or_zero(t.s), eval_or_zero(t.q));
}

std::string SignedMonomial::to_string() const { return to_canonical_string(to_poly()); }

SignedMonomial fit_monomial_correction(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) throw NotProportional("fit: one side is zero");
  const Term& a = lhs.leading();
  const Term& b = rhs.leading();
  SignedMonomial m;
  if (a.coeff == b.coeff) {
    m.sign = 1;
  } else if (a.coeff == -b.coeff) {
    m.sign = -1;
  } else {
    throw NotProportional("fit: leading coefficients differ by more than a sign");
  }
  m.mono = a.mono / b.mono;
  if (m.mono[Var::z] != 0 || !(lhs == rhs.mul_term(m.sign, m.mono))) {
    throw NotProportional("fit: sides are not proportional by a signed monomial");
  }
  return m;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

int arg(const Params& p, std::string_view name) {
  auto it = p.find(name);
  if (it == p.end()) throw BadParams("missing parameter '" + std::string(name) + "'");
  return it->second;
}

long long binom2(long long n) { return n * (n - 1) / 2; }
long long binom3(long long n) { return n * (n - 1) * (n - 2) / 6; }

Poly mono(const BigInt& c, int ex, int es, int eq) { return Poly::monomial(c, Monomial(ex, es, eq, 0)); }
Poly sgn(long long e) { return sign_power(e); }

Poly det2(const Poly& a, const Poly& b, const Poly& c, const Poly& d) { return det(PolyMatrix{{a, b}, {c, d}}); }

// One term of a recurrence sum: prefactor * coeff * value, with coeff possibly a fraction.
struct SumTerm {
  Poly prefactor;
  PolyFraction coeff;
  Poly value;
};

// Sum of the terms multiplied through by the product of their distinct denominators.
Poly cleared_sum(const std::vector<SumTerm>& terms) {
  std::vector<Poly> dens;
  for (const auto& t : terms) {
    if (!t.coeff.is_poly() && std::find(dens.begin(), dens.end(), t.coeff.den) == dens.end()) {
      dens.push_back(t.coeff.den);
    }
  }
  Poly sum;
  for (const auto& t : terms) {
    Poly cofactor = 1;
    for (const auto& d : dens) {
      if (t.coeff.is_poly() || !(d == t.coeff.den)) cofactor *= d;
    }
    sum += t.prefactor * t.coeff.num * cofactor * t.value;
  }
  return sum;
}

PolyMatrix classical_power_matrix(int n, int k, int ell) {
  const auto dim = static_cast<std::size_t>(k + 1);
  PolyMatrix m(dim, dim);
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          pow(fib(ell * (n + i - j)), static_cast<unsigned>(k));
    }
  }
  return m;
}

Poly at_x_s_one(const Poly& p) { return substitute(substitute(p, Var::x, 1), Var::s, 1); }

// Each builder below instantiates one catalog formula.

IdentitySides power_rec_classical(const Params& p) {
  const int n = arg(p, "n");
  const int k = arg(p, "k");
  Poly sum;
  for (int j = 0; j <= k + 1; ++j) {
    sum += sgn(binom2(j + 1)) * mono(1, 0, static_cast<int>(binom2(j)), 0) * fibonomial(k + 1, j) *
           pow(fib(n - j), static_cast<unsigned>(k));
  }
  return {sum, Poly()};
}

IdentitySides squares_classical(const Params& p) {
  const int n = arg(p, "n");
  auto sq = [&](int m) { return pow(at_x_s_one(fib(m)), 2); };
  return {sq(n) - Poly(2) * sq(n - 1) - Poly(2) * sq(n - 2) + sq(n - 3), Poly()};
}

IdentitySides conj1_f(const Params& p) {
  const int n = arg(p, "n");
  const int k = arg(p, "k");
  std::vector<SumTerm> terms;
  for (int j = 0; j <= k + 1; ++j) {
    const long long qe = static_cast<long long>(j) * (j - 1) * (2 * j - 1) / 6;
    terms.push_back({sgn(binom2(j + 1)) * mono(1, 0, static_cast<int>(binom2(j)), static_cast<int>(qe)),
                     qfibonomial(k + 1, j), pow(qfib(n - j, j), static_cast<unsigned>(k))});
  }
  return {cleared_sum(terms), Poly()};
}

// The q -> 1/q, s -> q^{n-1} s image of conj1_f, written out term by term.
IdentitySides conj1_fibo(const Params& p) {
  const int n = arg(p, "n");
  const int k = arg(p, "k");
  std::vector<SumTerm> terms;
  for (int j = 0; j <= k + 1; ++j) {
    const long long qe = (n - 1) * binom2(j) - static_cast<long long>(j) * (j - 1) * (2 * j - 1) / 6;
    terms.push_back({sgn(binom2(j + 1)) * mono(1, 0, static_cast<int>(binom2(j)), static_cast<int>(qe)),
                     fibo_transformed(k + 1, j, n), pow(qfib(n - j), static_cast<unsigned>(k))});
  }
  return {cleared_sum(terms), Poly()};
}

IdentitySides euler_cassini(const Params& p) {
  const int n = arg(p, "n");
  const int k = arg(p, "k");
  Poly lhs = qfib(k - 1, 1) * qfib(n + k) - qfib(k) * qfib(n + k - 1, 1);
  Poly rhs = sgn(k) * mono(1, 0, k - 1, static_cast<int>(binom2(k))) * qfib(n, k);
  return {lhs, rhs};
}

IdentitySides basis_decomp(const Params& p) {
  const int n = arg(p, "n");
  const int k = arg(p, "k");
  Poly v = sgn(k) * mono(1, 0, k - 1, static_cast<int>(binom2(k)));
  return {v * qfib(n - k, k), qfib(k - 1, 1) * qfib(n) - qfib(k) * qfib(n - 1, 1)};
}

IdentitySides conj2(const Params& p) {
  const int n = arg(p, "n");
  const int k = arg(p, "k");
  const int ell = arg(p, "ell");
  std::vector<SumTerm> terms;
  for (int j = 0; j <= k + 1; ++j) {
    const long long sexp = ell * binom2(j);
    // (q^{((4j+1) ell - 3)/6} s)^{ell binom(j,2)}
    Rational qe = Rational((4 * j + 1) * ell - 3) / 6 * sexp;
    Poly pre = signed_monomial(j + ell * binom2(j), 0, sexp, qe);
    terms.push_back({pre, qfibonomial_ell(k + 1, j, ell), pow(qfib(ell * (n - j), ell * j), static_cast<unsigned>(k))});
  }
  return {cleared_sum(terms), Poly()};
}

IdentitySides threeterm_ell(const Params& p) {
  const int n = arg(p, "n");
  const int ell = arg(p, "ell");
  Poly lhs = qfib(ell, ell) * qfib(ell * n) - qfib(2 * ell) * qfib(ell * (n - 1), ell) +
             sgn(ell) * mono(1, 0, ell, ell * (3 * ell - 1) / 2) * qfib(ell) * qfib(ell * (n - 2), 2 * ell);
  return {lhs, Poly()};
}

IdentitySides threeterm_classical(const Params& p) {
  const int n = arg(p, "n");
  const int ell = arg(p, "ell");
  Poly lhs = fib(ell * n) - lucas(ell) * fib(ell * (n - 1)) + sgn(ell) * mono(1, 0, ell, 0) * fib(ell * (n - 2));
  return {lhs, Poly()};
}

IdentitySides gen_cassini(const Params& p) {
  const int big_n = arg(p, "N");
  const int m = arg(p, "m");
  const int ell = arg(p, "ell");
  Poly lhs = det2(qfib(big_n + (m + 1) * ell), qfib((m + 1) * ell), qfib(big_n + m * ell, ell), qfib(m * ell, ell));
  Poly pre = signed_monomial(m * ell - 1, 0, m * ell, Rational(m * ell * ((m + 2) * ell - 1)) / 2);
  return {lhs, pre * qfib(ell) * qfib(big_n, (m + 1) * ell)};
}

IdentitySides gf_limit(const Params& p) {
  const int k = arg(p, "k");
  const int order_s = arg(p, "order_s");
  const int order_q = arg(p, "order_q");
  const Poly series = gf_truncated(order_s, order_q).to_poly();
  auto scaled = [&](int c) { return truncate(subst_s_scale(series, c), order_s, order_q); };
  auto x_one = [](const Poly& v) { return substitute(v, Var::x, 1); };
  Poly lhs = truncate(x_one(qfib(k - 1, 1)) * series - x_one(qfib(k)) * scaled(1), order_s, order_q);
  Poly rhs = truncate(sgn(k) * mono(1, 0, k - 1, static_cast<int>(binom2(k))) * scaled(k), order_s, order_q);
  return {lhs, rhs};
}

IdentitySides conj2_k2(const Params& p) {
  const int n = arg(p, "n");
  const int ell = arg(p, "ell");
  const int l = ell;
  auto frac = [](Poly a, Poly b) { return PolyFraction::reduced(std::move(a), std::move(b)); };
  std::vector<SumTerm> terms{
      {Poly(1), PolyFraction{Poly(1)}, pow(qfib(l * n), 2)},
      {Poly(-1), frac(qfib(3 * l) * qfib(2 * l), qfib(l, l) * qfib(2 * l, l)), pow(qfib(l * n - l, l), 2)},
      {sgn(l) * mono(1, 0, l, l * (3 * l - 1) / 2), frac(qfib(3 * l) * qfib(l), qfib(l, l) * qfib(l, 2 * l)),
       pow(qfib(l * n - 2 * l, 2 * l), 2)},
      {sgn(l - 1) * mono(1, 0, 3 * l, l * (13 * l - 3) / 2), frac(qfib(l) * qfib(2 * l), qfib(l, 2 * l) * qfib(2 * l, l)),
       pow(qfib(l * n - 3 * l, 3 * l), 2)},
  };
  return {cleared_sum(terms), Poly()};
}

IdentitySides cassini_classical(const Params& p) {
  const int n = arg(p, "n");
  return {det2(fib(n), fib(n - 1), fib(n + 1), fib(n)), sgn(n - 1) * mono(1, 0, n - 1, 0)};
}

IdentitySides det_power_classical(const Params& p) {
  const int n = arg(p, "n");
  const int k = arg(p, "k");
  const long long e = binom2(k + 1) * (n - k);
  Poly rhs = sgn(e) * Poly(binom_product(k)) * mono(1, 0, static_cast<int>(e + 2 * binom3(k + 1)), 0);
  for (int j = 0; j < k; ++j) rhs *= pow(fac_classical(k - j, 1), 2);
  return {det(classical_power_matrix(n, k, 1)), rhs};
}

IdentitySides q_cassini(const Params& p) {
  const int n = arg(p, "n");
  return {det(strided_power_matrix(n, 1, 1)), sgn(n - 1) * mono(1, 0, n - 1, static_cast<int>(binom2(n)))};
}

MonomialTemplate det_sq_q_prefactor() {
  return {
      [](const Params& p) { return Rational(arg(p, "n")); },
      [](const Params&) { return Rational(2); },
      [](const Params& p) { return Rational(3 * arg(p, "n") - 4); },
      [](const Params& p) {
        const int n = arg(p, "n");
        return Rational((n + 1) * (3 * n - 4)) / 2;
      },
  };
}

IdentitySides det_sq_q(const Params& p) {
  return {det(strided_power_matrix(arg(p, "n"), 2, 1)), Poly(2) * instantiate(det_sq_q_prefactor(), p)};
}

// (-1)^{ell binom(k+1,2)(n-k)} (q^{(ell(n+k)-1)/2} s)^{ell(binom(k+1,2)(n-k) + 2 binom(k+1,3))}
MonomialTemplate strided_det_prefactor() {
  auto ell_of = [](const Params& p) {
    auto it = p.find("ell");
    return it == p.end() ? 1 : it->second;
  };
  auto s_exp = [ell_of](const Params& p) {
    const int n = arg(p, "n");
    const int k = arg(p, "k");
    return Rational(ell_of(p) * (binom2(k + 1) * (n - k) + 2 * binom3(k + 1)));
  };
  return {
      [ell_of](const Params& p) {
        const int n = arg(p, "n");
        const int k = arg(p, "k");
        return Rational(ell_of(p) * binom2(k + 1) * (n - k));
      },
      nullptr,
      s_exp,
      [ell_of, s_exp](const Params& p) {
        const int n = arg(p, "n");
        const int k = arg(p, "k");
        return Rational(ell_of(p) * (n + k) - 1) / 2 * s_exp(p);
      },
  };
}

IdentitySides strided_det_conjecture(const Params& p, int ell) {
  const int n = arg(p, "n");
  const int k = arg(p, "k");
  Poly rhs = Poly(binom_product(k)) * instantiate(strided_det_prefactor(), p);
  for (int j = 0; j < k; ++j) rhs *= fac(k - j, ell * j, ell) * fac(k - j, ell * (n + j), ell);
  return {det(strided_power_matrix(n, k, ell)), rhs};
}

IdentitySides conj3(const Params& p) { return strided_det_conjecture(p, 1); }

IdentitySides conj4(const Params& p) { return strided_det_conjecture(p, arg(p, "ell")); }

IdentitySides conj4_k1(const Params& p) {
  const int n = arg(p, "n");
  const int l = arg(p, "ell");
  const int e = (n - 1) * l;
  Poly pre = signed_monomial(e, 0, e, Rational(l * (n + 1) - 1) / 2 * e);
  return {det(strided_power_matrix(n, 1, l)), pre * qfib(l) * qfib(l, n * l)};
}

IdentitySides conj4_k2(const Params& p) {
  const int n = arg(p, "n");
  const int l = arg(p, "ell");
  const int e = l * (3 * n - 4);
  Poly pre = Poly(2) * signed_monomial(n * l, 0, e, Rational(l * (n + 2) - 1) / 2 * e);
  Poly rhs = pre * qfib(2 * l) * qfib(2 * l, n * l) * qfib(l) * qfib(l, l) * qfib(l, n * l) * qfib(l, (n + 1) * l);
  return {det(strided_power_matrix(n, 2, l)), rhs};
}

IdentitySides det_classical_ell(const Params& p) {
  const int n = arg(p, "n");
  const int k = arg(p, "k");
  const int ell = arg(p, "ell");
  const long long e = binom2(k + 1) * (n - k);
  Poly rhs = sgn(ell * e) * Poly(binom_product(k)) * mono(1, 0, static_cast<int>(ell * (e + 2 * binom3(k + 1))), 0);
  for (int j = 0; j < k; ++j) rhs *= pow(fac_classical(k - j, ell), 2);
  return {det(classical_power_matrix(n, k, ell)), rhs};
}

bool positive(const Params& p, std::string_view name) {
  auto it = p.find(name);
  return it == p.end() || it->second >= 1;
}

std::vector<IdentityEntry> make_catalog() {
  auto domain = [](std::vector<std::string> positive_names, bool m_nonneg = false) {
    return [positive_names = std::move(positive_names), m_nonneg](const Params& p) {
      for (const auto& name : positive_names) {
        if (!positive(p, name)) return false;
      }
      return !m_nonneg || arg(p, "m") >= 0;
    };
  };
  auto any = [](const Params&) { return true; };

  std::vector<IdentityEntry> c;
  c.push_back({"power_rec_classical", "recurrence for F_n(x,s)^k with fibonomial coefficients",
               {"n", "k"}, {{"n", {6, 12}}, {"k", {1, 4}}}, domain({"k"}), power_rec_classical, std::nullopt});
  c.push_back({"squares_classical", "F_n^2 - 2F_{n-1}^2 - 2F_{n-2}^2 + F_{n-3}^2 = 0 for Fibonacci numbers",
               {"n"}, {{"n", {3, 30}}}, any, squares_classical, std::nullopt});
  c.push_back({"conj1_f", "q-analogue of the power recurrence in shifted form",
               {"n", "k"}, {{"n", {-3, 8}}, {"k", {2, 3}}}, domain({"k"}), conj1_f, std::nullopt});
  c.push_back({"conj1_fibo", "conj1_f after q -> 1/q, s -> q^{n-1}s",
               {"n", "k"}, {{"n", {-3, 8}}, {"k", {2, 3}}}, domain({"k"}), conj1_fibo, std::nullopt});
  c.push_back({"euler_cassini", "q-Euler-Cassini formula",
               {"n", "k"}, {{"n", {-4, 8}}, {"k", {1, 6}}}, domain({"k"}), euler_cassini, std::nullopt});
  c.push_back({"basis_decomp", "f(n-k, q^k s) as a combination of f(n, s) and f(n-1, qs)",
               {"n", "k"}, {{"n", {-4, 8}}, {"k", {1, 6}}}, domain({"k"}), basis_decomp, std::nullopt});
  c.push_back({"conj2", "stride-ell power recurrence",
               {"n", "k", "ell"}, {{"n", {3, 7}}, {"k", {1, 2}}, {"ell", {1, 3}}}, domain({"k", "ell"}), conj2, std::nullopt});
  c.push_back({"threeterm_ell", "three-term recurrence for f(ell n), denominators cleared",
               {"n", "ell"}, {{"n", {3, 8}}, {"ell", {1, 4}}}, domain({"ell"}), threeterm_ell, std::nullopt});
  c.push_back({"threeterm_classical", "F_{ell n} - L_ell F_{ell(n-1)} + (-s)^ell F_{ell(n-2)} = 0",
               {"n", "ell"}, {{"n", {3, 8}}, {"ell", {1, 4}}}, domain({"ell"}), threeterm_classical, std::nullopt});
  c.push_back({"gen_cassini", "generalized 2x2 Cassini determinant",
               {"N", "m", "ell"}, {{"N", {-3, 6}}, {"m", {0, 3}}, {"ell", {1, 3}}}, domain({"ell"}, true),
               gen_cassini, std::nullopt});
  c.push_back({"gf_limit", "Euler-Cassini limit for the generating function F(s), truncated",
               {"k", "order_s", "order_q"}, {{"k", {1, 4}}, {"order_s", {8, 8}}, {"order_q", {12, 12}}},
               domain({"k", "order_s", "order_q"}), gf_limit, std::nullopt});
  c.push_back({"conj2_k2", "k = 2 case of the stride-ell recurrence, written out",
               {"n", "ell"}, {{"n", {4, 7}}, {"ell", {1, 3}}}, domain({"ell"}), conj2_k2, std::nullopt});
  c.push_back({"cassini_classical", "det [[F_n, F_{n-1}], [F_{n+1}, F_n]] = (-1)^{n-1} s^{n-1}",
               {"n"}, {{"n", {1, 10}}}, any, cassini_classical, std::nullopt});
  c.push_back({"det_power_classical", "det(F_{n+i-j}^k) closed form",
               {"n", "k"}, {{"n", {1, 10}}, {"k", {1, 2}}}, domain({"k"}), det_power_classical, std::nullopt});
  c.push_back({"q_cassini", "q-Cassini determinant d(n, s)",
               {"n"}, {{"n", {1, 12}}}, any, q_cassini, std::nullopt});
  c.push_back({"det_sq_q", "3x3 determinant of squares",
               {"n"}, {{"n", {2, 8}}}, any, det_sq_q, det_sq_q_prefactor(), false});
  c.push_back({"conj3", "det(f(n+i-j, q^j s)^k) product formula",
               {"n", "k"}, {{"n", {2, 6}}, {"k", {1, 2}}}, domain({"k"}), conj3, strided_det_prefactor(), true});
  c.push_back({"conj4", "stride-ell determinant product formula",
               {"n", "k", "ell"}, {{"n", {2, 5}}, {"k", {1, 2}}, {"ell", {1, 2}}}, domain({"k", "ell"}), conj4,
               strided_det_prefactor(), true});
  c.push_back({"conj4_k1", "k = 1 case of the stride-ell determinant formula",
               {"n", "ell"}, {{"n", {1, 6}}, {"ell", {1, 3}}}, domain({"ell"}), conj4_k1, std::nullopt});
  c.push_back({"conj4_k2", "k = 2 case of the stride-ell determinant formula",
               {"n", "ell"}, {{"n", {2, 5}}, {"ell", {1, 2}}}, domain({"ell"}), conj4_k2, std::nullopt});
  c.push_back({"det_classical_ell", "det(F_{ell(n+i-j)}^k) closed form",
               {"n", "k", "ell"}, {{"n", {2, 5}}, {"k", {1, 2}}, {"ell", {1, 2}}}, domain({"k", "ell"}),
               det_classical_ell, std::nullopt});
  return c;
}

}  // namespace

PolyMatrix strided_power_matrix(int n, int k, int ell) {
  if (k < 1 || ell < 1) throw BadParams("strided_power_matrix: k and ell must be positive");
  const auto dim = static_cast<std::size_t>(k + 1);
  PolyMatrix m(dim, dim);
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          pow(qfib(ell * (n + i - j), ell * j), static_cast<unsigned>(k));
    }
  }
  return m;
}

const std::vector<IdentityEntry>& catalog() {
  static const std::vector<IdentityEntry> entries = make_catalog();
  return entries;
}

const IdentityEntry& find_entry(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
}

void check_params(const IdentityEntry& entry, const Params& p) {
  if (p.size() != entry.params.size()) throw BadParams(entry.id + ": wrong number of parameters");
  for (const auto& name : entry.params) {
    if (p.find(name) == p.end()) throw BadParams(entry.id + ": missing parameter '" + name + "'");
  }
  if (entry.in_domain && !entry.in_domain(p)) throw BadParams(entry.id + ": parameters outside the domain");
}

IdentitySides build_sides(const IdentityEntry& entry, const Params& p) {
  check_params(entry, p);
  return entry.build(p);
}

Poly residual(const IdentityEntry& entry, const Params& p) { return build_sides(entry, p).residual(); }

std::vector<Poly> det_table(int max_k) {
  std::vector<Poly> out;
  for (int k = 1; k <= max_k; ++k) out.push_back(det(strided_power_matrix(k, k, 1)));
  return out;
}

}  // namespace qfib
