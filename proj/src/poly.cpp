#include "qfib/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <unordered_map>
#include <utility>

namespace qfib {

namespace {

constexpr std::array<Var, kNumVars> kAllVars{Var::x, Var::s, Var::q, Var::z};
// Variables appear inside a printed term in alphabetical order.
constexpr std::array<Var, kNumVars> kPrintOrder{Var::q, Var::s, Var::x, Var::z};

char var_name(Var v) {
  switch (v) {
    case Var::x: return 'x';
    case Var::s: return 's';
    case Var::q: return 'q';
    case Var::z: return 'z';
  }
  return '?';
}

Rational rational_pow(const Rational& base, std::int32_t e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw PoleAtZero("negative power evaluated at zero");
    return Rational(0);
  }
  const auto n = static_cast<unsigned>(e < 0 ? -static_cast<std::int64_t>(e) : e);
  const BigInt num = boost::multiprecision::pow(numerator(base), n);
  const BigInt den = boost::multiprecision::pow(denominator(base), n);
  const Rational r(num, den);
  return e < 0 ? Rational(1) / r : r;
}

BigInt bigint_pow(const BigInt& base, std::int32_t e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.exp[i] = exp[i] + o.exp[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.exp[i] = exp[i] - o.exp[i];
  return r;
}

Monomial Monomial::pow(std::int32_t e) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.exp[i] = exp[i] * e;
  return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  const auto z = static_cast<std::size_t>(Var::z);
  const auto x = static_cast<std::size_t>(Var::x);
  const auto s = static_cast<std::size_t>(Var::s);
  const auto q = static_cast<std::size_t>(Var::q);
  if (a.exp[z] != b.exp[z]) return a.exp[z] > b.exp[z] ? -1 : 1;
  if (a.exp[x] != b.exp[x]) return a.exp[x] > b.exp[x] ? -1 : 1;
  if (a.exp[s] != b.exp[s]) return a.exp[s] < b.exp[s] ? -1 : 1;
  if (a.exp[q] != b.exp[q]) return a.exp[q] < b.exp[q] ? -1 : 1;
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto e : m.exp) {
    h ^= static_cast<std::uint32_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// Poly construction

Poly::Poly(long long c) {
  if (c != 0) terms_.push_back({Monomial::one(), BigInt(c)});
}

Poly::Poly(const BigInt& c) {
  if (c != 0) terms_.push_back({Monomial::one(), c});
}

Poly Poly::var(Var v, std::int32_t e) { return monomial(1, Monomial::of(v, e)); }

Poly Poly::monomial(const BigInt& c, const Monomial& m) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return Monomial::compare(a.mono, b.mono) < 0; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

BigInt Poly::constant_term() const {
  for (const auto& t : terms_) {
    if (t.mono.is_one()) return t.coeff;
  }
  return 0;
}

const Term& Poly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

bool Poly::uses(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono[v] != 0; });
}

std::int32_t Poly::min_exponent(Var v) const {
  std::int32_t r = std::numeric_limits<std::int32_t>::max();
  for (const auto& t : terms_) r = std::min(r, t.mono[v]);
  return terms_.empty() ? 0 : r;
}

std::int32_t Poly::max_exponent(Var v) const {
  std::int32_t r = std::numeric_limits<std::int32_t>::min();
  for (const auto& t : terms_) r = std::max(r, t.mono[v]);
  return terms_.empty() ? 0 : r;
}

BigInt Poly::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) g = boost::multiprecision::gcd(g, t.coeff);
  return boost::multiprecision::abs(g);
}

// ---------------------------------------------------------------------------
// Arithmetic

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merges two canonical term lists, scaling the second by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c = 0;
    if (i == a.size()) {
      c = 1;
    } else if (j == b.size()) {
      c = -1;
    } else {
      c = Monomial::compare(a[i].mono, b[j].mono);
    }
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      BigInt sum = sign < 0 ? BigInt(a[i].coeff - b[j].coeff) : BigInt(a[i].coeff + b[j].coeff);
      if (sum != 0) out.push_back({a[i].mono, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Poly Poly::mul_term(const BigInt& c, const Monomial& m) const {
  Poly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves a group order, so no re-sort is needed.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, BigInt(t.coeff * c)});
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.mul_term(a.terms_[0].coeff, a.terms_[0].mono);
  if (b.size() == 1) return a.mul_term(b.terms_[0].coeff, b.terms_[0].mono);

  std::unordered_map<Monomial, BigInt, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), std::size_t{1} << 20));
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ta.mono * tb.mono);
      if (inserted) {
        it->second = ta.coeff * tb.coeff;
      } else {
        it->second += ta.coeff * tb.coeff;
      }
    }
  }
  Poly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& x, const Term& y) { return Monomial::compare(x.mono, y.mono) < 0; });
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }
Poly neg(const Poly& a) { return -a; }

Poly pow(const Poly& a, unsigned e) {
  Poly result = 1;
  Poly base = a;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Poly laurent_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
  if (a.is_zero()) return {};
  const Term& lead = b.leading();
  if (b.size() == 1) {
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (t.coeff % lead.coeff != 0) throw NotDivisible("exact_div: coefficient not divisible");
      out.push_back({t.mono / lead.mono, BigInt(t.coeff / lead.coeff)});
    }
    return Poly::from_terms(std::move(out));
  }

  // Per-variable degree bounds of any exact quotient.  Every candidate quotient
  // term must land in this box; together with the strictly decreasing order of
  // candidates this bounds the loop even though Laurent orders are not
  // well-orders.
  std::array<std::int32_t, kNumVars> lo{};
  std::array<std::int32_t, kNumVars> hi{};
  for (Var v : kAllVars) {
    auto i = static_cast<std::size_t>(v);
    lo[i] = a.min_exponent(v) - b.min_exponent(v);
    hi[i] = a.max_exponent(v) - b.max_exponent(v);
    if (lo[i] > hi[i]) throw NotDivisible("exact_div: degree bounds are inconsistent");
  }

  std::map<Monomial, BigInt, CanonicalBefore> rem;
  for (const auto& t : a.terms()) rem.emplace_hint(rem.end(), t.mono, t.coeff);

  std::vector<Term> quot;
  while (!rem.empty()) {
    auto first = rem.begin();
    Monomial m = first->first / lead.mono;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m.exp[i] < lo[i] || m.exp[i] > hi[i]) throw NotDivisible("exact_div: nonzero remainder");
    }
    if (first->second % lead.coeff != 0) throw NotDivisible("exact_div: coefficient not divisible");
    BigInt c = first->second / lead.coeff;
    rem.erase(first);
    for (std::size_t i = 1; i < b.size(); ++i) {
      const Term& t = b.terms()[i];
      auto [it, inserted] = rem.try_emplace(t.mono * m);
      it->second -= t.coeff * c;
      if (it->second == 0) rem.erase(it);
    }
    quot.push_back({m, std::move(c)});
  }
  return Poly::from_terms(std::move(quot));
}

Poly exact_div(const Poly& a, const Poly& b) {
  Poly quot = laurent_div(a, b);
  for (Var v : kAllVars) {
    if (a.min_exponent(v) >= 0 && b.min_exponent(v) >= 0 && quot.min_exponent(v) < 0) {
      throw NotDivisible("exact_div: nonzero remainder");
    }
  }
  return quot;
}

// ---------------------------------------------------------------------------
// Substitutions and evaluation

Poly subst_s_scale(const Poly& p, std::int32_t m) {
  if (m == 0) return p;
  std::vector<Term> out(p.terms());
  for (auto& t : out) t.mono[Var::q] += m * t.mono[Var::s];
  return Poly::from_terms(std::move(out));
}

Poly subst_q_invert(const Poly& p) {
  std::vector<Term> out(p.terms());
  for (auto& t : out) t.mono[Var::q] = -t.mono[Var::q];
  return Poly::from_terms(std::move(out));
}

Poly subst_q_one(const Poly& p) {
  std::vector<Term> out(p.terms());
  for (auto& t : out) t.mono[Var::q] = 0;
  return Poly::from_terms(std::move(out));
}

Poly substitute(const Poly& p, Var v, const BigInt& value) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::int32_t e = t.mono[v];
    Monomial m = t.mono;
    m[v] = 0;
    if (e == 0) {
      out.push_back({m, t.coeff});
      continue;
    }
    if (value == 0) {
      if (e < 0) throw PoleAtZero("substitute: negative power evaluated at zero");
      continue;
    }
    if (e < 0) {
      if (value != 1 && value != -1) {
        throw std::domain_error("substitute: negative power of a non-unit integer is not integral");
      }
      e = -e;
    }
    out.push_back({m, BigInt(t.coeff * bigint_pow(value, e))});
  }
  return Poly::from_terms(std::move(out));
}

Rational eval(const Poly& p, const EvalPoint& at) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = Rational(t.coeff);
    for (std::size_t i = 0; i < kNumVars; ++i) v *= rational_pow(at[i], t.mono.exp[i]);
    sum += v;
  }
  return sum;
}

Poly truncate(const Poly& p, std::int32_t order_s, std::int32_t order_q) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono[Var::s] < order_s && t.mono[Var::q] < order_q) out.push_back(t);
  }
  return Poly::from_terms(std::move(out));
}

Poly sign_power(long long e) { return (e % 2 == 0) ? Poly(1) : Poly(-1); }

// ---------------------------------------------------------------------------
// Text format

std::string to_canonical_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = t.coeff < 0;
    BigInt mag = negative ? BigInt(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string vars;
    for (Var v : kPrintOrder) {
      std::int32_t e = t.mono[v];
      if (e == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += var_name(v);
      if (e != 1) {
        vars += '^';
        vars += std::to_string(e);
      }
    }
    if (vars.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += vars;
    } else {
      out += mag.str();
      out += '*';
      out += vars;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse_all() {
    skip_ws();
    if (at_end()) fail("empty input");
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(parse_term(negative));
    skip_ws();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(parse_term(c == '-'));
      skip_ws();
    }
    return Poly::from_terms(std::move(terms));
  }

 private:
  Term parse_term(bool negative) {
    Term t{Monomial::one(), BigInt(1)};
    bool first_factor = true;
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
        t.coeff *= parse_unsigned();
      } else if (c == 'x' || c == 's' || c == 'q' || c == 'z') {
        ++pos_;
        Var v = c == 'x' ? Var::x : c == 's' ? Var::s : c == 'q' ? Var::q : Var::z;
        std::int32_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          e = parse_exponent();
        }
        t.mono[v] += e;
      } else {
        fail(first_factor ? "expected a coefficient or variable" : "expected a factor after '*'");
      }
      first_factor = false;
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  std::int32_t parse_exponent() {
    skip_ws();
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (at_end() || std::isdigit(static_cast<unsigned char>(peek())) == 0) {
      fail("expected an integer exponent");
    }
    std::size_t start = pos_;
    BigInt v = parse_unsigned();
    if (v > std::numeric_limits<std::int32_t>::max()) {
      pos_ = start;
      fail("exponent out of range");
    }
    auto e = v.convert_to<std::int32_t>();
    return negative ? -e : e;
  }

  BigInt parse_unsigned() {
    BigInt v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace qfib
