#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qfib/poly.hpp"

using namespace qfib;

namespace {

const Poly x = Poly::var(Var::x);
const Poly s = Poly::var(Var::s);
const Poly q = Poly::var(Var::q);
const Poly z = Poly::var(Var::z);

constexpr int kCases = 1000;

}  // namespace

TEST(PolyBasics, AddMulPow) {
  EXPECT_EQ(to_canonical_string(add(x, q * s)), "x + q*s");
  EXPECT_EQ(mul(s + x * x, 2 * s + x * x), 2 * s * s + 3 * s * x * x + pow(x, 4));
  EXPECT_EQ(pow(x, 0), Poly(1));
  EXPECT_EQ(neg(x - s), s - x);
  EXPECT_TRUE((x - x).is_zero());
}

TEST(PolyBasics, CanonicalStrings) {
  EXPECT_EQ(to_canonical_string(Poly()), "0");
  EXPECT_EQ(to_canonical_string(Poly(-7)), "-7");
  EXPECT_EQ(to_canonical_string(x * x + q * s), "x^2 + q*s");
  EXPECT_EQ(to_canonical_string(-x * z - s + z * z), "z^2 - x*z - s");
  EXPECT_EQ(to_canonical_string(q * Poly::var(Var::s, -1)), "q*s^-1");
  EXPECT_EQ(to_canonical_string(-2 * Poly::var(Var::q, -3) * x), "-2*q^-3*x");
  const Poly f5 = pow(x, 4) + q * s * x * x + q * q * s * x * x + pow(q, 3) * s * x * x + pow(q, 4) * s * s;
  EXPECT_EQ(to_canonical_string(f5), "x^4 + q*s*x^2 + q^2*s*x^2 + q^3*s*x^2 + q^4*s^2");
  EXPECT_EQ(to_canonical_string(1 + q + 2 * q * q + pow(q, 3) + pow(q, 4)), "1 + q + 2*q^2 + q^3 + q^4");
}

TEST(PolyBasics, ExactDivision) {
  EXPECT_EQ(exact_div((s + x * x) * (2 * s + x * x), s + x * x), 2 * s + x * x);
  EXPECT_EQ(exact_div(pow(q, 3) * s, q * s), q * q);
  EXPECT_THROW(exact_div(x * x + s, x), NotDivisible);
  EXPECT_THROW(exact_div(x, Poly()), std::domain_error);
  EXPECT_EQ(exact_div(Poly(), x + 1), Poly());
  EXPECT_EQ(exact_div(1 - pow(q, 6), 1 - q), 1 + q + q * q + pow(q, 3) + pow(q, 4) + pow(q, 5));
}

TEST(PolyBasics, Substitutions) {
  EXPECT_EQ(subst_s_scale(q * s + x * x, 2), pow(q, 3) * s + x * x);
  EXPECT_EQ(subst_s_scale(pow(x, 3), 5), pow(x, 3));
  EXPECT_EQ(subst_s_scale(Poly::var(Var::q, -1) * s + x * x, 3), q * q * s + x * x);
  EXPECT_EQ(subst_q_invert(q * s + x * x), Poly::var(Var::q, -1) * s + x * x);
  const Poly f3 = q * s + x * x;
  EXPECT_EQ(subst_s_scale(subst_q_invert(f3), 2), f3);
  EXPECT_EQ(subst_q_one(q * s * x + q * q * s * x + pow(x, 3)), 2 * s * x + pow(x, 3));
  EXPECT_EQ(substitute(x * x + s, Var::x, 2), 4 + s);
  EXPECT_THROW(substitute(Poly::var(Var::q, -1), Var::q, 0), PoleAtZero);
  EXPECT_EQ(substitute(q * q + 1, Var::q, 0), Poly(1));
}

TEST(PolyBasics, Evaluation) {
  const Poly f5 = pow(x, 4) + q * s * x * x + q * q * s * x * x + pow(q, 3) * s * x * x + pow(q, 4) * s * s;
  EXPECT_EQ(eval(f5, {1, 1, 1, 0}), 5);
  EXPECT_EQ(eval(x * x + s, {2, -4, 0, 0}), 0);
  EXPECT_EQ(eval(Poly::var(Var::s, -2), {0, Rational(1, 3), 0, 0}), 9);
  EXPECT_THROW(eval(Poly::var(Var::q, -1), {1, 1, 0, 0}), PoleAtZero);
}

TEST(PolyBasics, Truncate) {
  const Poly p = 1 + q * s + pow(q, 5) * s + pow(s, 3);
  EXPECT_EQ(truncate(p, 3, 4), 1 + q * s);
}

TEST(PolyBasics, ContentAndQueries) {
  EXPECT_EQ((6 * x + 9 * s).content(), 3);
  EXPECT_EQ(Poly().content(), 0);
  const Poly p = Poly::var(Var::s, -2) * x + pow(s, 3);
  EXPECT_EQ(p.min_exponent(Var::s), -2);
  EXPECT_EQ(p.max_exponent(Var::s), 3);
  EXPECT_TRUE(p.uses(Var::x));
  EXPECT_FALSE(p.uses(Var::q));
  EXPECT_EQ(sign_power(3), Poly(-1));
  EXPECT_EQ(sign_power(-4), Poly(1));
}

TEST(PolyParse, AcceptsCanonicalAndLooseInput) {
  EXPECT_EQ(parse("q^-1*s + x^2"), Poly::var(Var::q, -1) * s + x * x);
  EXPECT_EQ(parse("x*x+2*x*3 -s"), x * x + 6 * x - s);
  EXPECT_EQ(parse("-3"), Poly(-3));
  EXPECT_EQ(parse("2*s^2 + 3*s*x^2 + x^4"), 2 * s * s + 3 * s * x * x + pow(x, 4));
  EXPECT_EQ(parse("0"), Poly());
}

TEST(PolyParse, RejectsMalformedInput) {
  EXPECT_THROW(parse("x^^2"), ParseError);
  EXPECT_THROW(parse("x +"), ParseError);
  EXPECT_THROW(parse("y"), ParseError);
  EXPECT_THROW(parse("(x"), ParseError);
  try {
    parse("x^^2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(PolyProperties, RingAxioms) {
  oracle::PolyGen gen(11);
  for (int i = 0; i < kCases; ++i) {
    const Poly a = gen(), b = gen(), c = gen();
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a + neg(a)).is_zero());
    ASSERT_EQ(a * Poly(1), a);
    ASSERT_EQ(a + Poly(), a);
  }
}

TEST(PolyProperties, ProductMatchesSchoolbook) {
  oracle::PolyGen gen(12);
  for (int i = 0; i < kCases; ++i) {
    const Poly a = gen(6, -3, 4, 20, true), b = gen(6, -3, 4, 20, true);
    ASSERT_EQ(a * b, oracle::naive_mul(a, b));
  }
}

TEST(PolyProperties, PowerMatchesRepeatedProduct) {
  oracle::PolyGen gen(13);
  for (int i = 0; i < 200; ++i) {
    const Poly a = gen(3);
    Poly r(1);
    for (unsigned e = 0; e < 6; ++e, r = oracle::naive_mul(r, a)) ASSERT_EQ(pow(a, e), r);
  }
}

TEST(PolyProperties, ExactDivisionInvertsProduct) {
  oracle::PolyGen gen(14);
  for (int i = 0; i < kCases; ++i) {
    const Poly a = gen(5), b = gen(4);
    if (b.is_zero()) continue;
    ASSERT_EQ(laurent_div(a * b, b), a);
    // Without negative exponents anywhere, exact_div agrees.
    const Poly c = gen(5, 0, 3), d = gen(4, 0, 3);
    if (!d.is_zero()) ASSERT_EQ(exact_div(c * d, d), c);
  }
}

TEST(PolyProperties, NonDivisibleIsDetected) {
  oracle::PolyGen gen(15);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const Poly a = gen(4), b = gen(3);
    if (b.size() < 2) continue;
    // a*b + 1 is never divisible by a non-monomial b.
    ASSERT_THROW(exact_div(a * b + 1, b), NotDivisible);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(PolyProperties, Substitutions) {
  oracle::PolyGen gen(16);
  for (int i = 0; i < kCases; ++i) {
    const Poly p = gen();
    const int m1 = gen.uniform(-4, 4), m2 = gen.uniform(-4, 4);
    ASSERT_EQ(subst_q_invert(subst_q_invert(p)), p);
    ASSERT_EQ(subst_s_scale(p, m1 + m2), subst_s_scale(subst_s_scale(p, m1), m2));
  }
}

TEST(PolyProperties, ParsePrintRoundTrip) {
  oracle::PolyGen gen(17);
  for (int i = 0; i < kCases; ++i) {
    const Poly p = gen(6, -5, 5, 1000, true);
    const std::string text = to_canonical_string(p);
    ASSERT_EQ(parse(text), p) << text;
    ASSERT_EQ(to_canonical_string(parse(text)), text);
  }
}

TEST(PolyProperties, EvaluationIsAHomomorphism) {
  oracle::PolyGen gen(18);
  for (int i = 0; i < kCases; ++i) {
    const Poly a = gen(4, -2, 3, 5, true), b = gen(4, -2, 3, 5, true);
    const EvalPoint at{gen.nonzero_rational(), gen.nonzero_rational(), gen.nonzero_rational(),
                       gen.nonzero_rational()};
    ASSERT_EQ(eval(a + b, at), eval(a, at) + eval(b, at));
    ASSERT_EQ(eval(a * b, at), eval(a, at) * eval(b, at));
  }
}

TEST(PolyProperties, BigCoefficientsStayExact) {
  const Poly big = pow(1 + x + s, 60);
  EXPECT_EQ(eval(big, {1, 1, 0, 0}), Rational(boost::multiprecision::pow(BigInt(3), 60)));
  EXPECT_EQ(exact_div(big, pow(1 + x + s, 59)), 1 + x + s);
}
