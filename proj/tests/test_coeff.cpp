#include <gtest/gtest.h>

#include <random>

#include "printers.hpp"
#include "qclifford/coeff.hpp"
#include "qclifford/errors.hpp"
#include "random_scalars.hpp"

using namespace qcl;

namespace {

RatFunc P(const char* text) { return RatFunc::parse(text); }

std::string guard_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GuardFailure& g) {
    return g.guard();
  }
  return "<no guard>";
}

}  // namespace

TEST(FieldArith, CommonFactorCancels) {
  RatFunc s = RatFunc::s();
  EXPECT_EQ((s * s + s) / (s + 1), s);
}

TEST(FieldArith, InverseOfQ) {
  RatFunc q = RatFunc::q();
  EXPECT_TRUE((q * (RatFunc(1) / q)).is_one());
  EXPECT_EQ(q, RatFunc::s() * RatFunc::s());
}

TEST(FieldArith, HeckeScalarIdentity) { EXPECT_TRUE(((RatFunc(1) - RatFunc::q()) + RatFunc::q()).is_one()); }

TEST(FieldArith, DivisionByZeroIsDistinctError) {
  EXPECT_THROW(RatFunc::q() / RatFunc(), DivisionByZero);
  EXPECT_THROW(RatFunc().inverse(), DivisionByZero);
  EXPECT_THROW(RatFunc::normalize(Poly(1), Poly()), DivisionByZero);
}

TEST(Normalize, DifferenceOfSquares) {
  Poly q = Poly::var_q();
  RatFunc r = RatFunc::normalize(q * q - Poly(1), q - Poly(1));
  EXPECT_EQ(r, RatFunc(q + Poly(1)));
  EXPECT_TRUE(r.den().is_one());
}

TEST(Normalize, ZeroNormalForm) {
  RatFunc r = RatFunc::normalize(Poly(), Poly::var_s() + Poly(1));
  EXPECT_TRUE(r.is_zero());
  EXPECT_TRUE(r.den().is_one());
  EXPECT_EQ(r.to_string(), "0");
}

TEST(Normalize, ContentRemoval) {
  RatFunc r = RatFunc::normalize(Poly::var_s().scaled(2), Poly(4));
  EXPECT_EQ(r.to_string(), "s/2");
  EXPECT_EQ(r, RatFunc::s() / RatFunc(2));
}

TEST(Normalize, IdempotentAndCanonical) {
  RatFunc a = P("(2*q+2)/(4*q*l+4*l)");
  RatFunc b = RatFunc::normalize(a.num(), a.den());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, P("1/(2*l)"));
  EXPECT_EQ(a.den().leading().coeff, 1);
}

TEST(Gcd, Bivariate) {
  Poly s = Poly::var_s(), l = Poly::var_l(), q = Poly::var_q();
  EXPECT_EQ(gcd((s + l) * (s - l), (s + l) * (s + l)), s + l);
  EXPECT_EQ(gcd(l * (q + Poly(1)) * (s + l), (q + Poly(1)) * l * l), l * q + l);
  EXPECT_EQ(gcd(s * s + l, s + Poly(3)), Poly(1));
  EXPECT_EQ(gcd((l + Poly(2)) * (s * l + Poly(1)), (l + Poly(2)) * (s + l)), l + Poly(2));
}

TEST(Evaluate, Specializations) {
  RatFunc inv = RatFunc(1) / (RatFunc(1) + RatFunc::q());
  EXPECT_EQ(evaluate(inv, 1, 1), Rational(1, 2));
  // (1-q) is the b-coefficient of b^2 = (1-q) b + q; it vanishes at q = 1.
  EXPECT_EQ(evaluate(RatFunc(1) - RatFunc::q(), 1, 1), 0);
  EXPECT_EQ(guard_of([&] { Point::rational(-1, 1).specialize(inv); }), "1+q=0");
}

TEST(Evaluate, NamedGuards) {
  EXPECT_EQ(guard_of([] { evaluate(P("1/q"), 0, 1); }), "q=0");
  EXPECT_EQ(guard_of([] { evaluate(P("q/l"), 1, 0); }), "l=0");
  EXPECT_EQ(guard_of([] { Point::parse("q=root(q^2+q+1)").specialize(P("1/(q^2+q+1)")); }), "q^2+q+1=0");
  EXPECT_EQ(guard_of([] { Point::parse("q=-1,l=2").specialize(P("1/(1+q)/(1+q+q^2)")); }), "1+q=0");
  EXPECT_EQ(guard_of([] { Point::parse("q=0,l=2").specialize(P("1/q")); }), "q=0");
  EXPECT_EQ(guard_of([] { Point::parse("q=1,l=0").specialize(P("1")); }), "l=0");
}

TEST(Evaluate, AlgebraicPointArithmetic) {
  // 1/(1+w) = -w for w a primitive cube root of unity.
  Point w = Point::parse("q=root(q^2+q+1),l=1");
  EXPECT_EQ(w.specialize(P("1/(1+q)")), P("-q"));
  EXPECT_EQ(w.specialize(P("q^3")), RatFunc(1));
  EXPECT_EQ(w.to_string(), "q=root(1+q+q^2),l=1");
}

TEST(Evaluate, OddSNeedsRationalRoot) {
  EXPECT_EQ(Point::rational(Rational(9, 4), 1).specialize(RatFunc(1) / RatFunc::s()), RatFunc(Rational(2, 3)));
  EXPECT_THROW(Point::rational(2, 1).specialize(RatFunc::s()), InvalidArgument);
}

TEST(Text, RenderAndParse) {
  EXPECT_EQ(P("(1-q)/(1+q)").to_string(), "(1-q)/(1+q)");
  EXPECT_EQ(P("q/l").to_string(), "q/l");
  EXPECT_EQ(P("s*s").to_string(), "q");
  EXPECT_EQ(P("q^2+q+1").to_string(), "1+q+q^2");
  EXPECT_EQ(P("-q/l").to_string(), "-q/l");
  EXPECT_EQ(P("1/(q*l)").to_string(), "1/(q*l)");
  EXPECT_THROW(P("q+"), ParseError);
  EXPECT_THROW(P("x"), ParseError);
  EXPECT_THROW(P("1/0"), ParseError);
}

class CoeffProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20260117};
};

TEST_F(CoeffProperties, CanonicalFormSoundness) {
  for (int i = 0; i < 200; ++i) {
    RatFunc a = test::random_ratfunc(rng);
    RatFunc b = test::random_ratfunc(rng);
    if (b.is_zero()) continue;
    ASSERT_EQ(a * b / b, a) << a.to_string() << " | " << b.to_string();
    ASSERT_EQ((a + b) - b, a);
  }
}

TEST_F(CoeffProperties, EvaluationIsHomomorphism) {
  for (int i = 0; i < 100; ++i) {
    RatFunc a = test::random_ratfunc(rng);
    RatFunc b = test::random_ratfunc(rng);
    auto [s0, l0] = test::random_point(rng);
    Rational ea, eb;
    try {
      ea = evaluate(a, s0, l0);
      eb = evaluate(b, s0, l0);
    } catch (const GuardFailure&) {
      continue;
    }
    EXPECT_EQ(evaluate(a + b, s0, l0), ea + eb);
    EXPECT_EQ(evaluate(a - b, s0, l0), ea - eb);
    EXPECT_EQ(evaluate(a * b, s0, l0), ea * eb);
    if (eb != 0) {
      EXPECT_EQ(evaluate(a / b, s0, l0), ea / eb);
    }
  }
}

TEST_F(CoeffProperties, TextRoundTrip) {
  for (int i = 0; i < 200; ++i) {
    RatFunc a = test::random_ratfunc(rng, /*odd_s=*/true);
    std::string text = a.to_string();
    RatFunc back = RatFunc::parse(text);
    ASSERT_EQ(back, a) << text;
    ASSERT_EQ(back.to_string(), text);
  }
}

TEST_F(CoeffProperties, QOnlyInputsStayEvenInS) {
  for (int i = 0; i < 100; ++i) {
    RatFunc a = test::random_ratfunc(rng);
    RatFunc b = test::random_ratfunc(rng);
    EXPECT_FALSE((a * b).has_odd_s());
    EXPECT_FALSE((a + b).has_odd_s());
    if (!b.is_zero()) EXPECT_FALSE((a / b).has_odd_s());
  }
}
