#include <gtest/gtest.h>

#include <random>

#include "printers.hpp"
#include "qclifford/errors.hpp"
#include "qclifford/exterior.hpp"
#include "qclifford/expr.hpp"
#include "random_scalars.hpp"

using namespace qcl;

namespace {

constexpr int kDim = 4;

Multivector E(std::vector<int> idx) { return Multivector::from_indices(kDim, idx); }
RatFunc R(const char* c) { return RatFunc::parse(c); }
Multivector S(const char* c) { return Multivector::scalar(kDim, RatFunc::parse(c)); }

Multivector random_multivector(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<std::uint32_t> mask(0, (1u << dim) - 1);
  std::uniform_int_distribution<int> count(0, 5);
  Multivector v(dim);
  int n = count(rng);
  for (int i = 0; i < n; ++i) v.add_term(Blade{mask(rng)}, test::random_ratfunc(rng, true));
  return v;
}

}  // namespace

TEST(Wedge, Examples) {
  EXPECT_EQ(wedge(E({1}), E({3})), Multivector::blade(kDim, Blade{0b101}));
  EXPECT_EQ(wedge(E({3}), E({1})), -E({1, 3}));
  EXPECT_TRUE(wedge(E({1}), E({1})).is_zero());
  EXPECT_EQ(E({3, 1}).to_string(), "-1*e13");
}

TEST(Wedge, DimensionMismatch) {
  EXPECT_THROW(wedge(E({1}), Multivector::from_indices(6, {1})), DimensionMismatch);
  EXPECT_THROW(Multivector::from_indices(kDim, {5}), DimensionMismatch);
}

TEST(Grading, Projection) {
  Multivector v = S("q") + E({1, 3});
  EXPECT_EQ(grade_project(v, 0), S("q"));
  EXPECT_EQ(grade_project(v, 2), E({1, 3}));
  Multivector reversed_b1 = S("1-q") - E({1, 3});
  EXPECT_EQ(grade_project(reversed_b1, 2), -E({1, 3}));
}

TEST(Grading, MainInvolution) {
  EXPECT_EQ(grade_involute(E({1})), -E({1}));
  EXPECT_EQ(grade_involute(E({1, 3})), E({1, 3}));
  EXPECT_EQ(grade_involute(S("1") + E({1}) + E({1, 3})), S("1") - E({1}) + E({1, 3}));
}

TEST(WedgeProperties, AssociativityExhaustive) {
  auto blades = all_blades(kDim);
  ASSERT_EQ(blades.size(), 16u);
  for (Blade a : blades)
    for (Blade b : blades)
      for (Blade c : blades) {
        Multivector x = Multivector::blade(kDim, a), y = Multivector::blade(kDim, b), z = Multivector::blade(kDim, c);
        ASSERT_EQ(wedge(wedge(x, y), z), wedge(x, wedge(y, z)));
      }
}

TEST(WedgeProperties, GradedAnticommutativity) {
  for (Blade a : all_blades(kDim))
    for (Blade b : all_blades(kDim)) {
      Multivector x = Multivector::blade(kDim, a), y = Multivector::blade(kDim, b);
      RatFunc sign((a.grade() * b.grade()) % 2 ? -1 : 1);
      ASSERT_EQ(wedge(x, y), sign * wedge(y, x));
    }
}

TEST(WedgeProperties, InvolutionIsAlgebraMap) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Multivector u = random_multivector(rng, kDim), v = random_multivector(rng, kDim);
    EXPECT_EQ(grade_involute(grade_involute(u)), u);
    EXPECT_EQ(wedge(grade_involute(u), grade_involute(v)), grade_involute(wedge(u, v)));
  }
}

TEST(Blades, OrderingAndCount) {
  auto blades = all_blades(kDim);
  std::vector<std::string> names;
  for (Blade b : blades) names.push_back(b.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"1", "e1", "e2", "e3", "e4", "e12", "e13", "e14", "e23", "e24", "e34",
                                             "e123", "e124", "e134", "e234", "e1234"}));
}

TEST(Text, CanonicalForms) {
  Multivector v = S("q") + R("1-q") * E({1, 3});
  EXPECT_EQ(v.to_string(), "q*1 + (1-q)*e13");
  EXPECT_EQ((S("1-q") - E({1, 3})).to_string(), "(1-q)*1 - 1*e13");
  EXPECT_EQ((R("q/l") * E({2, 3}) - R("1/(1+q)") * E({1})).to_string(), "-1/(1+q)*e1 + q/l*e23");
  EXPECT_EQ(Multivector(kDim).to_string(), "0");
  EXPECT_EQ(Multivector::from_indices(10, {1, 10}).to_string(), "1*e1,10");
  EXPECT_EQ(parse_multivector("1*e1,10 - q*e2", 10), Multivector::from_indices(10, {1, 10}) - RatFunc::q() * Multivector::from_indices(10, {2}));
}

TEST(Text, ParseErrorsCarryPosition) {
  try {
    parse_multivector("q*e13 + ?", kDim);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
  EXPECT_THROW(parse_multivector("e15", kDim), ParseError);
  EXPECT_THROW(parse_multivector("e1*e3", kDim), ParseError);  // needs an algebra
}

TEST(Text, RoundTripProperty) {
  std::mt19937_64 rng(11);
  for (int dim : {4, 6, 10}) {
    for (int i = 0; i < 100; ++i) {
      Multivector v = random_multivector(rng, dim);
      std::string text = v.to_string();
      Multivector back = parse_multivector(text, dim);
      ASSERT_EQ(back, v) << text;
      ASSERT_EQ(back.to_string(), text);
    }
  }
}
