#include <gtest/gtest.h>

#include <random>

#include "printers.hpp"
#include "qclifford/clifford.hpp"
#include "qclifford/errors.hpp"
#include "qclifford/expr.hpp"
#include "random_scalars.hpp"

using namespace qcl;

namespace {

const Algebra& alg2() {
  static const Algebra a(BilinearForm::hecke(2));
  return a;
}

Multivector E(std::vector<int> idx) { return alg2().e(idx); }
RatFunc R(const char* c) { return RatFunc::parse(c); }
Multivector S(const char* c) { return alg2().scalar(RatFunc::parse(c)); }
Multivector mul(const Multivector& a, const Multivector& b) { return cl_mul(a, b, alg2()); }

// Independent oracle: x ⌋ (e_t ∧ rest) = B(x, e_t) rest - e_t ∧ (x ⌋ rest),
// applied to the leading factor, then (u ∧ w) ⌋ v = u ⌋ (w ⌋ v) for
// multi-vector left factors.
Multivector rule_ii(int i, Blade t, const BilinearForm& B, int dim) {
  if (t.mask == 0) return Multivector(dim);
  int first = __builtin_ctz(t.mask);
  Blade rest{t.mask & ~(1u << first)};
  Multivector rest_v = Multivector::blade(dim, rest);
  Multivector e_t = Multivector::from_indices(dim, {first + 1});
  return B(i, first + 1) * rest_v - wedge(e_t, rule_ii(i, rest, B, dim));
}

Multivector oracle_contract(Blade a, Blade b, const BilinearForm& B, int dim) {
  Multivector w = Multivector::blade(dim, b);
  auto idx = a.indices();
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    Multivector next(dim);
    for (const auto& [t, c] : w.terms()) next += c * rule_ii(*it, t, B, dim);
    w = next;
  }
  return w;
}

}  // namespace

TEST(BuildB, HeckeFormN2) {
  EXPECT_EQ(BilinearForm::hecke(2).to_string(), "[[0, 0, q, 0], [0, 0, 0, q], [1, l, 0, 0], [q/l, 1, 0, 0]]");
}

TEST(BuildB, HeckeFormN1) { EXPECT_EQ(BilinearForm::hecke(1).to_string(), "[[0, q], [1, 0]]"); }

TEST(BuildB, SymmetricPart) {
  auto G = BilinearForm::hecke(2).symmetric_part();
  EXPECT_EQ(G(1, 3), RatFunc::parse("(q+1)/2"));
  EXPECT_TRUE(G.is_symmetric());
  EXPECT_FALSE(BilinearForm::hecke(2).is_symmetric());
  EXPECT_THROW(BilinearForm::generic(2, std::vector<RatFunc>(3)), DimensionMismatch);
  EXPECT_THROW(BilinearForm::hecke(0), InvalidArgument);
}

TEST(Contract, Examples) {
  const auto& B = alg2().form();
  EXPECT_EQ(contract(E({1}), E({3}), B), S("q"));
  EXPECT_EQ(contract(E({1}), E({3, 4}), B), R("q") * E({4}));
  Multivector lhs = contract(E({1, 3}), E({3, 4}), B);
  EXPECT_EQ(lhs, oracle_contract(Blade{0b0101}, Blade{0b1100}, B, 4));
  EXPECT_TRUE(lhs.is_zero());  // B33 = B34 = 0
  EXPECT_EQ(contract(S("q"), E({2}), B), R("q") * E({2}));
}

TEST(Contract, AgreesWithRuleTwoOracleOnAllBladePairs) {
  for (int n : {1, 2}) {
    Algebra alg(BilinearForm::hecke(n));
    for (Blade a : all_blades(alg.dim()))
      for (Blade b : all_blades(alg.dim()))
        ASSERT_EQ(contract(Multivector::blade(alg.dim(), a), Multivector::blade(alg.dim(), b), alg.form()),
                  oracle_contract(a, b, alg.form(), alg.dim()))
            << a.to_string() << " _| " << b.to_string();
  }
}

TEST(CliffordProduct, Examples) {
  EXPECT_EQ(mul(E({1}), E({3})), S("q") + E({1, 3}));
  EXPECT_EQ(mul(E({3}), E({1})), S("1") - E({1, 3}));
  Multivector u = E({1}) + E({3});
  EXPECT_EQ(mul(u, u), S("1+q"));
  EXPECT_THROW(cl_mul(E({1}), Multivector::from_indices(6, {1}), alg2()), DimensionMismatch);
}

TEST(CliffordProduct, AssociativityExhaustive) {
  auto blades = all_blades(4);
  for (Blade a : blades)
    for (Blade b : blades) {
      Multivector ab = mul(Multivector::blade(4, a), Multivector::blade(4, b));
      for (Blade c : blades) {
        Multivector cv = Multivector::blade(4, c);
        ASSERT_EQ(mul(ab, cv), mul(Multivector::blade(4, a), mul(Multivector::blade(4, b), cv)))
            << a.to_string() << " " << b.to_string() << " " << c.to_string();
      }
    }
}

TEST(CliffordProduct, UnitAndFiltration) {
  for (Blade a : all_blades(4))
    for (Blade b : all_blades(4)) {
      Multivector u = Multivector::blade(4, a), v = Multivector::blade(4, b);
      Multivector p = mul(u, v);
      for (int g : p.grades()) ASSERT_LE(g, a.grade() + b.grade());
      ASSERT_EQ(grade_project(p, a.grade() + b.grade()), wedge(u, v));
      ASSERT_EQ(mul(alg2().one(), u), u);
      ASSERT_EQ(mul(u, alg2().one()), u);
    }
}

TEST(CliffordProduct, CliffordMapOnRandomVectors) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Multivector x(4);
    for (int k = 1; k <= 4; ++k) x += test::random_rational(rng) * E({k});
    RatFunc c = clifford_map_square(x, alg2());
    EXPECT_EQ(mul(x, x), alg2().scalar(c));
    EXPECT_EQ(c, alg2().form().symmetric_value(x, x));
  }
}

TEST(CliffordProduct, AnticommutatorOnlySeesSymmetricPart) {
  Algebra sym(alg2().form().symmetric_part());
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      Multivector anti = mul(E({i}), E({j})) + mul(E({j}), E({i}));
      RatFunc two_g = alg2().form()(i, j) + alg2().form()(j, i);
      EXPECT_EQ(anti, alg2().scalar(two_g));
      EXPECT_EQ(cl_mul(sym.e(i), sym.e(j), sym) + cl_mul(sym.e(j), sym.e(i), sym), anti);
    }
}

TEST(CliffordMapSquare, Examples) {
  EXPECT_TRUE(clifford_map_square(E({1}), alg2()).is_zero());
  EXPECT_EQ(clifford_map_square(E({1}) + E({3}), alg2()), RatFunc::parse("1+q"));
  EXPECT_EQ(clifford_map_square(E({2}) + E({4}), alg2()), RatFunc::parse("1+q"));
  EXPECT_THROW(clifford_map_square(E({1, 3}), alg2()), InvalidArgument);
}

TEST(Reversion, Examples) {
  EXPECT_EQ(reversion(E({1, 3}), alg2()), S("1-q") - E({1, 3}));
  EXPECT_EQ(reversion(E({1}), alg2()), E({1}));
  EXPECT_EQ(reversion(S("q"), alg2()), S("q"));
}

TEST(Reversion, AntiautomorphismOnAllBladePairs) {
  for (Blade a : all_blades(4)) {
    Multivector u = Multivector::blade(4, a);
    ASSERT_EQ(reversion(reversion(u, alg2()), alg2()), u);
    for (Blade b : all_blades(4)) {
      Multivector v = Multivector::blade(4, b);
      ASSERT_EQ(reversion(mul(u, v), alg2()), mul(reversion(v, alg2()), reversion(u, alg2())));
    }
  }
}

TEST(Reversion, DiffersFromNaiveSignFlipForNonSymmetricB) {
  // Naive rule would give -e13; the antisymmetric part of B adds a scalar.
  Multivector r = reversion(E({1, 3}), alg2());
  EXPECT_FALSE(r.scalar_part().is_zero());
  Algebra sym(alg2().form().symmetric_part());
  // With a symmetric form rev(e1∧e3) = -e1∧e3 exactly.
  EXPECT_EQ(reversion(sym.e({1, 3}), sym), -sym.e({1, 3}));
}

TEST(Reversion, NThreeAntiautomorphismSample) {
  Algebra a3(BilinearForm::hecke(3));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint32_t> mask(0, 63);
  for (int i = 0; i < 200; ++i) {
    Multivector u = Multivector::blade(6, Blade{mask(rng)}), v = Multivector::blade(6, Blade{mask(rng)});
    ASSERT_EQ(reversion(cl_mul(u, v, a3), a3), cl_mul(reversion(v, a3), reversion(u, a3), a3));
  }
}

TEST(Expression, Evaluation) {
  EXPECT_EQ(evaluate_expression("e1 _| (e3 ^ e4)", alg2()).to_string(), "q*e4");
  EXPECT_EQ(evaluate_expression("~e13", alg2()).to_string(), "(1-q)*1 - 1*e13");
  EXPECT_EQ(evaluate_expression("e13*e13", alg2()).to_string(), "q*1 + (1-q)*e13");
  EXPECT_EQ(evaluate_expression("(e1+e3)*(e1+e3)", alg2()).to_string(), "(1+q)*1");
  EXPECT_EQ(evaluate_expression("q^2*e1 / q", alg2()).to_string(), "q*e1");
  EXPECT_THROW(evaluate_expression("e1 / e2", alg2()), ParseError);
  EXPECT_THROW(evaluate_expression("b1", alg2()), ParseError);
}
