#include <gtest/gtest.h>

#include <random>
#include <set>

#include "printers.hpp"
#include "qclifford/errors.hpp"
#include "qclifford/expr.hpp"
#include "qclifford/suites.hpp"
#include "random_scalars.hpp"

using namespace qcl;

namespace {

Report run(const std::string& target, int n = 2, int eps = -1, std::optional<Point> at = std::nullopt,
           bool symmetrize = false) {
  return run_suite(target, {n, eps, std::move(at), symmetrize});
}

std::set<std::string> ids_with(const Report& r, Status s) {
  std::set<std::string> out;
  for (const auto& c : r.checks)
    if (c.status == s) out.insert(c.id);
  return out;
}

const Check& find(const Report& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return c;
  throw std::runtime_error("no check " + id);
}

const Report& symbolic_all() {
  static const Report r = run("all");
  return r;
}

}  // namespace

TEST(Kernel, PassesForEveryN) {
  for (int n : {1, 2, 3}) {
    Report r = run("clifford-kernel", n);
    EXPECT_EQ(r.summary().fail, 0) << r.to_text();
    EXPECT_EQ(find(r, "clifford.associativity").witness, n == 3 ? "2000 triples" : n == 2 ? "4096 triples" : "64 triples");
  }
}

TEST(Hecke, RelationsAndProjectorsPass) {
  for (int n : {1, 2, 3}) {
    Report r = run("hecke", n);
    EXPECT_EQ(r.summary().fail, 0) << r.to_text();
  }
  Report r = run("hecke", 3);
  EXPECT_EQ(ids_with(r, Status::expected_fail),
            (std::set<std::string>{"hecke.under-g.braid.b1.b2", "hecke.under-g.braid.b2.b3"}));
  EXPECT_EQ(find(r, "hecke.grade-profile").witness, "grades {0,2,4,6}");
}

TEST(Hecke, SymmetrizedModeKeepsAnticommutatorButLosesQuadratic) {
  Report r = run("hecke", 2, -1, std::nullopt, true);
  EXPECT_EQ(find(r, "hecke.symmetrized.braid.b1.b2").status, Status::expected_fail);
  EXPECT_EQ(find(r, "hecke.symmetrized.anticommutator").status, Status::pass);
  EXPECT_EQ(find(r, "hecke.symmetrized.quadratic.b1").status, Status::fail);
  EXPECT_EQ(find(r, "hecke.symmetrized.quadratic.b1").witness, "lhs - rhs = (1/4-q/2+q^2/4)*1 + (-1+q)*e13");
}

TEST(Young, OnlyTheAnnihilatorAndRegularSpinorClaimsFail) {
  Report r = run("young");
  EXPECT_EQ(ids_with(r, Status::fail),
            (std::set<std::string>{"young.annihilator.e34.sym", "young.annihilator.e12.asym", "young.spinor.sreg.e12"}));
  EXPECT_EQ(find(r, "young.printed-13_2").witness, "q^2/(1+2*q+2*q^2+q^3)*e13 - q/(l+q*l+q^2*l)*e23");
  EXPECT_EQ(find(r, "young.class-sum.sym").witness, "(1+2*q)/q");
  EXPECT_EQ(find(r, "young.class-sum.q1").status, Status::pass);
  for (const char* g : {"1+q=0", "q^2+q+1=0", "q=0", "l=0"})
    EXPECT_EQ(find(r, std::string("young.guard.") + g).status, Status::pass) << g;
}

TEST(Young, SpecializedAtQOne) {
  Report r = run("young", 2, -1, Point::parse("q=1,l=1"));
  EXPECT_EQ(*r.point, "q=1,l=1");
  std::vector<std::string> mu;
  for (const char* k : {"sym", "12_3", "13_2", "asym"}) mu.push_back(*find(r, std::string("young.class-sum.") + k).witness);
  EXPECT_EQ(mu, (std::vector<std::string>{"3", "0", "0", "-3"}));
}

TEST(Young, GuardPointIsReported) {
  Report r = run("young", 2, -1, Point::parse("q=-1"));
  const Check& c = find(r, "young.product.12_3.12_3");
  EXPECT_EQ(c.status, Status::fail);
  EXPECT_EQ(c.witness, "1+q=0");
}

TEST(Versor, PassesForBothSigns) {
  for (int eps : {-1, 1}) {
    Report r = run("versor", 2, eps);
    EXPECT_EQ(r.summary().fail, 0) << r.to_text();
    EXPECT_EQ(ids_with(r, Status::expected_fail), std::set<std::string>{"versor.gamma.odd.e1"});
  }
}

TEST(All, CombinesTheSuites) {
  const Report& r = symbolic_all();
  EXPECT_EQ(r.suite, "all");
  std::set<std::string> prefixes;
  for (const auto& c : r.checks) prefixes.insert(c.id.substr(0, c.id.find('.')));
  EXPECT_EQ(prefixes, (std::set<std::string>{"clifford", "hecke", "young", "versor"}));
  EXPECT_EQ(r.summary().fail, 3);
}

TEST(Options, RejectsUnsupportedParameters) {
  EXPECT_THROW(run("young", 3), InvalidArgument);
  EXPECT_THROW(run("versor", 1), InvalidArgument);
  EXPECT_THROW(run("all", 3), InvalidArgument);
  EXPECT_THROW(run("hecke", 4), InvalidArgument);
  EXPECT_THROW(run("hecke", 2, 0), InvalidArgument);
  EXPECT_THROW(run("nonsense"), InvalidArgument);
}

TEST(ReportFormat, JsonRoundTripIsByteIdentical) {
  for (const Report& r : {symbolic_all(), run("hecke", 3, 1), run("young", 2, -1, Point::parse("q=-1"))}) {
    std::string json = r.to_json();
    EXPECT_EQ(Report::from_json(json).to_json(), json);
  }
}

TEST(ReportFormat, TextCarriesEveryCheck) {
  const Report& r = symbolic_all();
  std::string text = r.to_text();
  for (const auto& c : r.checks) EXPECT_NE(text.find(c.id), std::string::npos) << c.id;
  EXPECT_NE(text.find("summary: "), std::string::npos);
}

TEST(Specialization, PassingChecksStayPassingAtRandomPoints) {
  std::mt19937_64 rng(99);
  const Report& base = symbolic_all();
  std::set<std::string> passing = ids_with(base, Status::pass);
  for (int k = 0; k < 20; ++k) {
    Rational q0, l0;
    do q0 = test::random_rational(rng); while (q0 == 0 || q0 == -1);
    l0 = test::random_rational(rng, true);
    Point p = Point::rational(q0, l0);
    Report r = run("all", 2, -1, p);
    ASSERT_EQ(r.checks.size(), base.checks.size());
    for (const auto& c : r.checks)
      if (passing.contains(c.id)) ASSERT_EQ(c.status, Status::pass) << p.to_string() << " " << c.id;
  }
}

TEST(Symbols, StandardTable) {
  HeckeContext ctx(2);
  SymbolTable t = standard_symbols(ctx);
  EXPECT_EQ(t.size(), 8u);
  EXPECT_EQ(evaluate_expression("b1*b1", ctx.algebra(), t).to_string(), "q*1 + (1-q)*e13");
  EXPECT_EQ(evaluate_expression("Ysym*Yasym", ctx.algebra(), t), Multivector(4));
  EXPECT_EQ(evaluate_expression("u*u", ctx.algebra(), t), ctx.algebra().scalar(RatFunc::parse("1+q")));
  EXPECT_EQ(standard_symbols(HeckeContext(3)).size(), 3u);
}

TEST(All, SymmetrizedSectionHasDistinctIds) {
  Report r = run("all", 2, -1, std::nullopt, true);
  EXPECT_EQ(find(r, "hecke.under-g.braid.b1.b2").status, Status::expected_fail);
  EXPECT_EQ(find(r, "hecke.symmetrized.braid.b1.b2").status, Status::expected_fail);
  EXPECT_EQ(find(r, "hecke.symmetrized.quadratic.b1").status, Status::fail);
}
