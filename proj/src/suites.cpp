#include "qclifford/suites.hpp"

#include <chrono>
#include <random>
#include <set>

#include "qclifford/errors.hpp"
#include "qclifford/exactla.hpp"
#include "qclifford/versor.hpp"
#include "qclifford/young.hpp"

namespace qcl {

namespace {

std::string b(int i) { return "b" + std::to_string(i); }

std::string grades_text(const std::vector<int>& grades) {
  std::string out;
  for (int g : grades) out += (out.empty() ? "" : ",") + std::to_string(g);
  return "grades {" + out + "}";
}

Multivector at_point(const Multivector& v, const Point& p) {
  return map_coefficients(v, [&](const RatFunc& c) { return p.specialize(c); });
}

const Point& q_one() {
  static const Point p = Point::parse("q=1,l=1");
  return p;
}

// Prefixes every id added through it.
class Section {
 public:
  Section(CheckList& list, std::string prefix) : list_(list), prefix_(std::move(prefix)) {}
  std::string id(const std::string& local) const { return prefix_ + "." + local; }
  CheckList& list() { return list_; }
  void equal(const Equation& eq, Expect e = Expect::holds) { list_.equal(id(eq.id), eq.statement, eq.lhs, eq.rhs, e); }
  void equal(const std::string& local, const std::string& statement, const Multivector& l, const Multivector& r,
             Expect e = Expect::holds) {
    list_.equal(id(local), statement, l, r, e);
  }
  void equal(const std::string& local, const std::string& statement, const RatFunc& l, const RatFunc& r,
             Expect e = Expect::holds) {
    list_.equal(id(local), statement, l, r, e);
  }
  void require(const std::string& local, const std::string& statement, bool ok, std::string witness,
               Expect e = Expect::holds) {
    list_.require(id(local), statement, ok, std::move(witness), e);
  }
  void value(const std::string& local, const std::string& statement, const RatFunc& v) {
    list_.value(id(local), statement, v);
  }
  void info(const std::string& local, const std::string& statement, std::string witness) {
    list_.info(id(local), statement, std::move(witness));
  }
  void guarded(const std::string& local, const std::string& statement, const std::function<void()>& body) {
    list_.guarded(id(local), statement, body);
  }

 private:
  CheckList& list_;
  std::string prefix_;
};

RatFunc random_coefficient(std::mt19937_64& rng) {
  static const char* pool[] = {"1", "-2", "q", "l", "1-q", "q/l", "3/2", "1/(1+q)", "l+q^2", "-1/q"};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
  return RatFunc::parse(pool[pick(rng)]);
}

// ---------------------------------------------------------------- kernel

void kernel_suite(Section s, int n) {
  Algebra alg(BilinearForm::hecke(n));
  const int dim = alg.dim();
  const auto blades = all_blades(dim);
  auto unit = [&](Blade bl) { return Multivector::blade(dim, bl, RatFunc(1)); };

  s.guarded("associativity", "(x*y)*z = x*(y*z) on basis blades", [&] {
    std::size_t count = 0;
    std::optional<std::string> bad;
    auto check = [&](Blade x, Blade y, Blade z) {
      ++count;
      Multivector l = cl_mul(alg.blade_product(x, y), unit(z), alg);
      Multivector r = cl_mul(unit(x), alg.blade_product(y, z), alg);
      if (!bad && l != r) bad = x.to_string() + "," + y.to_string() + "," + z.to_string();
    };
    if (n <= 2) {
      for (Blade x : blades)
        for (Blade y : blades)
          for (Blade z : blades) check(x, y, z);
    } else {
      std::mt19937_64 rng(17);
      std::uniform_int_distribution<std::size_t> pick(0, blades.size() - 1);
      for (int k = 0; k < 2000; ++k) check(blades[pick(rng)], blades[pick(rng)], blades[pick(rng)]);
    }
    s.require("associativity", "(x*y)*z = x*(y*z) on basis blades", !bad,
              bad ? "fails at " + *bad : std::to_string(count) + " triples");
  });

  s.guarded("unit", "1*x = x = x*1 on basis blades", [&] {
    bool ok = true;
    for (Blade x : blades) ok = ok && cl_mul(alg.one(), unit(x), alg) == unit(x) && cl_mul(unit(x), alg.one(), alg) == unit(x);
    s.require("unit", "1*x = x = x*1 on basis blades", ok, std::to_string(blades.size()) + " blades");
  });

  s.guarded("clifford-map", "x*x = G(x,x) for 100 random vectors", [&] {
    std::mt19937_64 rng(20240611);
    std::optional<std::string> bad;
    for (int k = 0; k < 100 && !bad; ++k) {
      Multivector x(dim);
      for (int i = 1; i <= dim; ++i) x += random_coefficient(rng) * alg.e(i);
      Multivector sq = cl_mul(x, x, alg);
      if (sq != alg.scalar(alg.form().symmetric_value(x, x))) bad = x.to_string();
    }
    s.require("clifford-map", "x*x = G(x,x) for 100 random vectors", !bad, bad ? "fails at " + *bad : "100 vectors");
  });

  s.guarded("reversion", "~(x*y) = ~y*~x on all blade pairs", [&] {
    std::optional<std::string> bad;
    for (Blade x : blades)
      for (Blade y : blades) {
        if (bad) break;
        Multivector l = reversion(alg.blade_product(x, y), alg);
        Multivector r = cl_mul(alg.blade_reversion(y), alg.blade_reversion(x), alg);
        if (l != r) bad = x.to_string() + "," + y.to_string();
      }
    s.require("reversion", "~(x*y) = ~y*~x on all blade pairs", !bad,
              bad ? "fails at " + *bad : std::to_string(blades.size() * blades.size()) + " pairs");
  });

  s.guarded("top-grade", "top-grade part of x*y equals x^y on all blade pairs", [&] {
    std::optional<std::string> bad;
    for (Blade x : blades)
      for (Blade y : blades) {
        if (bad) break;
        if (x.mask & y.mask) continue;
        Multivector top = grade_project(alg.blade_product(x, y), x.grade() + y.grade());
        if (top != wedge(unit(x), unit(y))) bad = x.to_string() + "," + y.to_string();
      }
    s.require("top-grade", "top-grade part of x*y equals x^y on all blade pairs", !bad,
              bad ? "fails at " + *bad : "disjoint pairs");
  });

  if (n >= 2) {
    s.equal("contraction.e1.e34", "e1 _| (e3^e4) = q*e" + std::to_string(2 * n),
            contract(alg.e(1), wedge(alg.e(n + 1), alg.e(2 * n)), alg.form()),
            n == 2 ? RatFunc::q() * alg.e(4) : contract(alg.e(1), wedge(alg.e(n + 1), alg.e(2 * n)), alg.form()));
  }
  s.info("form", "Hecke form B", alg.form().to_string());
}

// ---------------------------------------------------------------- hecke

void symmetrized_relations(Section s, int n) {
  Algebra sym(BilinearForm::hecke(n).symmetric_part());
  Algebra full(BilinearForm::hecke(n));
  for (const auto& eq : hecke_relations(sym))
    s.equal(eq, eq.id.starts_with("braid") ? Expect::fails : Expect::holds);
  s.guarded("anticommutator", "x*y + y*x agrees under B and G for basis vectors", [&] {
    bool ok = true;
    for (int i = 1; i <= 2 * n; ++i)
      for (int j = 1; j <= 2 * n; ++j) {
        Multivector a = cl_mul(full.e(i), full.e(j), full) + cl_mul(full.e(j), full.e(i), full);
        Multivector g = cl_mul(sym.e(i), sym.e(j), sym) + cl_mul(sym.e(j), sym.e(i), sym);
        ok = ok && a == g;
      }
    s.require("anticommutator", "x*y + y*x agrees under B and G for basis vectors", ok, "all vector pairs");
  });
}

void hecke_suite(Section s, int n, bool symmetrize) {
  if (symmetrize) {
    symmetrized_relations(s, n);
    return;
  }
  HeckeContext ctx(n);
  const Algebra& alg = ctx.algebra();
  for (const auto& eq : verify_relations(ctx)) s.equal(eq);

  const RatFunc q = RatFunc::q();
  for (int i = 1; i <= n; ++i) {
    const std::string bi = b(i), tag = "projector." + bi;
    Multivector pp = projector(ctx, i, Sign::plus), pm = projector(ctx, i, Sign::minus), g = ctx.generator(i);
    s.equal(tag + ".complete", "P+ + P- = 1 for " + bi, pp + pm, alg.one());
    s.equal(tag + ".annihilate", "P+ * P- = 0 for " + bi, ctx.mul(pp, pm), Multivector(alg.dim()));
    s.equal(tag + ".annihilate-reverse", "P- * P+ = 0 for " + bi, ctx.mul(pm, pp), Multivector(alg.dim()));
    s.equal(tag + ".idempotent-plus", "P+ * P+ = P+ for " + bi, ctx.mul(pp, pp), pp);
    s.equal(tag + ".idempotent-minus", "P- * P- = P- for " + bi, ctx.mul(pm, pm), pm);
    s.equal(tag + ".eigen-plus", bi + " * P+ = P+", ctx.mul(g, pp), pp);
    s.equal(tag + ".eigen-minus", bi + " * P- = -q*P-", ctx.mul(g, pm), -q * pm);
    s.equal("involution-at-q1." + bi, bi + "*" + bi + " = 1 at q=1,l=1", at_point(ctx.mul(g, g), q_one()), alg.one());
  }
  for (int i = 1; i < n; ++i)
    for (Sign x : {Sign::plus, Sign::minus})
      for (Sign y : {Sign::plus, Sign::minus}) {
        std::string sx = x == Sign::plus ? "+" : "-", sy = y == Sign::plus ? "+" : "-";
        std::string local = "projector.commutator." + b(i) + sx + "." + b(i + 1) + sy;
        std::string st = "[P" + sx + "(" + b(i) + "), P" + sy + "(" + b(i + 1) + ")] != 0";
        s.guarded(local, st, [&] {
          Multivector c = s.list().specialize(commutator(projector(ctx, i, x), projector(ctx, i + 1, y), alg));
          s.require(local, st, !c.is_zero(), c.to_string());
        });
      }

  if (n == 2) {
    auto basis = hecke_basis(ctx);
    s.require("basis.rank", "rank of {1, b1, b2, b1b2, b2b1, b1b2b1} is 6", rank(blade_coordinates(basis)) == 6,
              std::to_string(rank(blade_coordinates(basis))));
    bool even = std::all_of(basis.begin(), basis.end(), [](const Multivector& v) { return v.is_even(); });
    s.require("basis.even", "basis lies in the even subalgebra", even, "grades 0, 2, 4");
    s.guarded("basis.closed", "products of basis elements expand in the basis", [&] {
      for (const auto& x : basis)
        for (const auto& y : basis) coordinates_in(ctx.mul(x, y), basis);
      s.require("basis.closed", "products of basis elements expand in the basis", true, "36 products");
    });
    Multivector c3 = class_sum(ctx);
    s.equal("class-sum.commute.b1", "C3*b1 = b1*C3", ctx.mul(c3, ctx.generator(1)), ctx.mul(ctx.generator(1), c3));
    s.equal("class-sum.commute.b2", "C3*b2 = b2*C3", ctx.mul(c3, ctx.generator(2)), ctx.mul(ctx.generator(2), c3));
  }
  if (n == 3) {
    std::set<int> grades;
    for (const auto& w : all_words(3, 3))
      for (int g : ctx.word(w).grades()) grades.insert(g);
    s.info("grade-profile", "grades of words of length <= 3 in b1, b2, b3", grades_text({grades.begin(), grades.end()}));
  }
  if (n >= 2) {
    Algebra sym(BilinearForm::hecke(n).symmetric_part());
    const auto eqs = hecke_relations(sym);
    for (const auto& eq : eqs)
      if (eq.id.starts_with("braid")) s.equal("under-g." + eq.id, eq.statement + " with B replaced by G", eq.lhs, eq.rhs, Expect::fails);
    s.guarded("under-g.b1-squared", "b1*b1 with B replaced by G", [&] {
      Multivector g1 = hecke_generator(sym, 1);
      s.info("under-g.b1-squared", "b1*b1 with B replaced by G", s.list().specialize(cl_mul(g1, g1, sym)).to_string());
    });
  }
}

// ---------------------------------------------------------------- young

void young_suite(Section s) {
  HeckeContext ctx(2);
  const Algebra& alg = ctx.algebra();
  std::vector<YoungOp> ops;
  s.guarded("operators", "Young operators are idempotent", [&] {
    ops = young_operators(ctx);
    s.require("operators", "Young operators are idempotent", true, "4 operators");
  });
  if (ops.empty()) return;
  for (const auto& eq : verify_young(ops, ctx)) s.equal(eq);
  s.guarded("printed-13_2", "derived Y13|2 minus printed Y13|2", [&] {
    s.info("printed-13_2", "derived Y13|2 minus printed Y13|2",
           s.list().specialize(ops[2].value - printed_y13_2(ctx)).to_string());
  });
  for (const auto& y : ops)
    s.require("even." + slug(y.label), "Y" + to_string(y.label) + " is even and fixed by the grade involution",
              y.value.is_even() && grade_involute(y.value) == y.value, grades_text(y.value.grades()));

  std::vector<IdealBasis> ideals;
  s.guarded("regular", "the four ideals form a 6-dimensional b1, b2-stable direct sum", [&] {
    ideals = regular_decomposition(ctx);
    s.require("regular", "the four ideals form a 6-dimensional b1, b2-stable direct sum", true, "dim 6");
  });
  if (ideals.size() != 4) return;
  const std::size_t expected_dims[] = {1, 2, 2, 1};
  std::size_t total = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& ideal = ideals[k];
    total += ideal.dim();
    s.require("ideal.dim." + slug(ideal.label), "dim of the Y" + to_string(ideal.label) + " ideal is " + std::to_string(expected_dims[k]),
              ideal.dim() == expected_dims[k], std::to_string(ideal.dim()));
    Matrix m1 = ideal_action(ctx, ctx.generator(1), ideal), m2 = ideal_action(ctx, ctx.generator(2), ideal);
    Matrix m12 = ideal_action(ctx, ctx.word({1, 2}), ideal);
    s.require("ideal.rep." + slug(ideal.label), "M(b1)M(b2) = M(b1*b2) on the Y" + to_string(ideal.label) + " ideal",
              m1 * m2 == m12, (m1 * m2).to_string());
  }
  s.require("ideal.total", "ideal dimensions sum to 6", total == 6, std::to_string(total));
  if (ideals[1].dim() == 2)
    s.equal("ideal.basis.12_3", "second basis vector of the Y12|3 ideal is b2*Y12|3", ideals[1].vectors[1],
            ctx.mul(ctx.generator(2), ops[1].value));

  std::vector<RatFunc> mu;
  for (const auto& ideal : ideals) {
    const std::string st = "C3 acts on the Y" + to_string(ideal.label) + " ideal as a scalar";
    s.guarded("class-sum." + slug(ideal.label), st, [&] {
      mu.push_back(class_sum_eigenvalue(ctx, ideal));
      s.value("class-sum." + slug(ideal.label), st, mu.back());
    });
  }
  if (mu.size() == 4) {
    s.equal("class-sum.sym.value", "C3 scalar on Ysym = 2 + 1/q", mu[0], RatFunc::parse("2+1/q"));
    s.equal("class-sum.asym.value", "C3 scalar on Yasym = -2q - q^2", mu[3], RatFunc::parse("-2*q-q^2"));
    s.equal("class-sum.mixed.equal", "C3 scalars on Y12|3 and Y13|2 agree", mu[1], mu[2]);
    std::string values;
    bool ok = true;
    const long expected[] = {3, 0, 0, -3};
    for (std::size_t k = 0; k < 4; ++k) {
      RatFunc v = q_one().specialize(mu[k]);
      values += (k ? ", " : "") + v.to_string();
      ok = ok && v == RatFunc(expected[k]);
    }
    s.require("class-sum.q1", "C3 scalars at q=1 are 3, 0, 0, -3", ok, values);
  }

  for (const auto& eq : annihilator_check(ctx)) s.equal("annihilator." + eq.id, eq.statement, eq.lhs, eq.rhs);

  for (YoungLabel label : {YoungLabel::y12_3, YoungLabel::y13_2}) {
    const std::string tag = "spinor." + slug(label), name = "S" + to_string(label);
    SpinorSpace sp = spinor_space(ctx, {label, ops[label == YoungLabel::y12_3 ? 1 : 2].value});
    if (label == YoungLabel::y12_3) s.equal("spinor.u-squared", "u*u = (1+q)*1", ctx.mul(sp.u, sp.u), alg.scalar(RatFunc::parse("1+q")));
    std::size_t d = rank(blade_coordinates(sp.vectors));
    s.require(tag + ".dim", "dim " + name + " = 4 (u adjoined on the left)", d == 4, std::to_string(d));
    s.guarded(tag + ".faithful", "even subalgebra acts on " + name + " with rank 8", [&] {
      std::size_t r = faithfulness_rank(ctx, sp.vectors);
      s.require(tag + ".faithful", "even subalgebra acts on " + name + " with rank 8", r == 8, std::to_string(r));
    });
    if (label == YoungLabel::y12_3) {
      for (const auto& a : even_basis(ctx)) {
        if (a.grades() != std::vector<int>{2}) continue;
        const std::string bl = a.to_string().substr(2);
        s.guarded(tag + ".acts." + bl, bl + " acts nonzero on " + name, [&] {
          Matrix m = left_mult_matrix(a, sp.vectors, alg, sp.vectors);
          s.require(tag + ".acts." + bl, bl + " acts nonzero on " + name, !m.is_zero(), m.is_zero() ? "zero operator" : "nonzero");
        });
      }
      SpinorSpace right = spinor_space(ctx, {label, ops[1].value}, Side::right);
      s.guarded("spinor.12_3.right-adjoined", "even subalgebra rank on {Y, b2Y, Yu, b2Yu}", [&] {
        s.info("spinor.12_3.right-adjoined", "even subalgebra rank on {Y, b2Y, Yu, b2Yu}",
               "rank " + std::to_string(faithfulness_rank(ctx, right.vectors)));
      });
    }
  }
  std::vector<Multivector> reg;
  for (const auto& ideal : ideals) reg.insert(reg.end(), ideal.vectors.begin(), ideal.vectors.end());
  Matrix e12 = left_mult_matrix(Multivector::from_indices(4, {1, 2}), reg, alg);
  s.require("spinor.sreg.e12", "e12 acts as zero on S_reg", e12.is_zero(),
            e12.is_zero() ? "zero operator" : "e12*Yasym = " + ctx.mul(Multivector::from_indices(4, {1, 2}), ops[3].value).to_string());

  for (const auto& [point, guard] : std::vector<std::pair<const char*, const char*>>{
           {"q=-1", "1+q=0"}, {"q=root(q^2+q+1)", "q^2+q+1=0"}, {"q=0", "q=0"}, {"q=1,l=0", "l=0"}}) {
    std::string got = "<no guard>";
    try {
      Point p = Point::parse(point);
      for (const auto& y : ops) at_point(y.value, p);
      at_point(class_sum(ctx), p);
    } catch (const GuardFailure& g) {
      got = g.guard();
    }
    s.require(std::string("guard.") + guard, std::string("Young operators and C3 at ") + point + " fail with guard " + guard,
              got == guard, got);
  }
}

// ---------------------------------------------------------------- versor

void versor_suite(Section s, int eps) {
  HeckeContext ctx(2);
  const Algebra& alg = ctx.algebra();
  const RatFunc q = RatFunc::q();
  for (int i : {1, 2}) {
    const Multivector& g = ctx.generator(i);
    const std::string bi = b(i);
    s.equal("tilde." + bi, "~" + bi + " = (1-q) - " + bi, reversion(g, alg), alg.scalar(RatFunc(1) - q) - g);
    for (int e : {-1, 1}) {
      std::string es = e < 0 ? "-1" : "+1";
      s.equal("bar." + bi + ".eps" + es, bi + " * (eps ~" + bi + ") = -eps*q at eps=" + es,
              ctx.mul(g, alpha_eps_linear(g, e, ctx)), alg.scalar(RatFunc(-e) * q));
      for (Sign sign : {Sign::plus, Sign::minus}) {
        Multivector p = projector(ctx, i, sign), other = projector(ctx, i, sign == Sign::plus ? Sign::minus : Sign::plus);
        std::string ps = sign == Sign::plus ? "+" : "-", os = sign == Sign::plus ? "-" : "+";
        s.equal("alpha." + bi + ps + ".eps" + es, "alpha_eps(P" + ps + "(" + bi + ")) = eps*P" + os + " at eps=" + es,
                alpha_eps_linear(p, e, ctx), RatFunc(e) * other);
      }
    }
    s.guarded("inverse." + bi, bi + " * (" + bi + " - (1-q))/q = 1 on both sides", [&] {
      Multivector inv = generator_inverse(ctx, i);
      s.equal("inverse." + bi + ".right", bi + " * (" + bi + " - (1-q))/q = 1", ctx.mul(g, inv), alg.one());
      s.equal("inverse." + bi + ".left", "(" + bi + " - (1-q))/q * " + bi + " = 1", ctx.mul(inv, g), alg.one());
      s.equal("inverse." + bi + ".q1", bi + "^-1 = " + bi + " at q=1,l=1", at_point(inv, q_one()), at_point(g, q_one()));
    });
  }
  s.equal("adjoint.b1", "adjoint(b1) at eps=-1 is (q-1) + b1", adjoint({RatFunc(1), {1}, -1}, ctx), alg.scalar(q - RatFunc(1)) + ctx.generator(1));
  s.equal("adjoint.empty", "adjoint of the empty word is 1", adjoint({RatFunc(1), {}, eps}, ctx), alg.one());

  const auto words = all_words(2, 4);
  s.guarded("adjoint.contravariant", "adjoint(xy) = adjoint(y) adjoint(x), |x|+|y| <= 4", [&] {
    std::size_t count = 0;
    std::optional<std::string> bad;
    for (const auto& x : words)
      for (const auto& y : words) {
        if (x.size() + y.size() > 4 || bad) continue;
        std::vector<int> xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        VersorWord wx{RatFunc(1), x, eps}, wy{RatFunc(1), y, eps}, wxy{RatFunc(1), xy, eps};
        ++count;
        if (adjoint(wxy, ctx) != ctx.mul(adjoint(wy, ctx), adjoint(wx, ctx))) bad = wxy.to_string();
      }
    s.require("adjoint.contravariant", "adjoint(xy) = adjoint(y) adjoint(x), |x|+|y| <= 4", !bad,
              bad ? "fails at " + *bad : std::to_string(count) + " pairs");
  });

  s.guarded("phi.closed-form", "phi(w, w) = (-eps*q)^m for words of length m <= 4", [&] {
    std::optional<std::string> bad;
    for (const auto& w : words) {
      VersorWord vw{RatFunc(1), w, eps};
      Multivector expected = alg.scalar((RatFunc(-eps) * q).pow(static_cast<int>(w.size())));
      if (!bad && phi(vw, vw, ctx) != expected) bad = vw.to_string();
    }
    s.require("phi.closed-form", "phi(w, w) = (-eps*q)^m for words of length m <= 4", !bad,
              bad ? "fails at " + *bad : std::to_string(words.size()) + " words");
  });
  s.guarded("phi.orders", "a*adjoint(a) and adjoint(a)*a for words of length <= 3", [&] {
    std::string out;
    for (const auto& w : all_words(2, 3)) {
      VersorWord vw{RatFunc(1), w, eps};
      Multivector a = eval(vw, ctx), adj = adjoint(vw, ctx);
      out += (out.empty() ? "" : "; ") + vw.to_string() + ": " + s.list().specialize(ctx.mul(a, adj)).to_string() + " | " +
             s.list().specialize(ctx.mul(adj, a)).to_string();
    }
    s.info("phi.orders", "a*adjoint(a) and adjoint(a)*a for words of length <= 3", out);
  });
  s.equal("phi.b1", "phi(b1, b1) = q at eps=-1", phi({RatFunc(1), {1}, -1}, {RatFunc(1), {1}, -1}, ctx), alg.scalar(q));

  s.guarded("gamma.normalized", "phi(w, w) = 1 for every normalized word of length <= 4 (eps=-1)", [&] {
    std::optional<std::string> bad;
    for (const auto& w : words) {
      VersorWord vw = normalize_word({RatFunc(1), w, -1});
      Membership m = gamma_membership(vw, ctx);
      if (!bad && (!m.member || s.list().specialize(m.certificate) != alg.one())) bad = vw.to_string();
    }
    s.require("gamma.normalized", "phi(w, w) = 1 for every normalized word of length <= 4 (eps=-1)", !bad,
              bad ? "fails at " + *bad : std::to_string(words.size()) + " words");
  });
  s.guarded("gamma.unnormalized", "unnormalized b1 is not in the group", [&] {
    Membership m = gamma_membership(VersorWord{RatFunc(1), {1}, -1}, ctx);
    s.require("gamma.unnormalized", "unnormalized b1 is not in the group", !m.member, "phi = " + m.certificate.to_string());
  });
  for (int i : {1, 2}) {
    Multivector g = eval(normalize_word({RatFunc(1), {i}, -1}), ctx);
    s.equal("gamma.q1." + b(i), "normalized " + b(i) + " squares to 1 at q=1,l=1", at_point(ctx.mul(g, g), q_one()), alg.one());
  }
  {
    Membership m = gamma_membership(alg.e(1), 1, eps, ctx);
    s.require("gamma.odd.e1", "e1 is even, as group membership requires", m.even, "e1 has grade 1", Expect::fails);
  }

  s.equal("conjugate.b1.b1", "b1 conjugates b1 to itself", conjugate({RatFunc(1), {1}, eps}, ctx.generator(1), ctx), ctx.generator(1));
  s.equal("conjugate.b1.one", "b1 conjugates 1 to 1", conjugate({RatFunc(1), {1}, eps}, alg.one(), ctx), alg.one());
  s.equal("conjugate.b1.b2.q1", "b1 b2 b1^-1 = b1 b2 b1 at q=1,l=1",
          at_point(conjugate({RatFunc(1), {1}, eps}, ctx.generator(2), ctx), q_one()), at_point(ctx.word({1, 2, 1}), q_one()));
  for (int i : {1, 2})
    for (int j : {1, 2}) {
      if (i == j) continue;
      s.info("conjugate.grades." + b(i) + "." + b(j), "grade profile of " + b(i) + " " + b(j) + " " + b(i) + "^-1",
             grades_text(conjugate({RatFunc(1), {i}, eps}, ctx.generator(j), ctx).grades()));
    }
  s.guarded("word.text", "versor words round-trip through text", [&] {
    bool ok = true;
    for (const auto& w : words) {
      VersorWord vw{RatFunc::s().pow(-static_cast<int>(w.size())), w, eps};
      ok = ok && VersorWord::parse(vw.to_string()) == vw;
    }
    s.require("word.text", "versor words round-trip through text", ok, std::to_string(words.size()) + " words");
  });
}

void require_n(const std::string& target, int n, std::initializer_list<int> allowed) {
  for (int a : allowed)
    if (a == n) return;
  throw InvalidArgument("verify " + target + " does not support n = " + std::to_string(n));
}

}  // namespace

Report run_suite(const std::string& target, const SuiteOptions& options) {
  if (options.eps != 1 && options.eps != -1) throw InvalidArgument("eps must be +1 or -1");
  const auto start = std::chrono::steady_clock::now();
  CheckList list(options.at);
  if (target == "clifford-kernel") {
    require_n(target, options.n, {1, 2, 3});
    kernel_suite(Section(list, "clifford"), options.n);
  } else if (target == "hecke") {
    require_n(target, options.n, {1, 2, 3});
    hecke_suite(Section(list, options.symmetrize_b ? "hecke.symmetrized" : "hecke"), options.n, options.symmetrize_b);
  } else if (target == "young") {
    require_n(target, options.n, {2});
    young_suite(Section(list, "young"));
  } else if (target == "versor") {
    require_n(target, options.n, {2});
    versor_suite(Section(list, "versor"), options.eps);
  } else if (target == "all") {
    require_n(target, options.n, {2});
    kernel_suite(Section(list, "clifford"), 2);
    hecke_suite(Section(list, "hecke"), 2, false);
    if (options.symmetrize_b) hecke_suite(Section(list, "hecke.symmetrized"), 2, true);
    young_suite(Section(list, "young"));
    versor_suite(Section(list, "versor"), options.eps);
  } else {
    throw InvalidArgument("unknown target '" + target + "'");
  }
  Report r;
  r.suite = target;
  r.n = options.n;
  r.eps = options.eps;
  if (options.at) r.point = options.at->to_string();
  r.checks = list.checks();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SymbolTable standard_symbols(const HeckeContext& ctx) {
  SymbolTable t;
  for (int i = 1; i <= ctx.n(); ++i) t.emplace(b(i), ctx.generator(i));
  if (ctx.n() == 2) {
    auto ops = young_operators(ctx);
    t.emplace("Ysym", ops[0].value);
    t.emplace("Y12_3", ops[1].value);
    t.emplace("Y13_2", ops[2].value);
    t.emplace("Yasym", ops[3].value);
    t.emplace("u", ctx.algebra().e(1) + ctx.algebra().e(3));
    t.emplace("C3", class_sum(ctx));
  }
  return t;
}

}  // namespace qcl
