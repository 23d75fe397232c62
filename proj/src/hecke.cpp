#include "qclifford/hecke.hpp"

#include <cstdlib>
#include <string>

#include "qclifford/errors.hpp"

namespace qcl {

namespace {

std::string b(int i) { return "b" + std::to_string(i); }

void require_n2(const HeckeContext& ctx, const char* what) {
  if (ctx.n() != 2) throw InvalidArgument(std::string(what) + " needs n = 2, got n = " + std::to_string(ctx.n()));
}

}  // namespace

Multivector hecke_generator(const Algebra& alg, int i) {
  if (i < 1 || i > alg.n())
    throw InvalidArgument("generator index " + std::to_string(i) + " outside 1.." + std::to_string(alg.n()));
  return wedge(alg.e(i), alg.e(alg.n() + i));
}

std::vector<Equation> hecke_relations(const Algebra& alg) {
  const int n = alg.n();
  std::vector<Multivector> g;
  for (int i = 1; i <= n; ++i) g.push_back(hecke_generator(alg, i));
  auto at = [&](int i) -> const Multivector& { return g[static_cast<std::size_t>(i - 1)]; };
  const RatFunc q = RatFunc::q();
  std::vector<Equation> out;
  for (int i = 1; i <= n; ++i)
    out.push_back({"quadratic." + b(i), b(i) + "*" + b(i) + " = (1-q)*" + b(i) + " + q",
                   cl_mul(at(i), at(i), alg), (RatFunc(1) - q) * at(i) + alg.scalar(q)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      out.push_back({"commute." + b(i) + "." + b(j), b(i) + "*" + b(j) + " = " + b(j) + "*" + b(i),
                     cl_mul(at(i), at(j), alg), cl_mul(at(j), at(i), alg)});
  for (int i = 1; i < n; ++i)
    out.push_back({"braid." + b(i) + "." + b(i + 1),
                   b(i) + "*" + b(i + 1) + "*" + b(i) + " = " + b(i + 1) + "*" + b(i) + "*" + b(i + 1),
                   cl_product({at(i), at(i + 1), at(i)}, alg), cl_product({at(i + 1), at(i), at(i + 1)}, alg)});
  return out;
}

HeckeContext::HeckeContext(int n) : alg_(BilinearForm::hecke(n)) {
  const RatFunc q = RatFunc::q();
  for (int i = 1; i <= n; ++i) {
    Multivector g = hecke_generator(alg_, i);
    Multivector defect = cl_mul(g, g, alg_) - (RatFunc(1) - q) * g - alg_.scalar(q);
    if (!defect.is_zero()) throw Error(b(i) + " misses the quadratic relation: " + defect.to_string());
    gens_.push_back(std::move(g));
  }
}

const Multivector& HeckeContext::generator(int i) const {
  if (i < 1 || i > n()) throw InvalidArgument("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n()));
  return gens_[static_cast<std::size_t>(i - 1)];
}

Multivector HeckeContext::word(const std::vector<int>& letters) const {
  Multivector r = alg_.one();
  for (int i : letters) r = cl_mul(r, generator(i), alg_);
  return r;
}

std::vector<Equation> verify_relations(const HeckeContext& ctx) { return hecke_relations(ctx.algebra()); }

Multivector projector(const HeckeContext& ctx, int i, Sign sign) {
  const RatFunc q = RatFunc::q();
  const RatFunc inv = RatFunc(1) / (RatFunc(1) + q);
  const Multivector& g = ctx.generator(i);
  if (sign == Sign::plus) return inv * (ctx.algebra().scalar(q) + g);
  return inv * (ctx.algebra().one() - g);
}

std::vector<Multivector> hecke_basis(const HeckeContext& ctx) {
  require_n2(ctx, "hecke_basis");
  return {ctx.word({}), ctx.word({1}), ctx.word({2}), ctx.word({1, 2}), ctx.word({2, 1}), ctx.word({1, 2, 1})};
}

Multivector class_sum(const HeckeContext& ctx) {
  require_n2(ctx, "class_sum");
  return ctx.word({1}) + ctx.word({2}) + RatFunc(1) / RatFunc::q() * ctx.word({1, 2, 1});
}

}  // namespace qcl
