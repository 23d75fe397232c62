#include "qclifford/young.hpp"

#include "qclifford/errors.hpp"

namespace qcl {

namespace {

RatFunc rf(const char* text) { return RatFunc::parse(text); }

Multivector blade(const HeckeContext& ctx, std::initializer_list<int> idx) {
  return Multivector::from_indices(ctx.algebra().dim(), idx);
}

void require_n2(const HeckeContext& ctx, const char* what) {
  if (ctx.n() != 2) throw InvalidArgument(std::string(what) + " needs n = 2, got n = " + std::to_string(ctx.n()));
}

}  // namespace

std::string to_string(YoungLabel label) {
  switch (label) {
    case YoungLabel::sym: return "sym";
    case YoungLabel::y12_3: return "12|3";
    case YoungLabel::y13_2: return "13|2";
    case YoungLabel::asym: return "asym";
  }
  return "?";
}

std::string slug(YoungLabel label) {
  std::string s = to_string(label);
  for (char& c : s)
    if (c == '|') c = '_';
  return s;
}

std::vector<YoungOp> young_operators(const HeckeContext& ctx) {
  require_n2(ctx, "young_operators");
  const Multivector one = ctx.algebra().one(), e13 = blade(ctx, {1, 3}), e24 = blade(ctx, {2, 4}),
                    e14 = blade(ctx, {1, 4}), e23 = blade(ctx, {2, 3}), e1234 = blade(ctx, {1, 2, 3, 4});
  Multivector sym = (RatFunc(1) / rf("q^2+q+1")) * (rf("q^2") * one + rf("q") * (e13 + e24) - e1234);
  Multivector y12 = (RatFunc(1) / rf("(q+1)*(q^2+q+1)")) *
                    (rf("q") * one + e13 - rf("q*(q+1)") * e24 + rf("q+1") * e1234);
  Multivector asym = (RatFunc(1) / rf("q^2+q+1")) *
                     (rf("1-q") * one - e13 - e24 + rf("l") * e14 + rf("q/l") * e23 - e1234);
  Multivector y13 = one - sym - y12 - asym;
  std::vector<YoungOp> ops{{YoungLabel::sym, sym}, {YoungLabel::y12_3, y12}, {YoungLabel::y13_2, y13},
                           {YoungLabel::asym, asym}};
  for (const auto& y : ops)
    if (ctx.mul(y.value, y.value) != y.value) throw Error("Y" + to_string(y.label) + " is not idempotent");
  return ops;
}

Multivector printed_y13_2(const HeckeContext& ctx) {
  require_n2(ctx, "printed_y13_2");
  const Multivector one = ctx.algebra().one(), e13 = blade(ctx, {1, 3}), e24 = blade(ctx, {2, 4}),
                    e14 = blade(ctx, {1, 4}), e1234 = blade(ctx, {1, 2, 3, 4});
  return (RatFunc(1) / rf("(q+1)*(q^2+q+1)")) *
         (rf("q*(2*q+1)") * one - rf("q^2") * e13 + rf("q+1") * e24 - rf("l*(q+1)") * e14 - rf("q^2") * e13 +
          rf("q+1") * e1234);
}

std::vector<Equation> verify_young(const std::vector<YoungOp>& ops, const HeckeContext& ctx) {
  std::vector<Equation> out;
  Multivector sum(ctx.algebra().dim());
  for (const auto& a : ops) {
    for (const auto& b : ops) {
      std::string la = "Y" + to_string(a.label), lb = "Y" + to_string(b.label);
      bool same = a.label == b.label;
      out.push_back({"product." + slug(a.label) + "." + slug(b.label),
                     la + "*" + lb + " = " + (same ? lb : "0"), ctx.mul(a.value, b.value),
                     same ? b.value : Multivector(ctx.algebra().dim())});
    }
    sum += a.value;
  }
  out.push_back({"complete", "Ysym + Y12|3 + Y13|2 + Yasym = 1", sum, ctx.algebra().one()});
  return out;
}

IdealBasis left_ideal(const HeckeContext& ctx, const YoungOp& y) {
  std::vector<Multivector> candidates;
  for (const auto& w : std::vector<std::vector<int>>{{}, {2}, {1}, {1, 2}, {2, 1}, {1, 2, 1}})
    candidates.push_back(ctx.mul(ctx.word(w), y.value));
  return {y.label, independent_subset(candidates)};
}

Matrix ideal_action(const HeckeContext& ctx, const Multivector& a, const IdealBasis& ideal) {
  return left_mult_matrix(a, ideal.vectors, ctx.algebra(), ideal.vectors);
}

RatFunc class_sum_eigenvalue(const HeckeContext& ctx, const IdealBasis& ideal) {
  Matrix m = ideal_action(ctx, class_sum(ctx), ideal);
  RatFunc lambda = m(0, 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != (r == c ? lambda : RatFunc()))
        throw Error("C3 does not act as a scalar on the " + to_string(ideal.label) + " ideal");
  return lambda;
}

std::vector<IdealBasis> regular_decomposition(const HeckeContext& ctx) {
  std::vector<IdealBasis> ideals;
  std::vector<Multivector> all;
  for (const auto& y : young_operators(ctx)) {
    ideals.push_back(left_ideal(ctx, y));
    all.insert(all.end(), ideals.back().vectors.begin(), ideals.back().vectors.end());
  }
  if (all.size() != 6 || rank(blade_coordinates(all)) != 6)
    throw Error("the four ideals do not span a 6-dimensional direct sum");
  for (const auto& ideal : ideals)
    for (int i : {1, 2}) {
      try {
        ideal_action(ctx, ctx.generator(i), ideal);
      } catch (const NotInSpan&) {
        throw Error("the " + to_string(ideal.label) + " ideal is not stable under b" + std::to_string(i));
      }
    }
  return ideals;
}

std::vector<Equation> annihilator_check(const HeckeContext& ctx) {
  const int dim = ctx.algebra().dim();
  const Multivector e12 = blade(ctx, {1, 2}), e34 = blade(ctx, {3, 4});
  std::vector<Equation> out;
  for (const auto& ideal : regular_decomposition(ctx)) {
    const std::string y = "Y" + to_string(ideal.label);
    for (std::size_t k = 0; k < ideal.dim(); ++k) {
      std::string v = k == 0 ? y : "b2*" + y;
      std::string id = slug(ideal.label) + (k == 0 ? "" : ".b2");
      out.push_back({"e12." + id, "e12*" + v + " = 0", ctx.mul(e12, ideal.vectors[k]), Multivector(dim)});
      out.push_back({"e34." + id, "e34*" + v + " = 0", ctx.mul(e34, ideal.vectors[k]), Multivector(dim)});
    }
  }
  Multivector ysym = young_operators(ctx).front().value;
  out.push_back({"control.e13.sym", "e13*Ysym = Ysym", ctx.mul(blade(ctx, {1, 3}), ysym), ysym});
  return out;
}

SpinorSpace spinor_space(const HeckeContext& ctx, const YoungOp& y, Side side) {
  require_n2(ctx, "spinor_space");
  Multivector u = ctx.algebra().e(1) + ctx.algebra().e(3);
  Multivector y2 = ctx.mul(ctx.generator(2), y.value);
  SpinorSpace s{y.label, side, u, {y.value, y2}};
  if (side == Side::left) {
    s.vectors.push_back(ctx.mul(u, y.value));
    s.vectors.push_back(ctx.mul(u, y2));
  } else {
    s.vectors.push_back(ctx.mul(y.value, u));
    s.vectors.push_back(ctx.mul(y2, u));
  }
  return s;
}

std::vector<Multivector> even_basis(const HeckeContext& ctx) {
  std::vector<Multivector> out;
  for (Blade b : all_blades(ctx.algebra().dim()))
    if (b.grade() % 2 == 0) out.push_back(Multivector::blade(ctx.algebra().dim(), b, RatFunc(1)));
  return out;
}

std::size_t faithfulness_rank(const HeckeContext& ctx, const std::vector<Multivector>& space) {
  std::vector<Vector> columns;
  for (const auto& a : even_basis(ctx)) {
    Matrix m = left_mult_matrix(a, space, ctx.algebra(), space);
    Vector flat;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) flat.push_back(m(r, c));
    columns.push_back(std::move(flat));
  }
  return rank(Matrix::from_columns(columns));
}

}  // namespace qcl
