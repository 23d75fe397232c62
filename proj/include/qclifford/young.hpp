#pragma once

// q-Young operators of H3(q) inside Cl(R^4, B), their left ideals, the
// class-sum spectrum and the four-dimensional spinor spaces.

#include <string>
#include <vector>

#include "qclifford/exactla.hpp"
#include "qclifford/hecke.hpp"

namespace qcl {

enum class YoungLabel { sym, y12_3, y13_2, asym };

/// "sym", "12|3", "13|2", "asym".
std::string to_string(YoungLabel label);
/// Identifier-safe form: "sym", "12_3", "13_2", "asym".
std::string slug(YoungLabel label);

struct YoungOp {
  YoungLabel label;
  Multivector value;
};

/// Y_sym, Y{12|3}, Y{13|2}, Y_asym. Three come from their printed
/// coefficients, Y{13|2} is 1 minus the other three. n = 2 only; each value
/// is checked to be idempotent (Error otherwise).
std::vector<YoungOp> young_operators(const HeckeContext& ctx);

/// Y{13|2} exactly as printed, including its repeated -q^2 e13 term.
Multivector printed_y13_2(const HeckeContext& ctx);

/// Y_l Y_k = δ_lk Y_k for all 16 ordered pairs, then Σ Y_k = 1.
std::vector<Equation> verify_young(const std::vector<YoungOp>& ops, const HeckeContext& ctx);

struct IdealBasis {
  YoungLabel label;
  std::vector<Multivector> vectors;
  std::size_t dim() const { return vectors.size(); }
};

/// Basis of span{A ∘ Y : A in the H3(q) basis}; candidates are taken in the
/// order 1, b2, b1, b1b2, b2b1, b1b2b1 so mixed ideals come out as {Y, b2Y}.
IdealBasis left_ideal(const HeckeContext& ctx, const YoungOp& y);

/// Matrix of left multiplication by `a` on the ideal, in ideal coordinates.
Matrix ideal_action(const HeckeContext& ctx, const Multivector& a, const IdealBasis& ideal);

/// The scalar by which C3 acts on the ideal; Error if the action is not
/// scalar.
RatFunc class_sum_eigenvalue(const HeckeContext& ctx, const IdealBasis& ideal);

/// The four ideals in label order. Throws Error unless their union is
/// independent of dimension 6 and each is stable under b1 and b2.
std::vector<IdealBasis> regular_decomposition(const HeckeContext& ctx);

/// e12 ∘ v = 0 and e34 ∘ v = 0 for all six regular-representation vectors,
/// plus the control e13 ∘ Y_sym = Y_sym.
std::vector<Equation> annihilator_check(const HeckeContext& ctx);

/// Which side u = e1 + e3 is adjoined on.
enum class Side { left, right };

struct SpinorSpace {
  YoungLabel label;
  Side side;
  Multivector u;
  /// Left: {Y, b2Y, u Y, u b2 Y}. Right: {Y, b2Y, Y u, b2 Y u}.
  std::vector<Multivector> vectors;
};

SpinorSpace spinor_space(const HeckeContext& ctx, const YoungOp& y, Side side = Side::left);

/// Even blades of dimension 4: 1, the six bivectors, e1234.
std::vector<Multivector> even_basis(const HeckeContext& ctx);

/// Rank of the linear map from the even subalgebra to operators on the
/// space. Throws NotInSpan when the space is not closed under it.
std::size_t faithfulness_rank(const HeckeContext& ctx, const std::vector<Multivector>& space);

}  // namespace qcl
