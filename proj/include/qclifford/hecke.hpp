#pragma once

// Hecke generators b_i = e_i ∧ e_{n+i} in Cl(V, B) and the objects built
// from them: projectors, the six-element basis for n = 2, the class sum.

#include <vector>

#include "qclifford/clifford.hpp"
#include "qclifford/report.hpp"

namespace qcl {

/// e_i ∧ e_{n+i} in an algebra of dimension 2n.
Multivector hecke_generator(const Algebra& alg, int i);

/// Quadratic relation for each generator, commutation for |i-j| >= 2 and
/// the braid relation for neighbours, as equations over the given algebra.
std::vector<Equation> hecke_relations(const Algebra& alg);

class HeckeContext {
 public:
  /// Uses the Hecke form; throws Error if a generator misses the quadratic
  /// relation.
  explicit HeckeContext(int n);

  int n() const { return alg_.n(); }
  const Algebra& algebra() const { return alg_; }
  const Multivector& generator(int i) const;
  const std::vector<Multivector>& generators() const { return gens_; }
  /// b_{i1} ∘ ... ∘ b_{im}; the empty word is 1.
  Multivector word(const std::vector<int>& letters) const;
  Multivector mul(const Multivector& a, const Multivector& b) const { return cl_mul(a, b, alg_); }

 private:
  Algebra alg_;
  std::vector<Multivector> gens_;
};

std::vector<Equation> verify_relations(const HeckeContext& ctx);

enum class Sign { plus, minus };

/// (q + b_i)/(1+q) for plus, (1 - b_i)/(1+q) for minus.
Multivector projector(const HeckeContext& ctx, int i, Sign sign);

/// [1, b1, b2, b1b2, b2b1, b1b2b1]; n = 2 only.
std::vector<Multivector> hecke_basis(const HeckeContext& ctx);

/// b1 + b2 + (1/q) b1b2b1; n = 2 only.
Multivector class_sum(const HeckeContext& ctx);

}  // namespace qcl
