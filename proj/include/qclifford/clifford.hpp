#pragma once

// Clifford algebra of multivectors Cl(V, B) for an arbitrary, possibly
// non-symmetric bilinear form B, realized on the Grassmann basis through the
// Chevalley map x∘ = x⌋ + x∧.

#include <memory>
#include <string>
#include <vector>

#include "qclifford/coeff.hpp"
#include "qclifford/exterior.hpp"

namespace qcl {

/// 2n x 2n matrix B(e_i, e_j) over Q(s, l). Indices are 1-based.
class BilinearForm {
 public:
  /// The Hecke form: B(e_i, e_{n+j}) = q δ_ij and
  /// B(e_{n+i}, e_j) = δ_ij + l δ_{j,i+1} + (q/l) δ_{j,i-1}, zero elsewhere.
  static BilinearForm hecke(int n);
  /// Arbitrary entries, row-major, (2n)^2 of them.
  static BilinearForm generic(int n, std::vector<RatFunc> entries);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  const RatFunc& operator()(int i, int j) const { return entries_[index(i, j)]; }
  /// G = (B + B^T) / 2.
  BilinearForm symmetric_part() const;
  bool is_symmetric() const;
  /// G(x, y) for grade-1 multivectors.
  RatFunc symmetric_value(const Multivector& x, const Multivector& y) const;

  /// Row-major matrix of RatFunc strings: "[[0, 0, q, 0], ...]".
  std::string to_string() const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  BilinearForm(int n, std::vector<RatFunc> entries) : n_(n), entries_(std::move(entries)) {}
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * dim() + (j - 1));
  }
  int n_;
  std::vector<RatFunc> entries_;
};

/// Cl(V, B). Cheap to copy; copies share a thread-safe cache of basis
/// products and reversions.
class Algebra {
 public:
  explicit Algebra(BilinearForm form);

  int n() const;
  int dim() const;
  const BilinearForm& form() const;

  Multivector one() const;
  Multivector scalar(const RatFunc& c) const;
  /// e_i, 1-based.
  Multivector e(int i) const;
  Multivector e(const std::vector<int>& indices) const;

  /// Clifford product of two basis blades.
  const Multivector& blade_product(Blade a, Blade b) const;
  const Multivector& blade_reversion(Blade a) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// e_i ⌋ v for the basis vector e_i.
Multivector contract_vector(int i, const Multivector& v, const BilinearForm& form);
/// Left contraction u ⌋ v: (u ∧ w) ⌋ v = u ⌋ (w ⌋ v), scalars act by
/// multiplication.
Multivector contract(const Multivector& u, const Multivector& v, const BilinearForm& form);
Multivector cl_mul(const Multivector& u, const Multivector& v, const Algebra& alg);
/// Antiautomorphism of ∘ fixing vectors and scalars.
Multivector reversion(const Multivector& u, const Algebra& alg);
/// The scalar c with x∘x = c·1 for a grade-1 x; checked against G(x, x).
RatFunc clifford_map_square(const Multivector& x, const Algebra& alg);

/// Product of several factors, left to right.
Multivector cl_product(const std::vector<Multivector>& factors, const Algebra& alg);
/// u∘v - v∘u.
Multivector commutator(const Multivector& u, const Multivector& v, const Algebra& alg);

}  // namespace qcl
