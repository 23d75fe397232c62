#pragma once

// Grassmann algebra over a vector space of dimension 2n: basis blades,
// multivectors with exact coefficients, wedge product and grading.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qclifford/coeff.hpp"

namespace qcl {

/// Basis monomial e_{i1 ∧ ... ∧ ik} with ascending indices, stored as a bit
/// mask (bit i-1 <-> e_i). The empty mask is the unit scalar blade.
struct Blade {
  std::uint32_t mask = 0;

  int grade() const { return __builtin_popcount(mask); }
  bool contains(int index) const { return (mask >> (index - 1)) & 1u; }
  std::vector<int> indices() const;
  /// "1", "e13", or "e1,13" when `comma_separated`.
  std::string to_string(bool comma_separated = false) const;

  friend bool operator==(Blade a, Blade b) { return a.mask == b.mask; }
  /// Grade first, then lexicographic on the ascending index lists.
  friend std::strong_ordering operator<=>(Blade a, Blade b);
};

/// Sign of e_S ∧ e_T relative to e_{S∪T}; 0 when S and T overlap.
int wedge_sign(Blade a, Blade b);

/// Finite sum of blades with RatFunc coefficients over ambient dimension
/// `dim` (= 2n). Zero coefficients are never stored, so equality of values
/// is equality of the canonical maps.
class Multivector {
 public:
  using Terms = std::map<Blade, RatFunc>;

  explicit Multivector(int dim);
  static Multivector scalar(int dim, const RatFunc& c);
  static Multivector blade(int dim, Blade b, const RatFunc& c = RatFunc(1));
  /// e_{i1} ∧ e_{i2} ∧ ... for indices in any order (sign applied).
  static Multivector from_indices(int dim, const std::vector<int>& indices);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(Blade b) const;
  RatFunc scalar_part() const { return coefficient(Blade{}); }
  bool is_scalar() const;
  /// Sorted distinct grades present.
  std::vector<int> grades() const;
  bool is_even() const;

  void add_term(Blade b, const RatFunc& c);
  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const RatFunc& c, const Multivector& v);
  friend Multivector operator*(const Multivector& v, const RatFunc& c) { return c * v; }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// `q*1 + (1-q)*e13`, ascending blade order, "0" for zero.
  std::string to_string() const;

 private:
  int dim_;
  Terms terms_;
};

/// Throws DimensionMismatch unless a and b share the ambient dimension.
void require_same_dim(const Multivector& a, const Multivector& b);

Multivector wedge(const Multivector& u, const Multivector& v);
Multivector grade_project(const Multivector& u, int k);
/// (-1)^k on the grade-k part.
Multivector grade_involute(const Multivector& u);

/// Applies `f` to every coefficient, dropping results that vanish.
template <class F>
Multivector map_coefficients(const Multivector& u, F&& f) {
  Multivector r(u.dim());
  for (const auto& [b, c] : u.terms()) r.add_term(b, f(c));
  return r;
}

/// All 2^dim basis blades in ascending order.
std::vector<Blade> all_blades(int dim);

}  // namespace qcl
