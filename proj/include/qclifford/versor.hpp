#pragma once

// Words in the Hecke generators, their ε-adjoint, the Φ form, membership in
// the q-spin group and the conjugation action.

#include <string>
#include <string_view>
#include <vector>

#include "qclifford/hecke.hpp"

namespace qcl {

struct VersorWord {
  RatFunc c = RatFunc(1);
  std::vector<int> letters;
  int eps = -1;

  std::size_t length() const { return letters.size(); }
  /// `c * b1.b2.b1 [eps=-1]`; the empty word is written `1`.
  std::string to_string() const;
  static VersorWord parse(std::string_view text);
  friend bool operator==(const VersorWord&, const VersorWord&) = default;
};

/// c b_{i1} ∘ ... ∘ b_{im}.
Multivector eval(const VersorWord& w, const HeckeContext& ctx);

/// ε^m rev(eval(w)).
Multivector adjoint(const VersorWord& w, const HeckeContext& ctx);

/// ε rev(a).
Multivector alpha_eps_linear(const Multivector& a, int eps, const HeckeContext& ctx);

/// (b_i - (1-q))/q; throws Error unless it is a two-sided inverse.
Multivector generator_inverse(const HeckeContext& ctx, int i);

/// adjoint(x) ∘ eval(y); both words must carry the same ε.
Multivector phi(const VersorWord& x, const VersorWord& y, const HeckeContext& ctx);

/// Sets c = s^{-m}; requires ε = -1.
VersorWord normalize_word(VersorWord w);

struct Membership {
  bool even = false;
  bool member = false;
  /// Φ(x, x); zero when the element is not even.
  Multivector certificate = Multivector(0);
};

Membership gamma_membership(const VersorWord& w, const HeckeContext& ctx);

/// Membership test for an arbitrary element read as a word of length m.
Membership gamma_membership(const Multivector& x, std::size_t m, int eps, const HeckeContext& ctx);

/// adjoint(w) / Φ(w, w); throws Error when Φ(w, w) is not a nonzero scalar.
Multivector word_inverse(const VersorWord& w, const HeckeContext& ctx);

/// eval(w) ∘ v ∘ eval(w)^{-1}.
Multivector conjugate(const VersorWord& w, const Multivector& v, const HeckeContext& ctx);

/// All words over {1..n} of length 0..max_length, in shortlex order.
std::vector<std::vector<int>> all_words(int n, std::size_t max_length);

}  // namespace qcl
