#pragma once

// Exact scalars of the kernel: the rational function field Q(s, l) with the
// convention q := s^2. `l` is the second deformation parameter.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Polynomial in Q[s, l]. Terms are kept sorted by descending graded
/// lexicographic order (s > l) with no zero coefficients.
class Poly {
 public:
  struct Term {
    int s = 0;
    int l = 0;
    Rational coeff;
  };

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Rational& c, int deg_s, int deg_l);
  static Poly var_s() { return monomial(1, 1, 0); }
  static Poly var_q() { return monomial(1, 2, 0); }
  static Poly var_l() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int degree_s() const;
  int degree_l() const;
  int total_degree() const;
  bool has_odd_s() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;

  friend bool operator==(const Poly& a, const Poly& b);

  Rational evaluate(const Rational& s0, const Rational& l0) const;
  /// Substitutes s^2 -> q0; requires every s exponent to be even.
  Rational evaluate_q(const Rational& q0, const Rational& l0) const;

  /// Quotient when `d` divides this polynomial exactly, otherwise nullopt.
  std::optional<Poly> divide_exact(const Poly& d) const;

  /// Ascending order, q for even powers of s: "1-q", "1+q+q^2", "s/2".
  std::string to_string() const;

  static Poly from_terms(std::vector<Term> terms);

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

/// Monic greatest common divisor (leading coefficient 1 under grlex).
/// gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Element of Q(s, l) in canonical reduced form: gcd(num, den) = 1 and den
/// monic. Equal values have identical representations.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c)  // NOLINT(google-explicit-constructor)
      : num_(c), den_(1) {}
  RatFunc(const Poly& p)  // NOLINT(google-explicit-constructor)
      : num_(p), den_(1) {}

  /// Throws DivisionByZero for a zero denominator.
  static RatFunc normalize(Poly num, Poly den);

  static RatFunc s() { return Poly::var_s(); }
  static RatFunc q() { return Poly::var_q(); }
  static RatFunc l() { return Poly::var_l(); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  /// The rational value; only meaningful when is_constant().
  Rational constant_value() const;
  bool has_odd_s() const { return num_.has_odd_s() || den_.has_odd_s(); }

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(int e) const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// True when the rendered form needs parentheses as a product factor.
  bool is_compound() const;
  std::string to_string() const;
  /// Accepts numbers, `s`, `q`, `l`, `+ - * / ^` and parentheses.
  static RatFunc parse(std::string_view text);

 private:
  RatFunc(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

/// Exact substitution s -> s0, l -> l0. Throws GuardFailure naming the
/// vanishing factor ("q=0", "l=0", "1+q=0", "q^2+q+1=0").
Rational evaluate(const RatFunc& a, const Rational& s0, const Rational& l0);

/// Name of the guard that vanishes for denominator `den` at (q0, l0), or the
/// rendered denominator when none of the standard guards matches.
std::string guard_name(const Poly& den, const Rational& q0, const Rational& l0);

/// A specialization point for (q, l). q is either rational, or a root of an
/// irreducible polynomial in q (values then live in Q[q]/(m)).
class Point {
 public:
  static Point rational(const Rational& q0, const Rational& l0);
  static Point from_s(const Rational& s0, const Rational& l0);
  /// `minimal` must be a polynomial in q alone (even powers of s, no l).
  static Point algebraic(const Poly& minimal, const Rational& l0);
  /// "q=1,l=1", "s=1/2,l=3", "q=root(q^2+q+1)", "q=-1" (l defaults to 1).
  static Point parse(std::string_view text);

  bool is_algebraic() const { return minimal_.has_value(); }
  const Rational& l() const { return l0_; }
  const std::optional<Rational>& s() const { return s0_; }
  const Rational& q() const { return q0_; }

  /// Image of `a` at this point: a constant, or a reduced residue in q for an
  /// algebraic point. Throws GuardFailure when a denominator vanishes.
  RatFunc specialize(const RatFunc& a) const;
  std::string to_string() const;

 private:
  Rational q0_;
  Rational l0_;
  std::optional<Rational> s0_;
  std::optional<Poly> minimal_;
};

}  // namespace qcl
