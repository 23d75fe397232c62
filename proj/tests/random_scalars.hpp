#pragma once

// Generators shared by the property tests.

#include <random>
#include <utility>

#include "qclifford/coeff.hpp"

namespace qcl::test {

inline Poly random_poly(std::mt19937_64& rng, bool odd_s = false, int max_deg = 2) {
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, max_deg), terms(1, 3);
  std::vector<Poly::Term> out;
  int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    int ds = deg(rng);
    out.push_back({odd_s ? ds : 2 * ds, deg(rng), Rational(coeff(rng))});
  }
  return Poly::from_terms(std::move(out));
}

inline RatFunc random_ratfunc(std::mt19937_64& rng, bool odd_s = false) {
  Poly num = random_poly(rng, odd_s);
  Poly den;
  do den = random_poly(rng, odd_s); while (den.is_zero());
  return RatFunc::normalize(num, den);
}

inline Rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-10000, 10000), den(1, 10000);
  Rational r;
  do r = Rational(num(rng), den(rng)); while (nonzero && r == 0);
  r.canonicalize();
  return r;
}

/// Point (s0, l0) with numerators and denominators bounded by 10^4.
inline std::pair<Rational, Rational> random_point(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng, true)};
}

}  // namespace qcl::test
