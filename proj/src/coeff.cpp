#include "qclifford/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

#include "qclifford/errors.hpp"

namespace qcl {

namespace {

// Descending grlex key: total degree first, then the s exponent.
inline std::int64_t order_key(int s, int l) {
  return (static_cast<std::int64_t>(s + l) << 32) | static_cast<std::uint32_t>(s);
}

inline bool before(const Poly::Term& a, const Poly::Term& b) {
  return order_key(a.s, a.l) > order_key(b.s, b.l);
}

// Dense univariate polynomial over Q, ascending coefficients, no trailing
// zeros. Used for the recursive view Q[l][s] and for residues in Q[q].
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly uscale(const UPoly& a, const Rational& c) {
  if (c == 0) return {};
  UPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw DivisionByZero();
  UPoly quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, 0);
  const Rational& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational f = a.back() / lb;
    quot[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    trim(a);
  }
  trim(quot);
  return {quot, a};
}

UPoly umonic(UPoly a) {
  if (a.empty()) return a;
  Rational lc = a.back();
  for (auto& x : a) x /= lc;
  return a;
}

// Scales p to integer coefficients with content 1 (sign kept).
template <class Coeffs>
void make_integer_primitive(Coeffs& coeffs) {
  Integer den_lcm = 1, num_gcd = 0;
  for (const Rational* c : coeffs) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c->get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c->get_num_mpz_t());
  }
  if (num_gcd == 0) return;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale == 1) return;
  for (Rational* c : coeffs) *c *= scale;
}

void uprimitive(UPoly& p) {
  std::vector<Rational*> refs;
  for (auto& c : p)
    if (c != 0) refs.push_back(&c);
  make_integer_primitive(refs);
}

UPoly ugcd(UPoly a, UPoly b) {
  if (a.empty()) return umonic(std::move(b));
  if (b.empty()) return umonic(std::move(a));
  uprimitive(a);
  uprimitive(b);
  while (!b.empty()) {
    UPoly r = udivmod(std::move(a), b).second;
    uprimitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(std::move(a));
}

// Inverse of a modulo m (both over Q), assuming gcd(a, m) = 1.
UPoly uinverse_mod(const UPoly& a, const UPoly& m) {
  UPoly r0 = m, r1 = udivmod(a, m).second;
  UPoly t0, t1{1};
  while (!r1.empty()) {
    auto [quot, rem] = udivmod(r0, r1);
    UPoly t2 = usub(t0, umul(quot, t1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant here.
  return udivmod(uscale(t0, 1 / r0[0]), m).second;
}

// Recursive view: polynomial in s whose coefficients are UPolys in l.
using RPoly = std::vector<UPoly>;

void rtrim(RPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

RPoly to_recursive(const Poly& p) {
  RPoly r(static_cast<std::size_t>(p.degree_s() + 1));
  for (const auto& t : p.terms()) {
    auto& c = r[static_cast<std::size_t>(t.s)];
    if (c.size() <= static_cast<std::size_t>(t.l)) c.resize(static_cast<std::size_t>(t.l) + 1);
    c[static_cast<std::size_t>(t.l)] = t.coeff;
  }
  for (auto& c : r) trim(c);
  rtrim(r);
  return r;
}

Poly from_recursive(const RPoly& r) {
  std::vector<Poly::Term> terms;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j)
      if (r[i][j] != 0) terms.push_back({static_cast<int>(i), static_cast<int>(j), r[i][j]});
  return Poly::from_terms(std::move(terms));
}

UPoly rcontent(const RPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = ugcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

void rprimitive(RPoly& p) {
  std::vector<Rational*> refs;
  for (auto& u : p)
    for (auto& c : u)
      if (c != 0) refs.push_back(&c);
  make_integer_primitive(refs);
}

RPoly rdiv_scalar(const RPoly& p, const UPoly& c) {
  RPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].empty()) r[i] = udivmod(p[i], c).first;
  return r;
}

// Pseudo-remainder of a by b in the main variable s.
RPoly rprem(RPoly a, const RPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    UPoly la = a.back();
    for (auto& c : a) c = umul(c, lb);
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = usub(a[shift + j], umul(la, b[j]));
    rtrim(a);
    rprimitive(a);
  }
  return a;
}

Rational ueval(const UPoly& p, const Rational& x) {
  Rational r;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

// Newton interpolation through (xs[k], ys[k]).
UPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> c) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  UPoly p{c[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    p = umul(p, UPoly{-xs[i], 1});
    if (p.empty()) p.push_back(0);
    p[0] += c[i];
  }
  trim(p);
  return p;
}

int rdeg_l(const RPoly& p) {
  int d = 0;
  for (const auto& c : p) d = std::max(d, udeg(c));
  return d;
}

UPoly rspecialize(const RPoly& p, const Rational& l0) {
  UPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = ueval(p[i], l0);
  trim(r);
  return r;
}

// Pseudo-remainder sequence; only the fallback for primitive_gcd.
RPoly prs_gcd(RPoly ra, RPoly rb) {
  if (ra.size() < rb.size()) std::swap(ra, rb);
  if (rb.size() == 1) return RPoly{UPoly{1}};
  for (;;) {
    RPoly r = rprem(ra, rb);
    if (r.empty()) return rdiv_scalar(rb, rcontent(rb));
    if (r.size() == 1) return RPoly{UPoly{1}};
    ra = std::move(rb);
    rb = rdiv_scalar(r, rcontent(r));
    rprimitive(rb);
  }
}

// gcd of two polynomials of Q[l][s] that are primitive over Q[l], up to a
// unit. The s-gcd is computed at integer values of l and interpolated; the
// leading coefficient is fixed to gcd(lc a, lc b) so the images agree.
RPoly primitive_gcd(const RPoly& a, const RPoly& b) {
  if (a.size() == 1 || b.size() == 1) return RPoly{UPoly{1}};
  const UPoly gamma = ugcd(a.back(), b.back());
  const std::size_t needed = static_cast<std::size_t>(udeg(gamma) + std::min(rdeg_l(a), rdeg_l(b)) + 1);
  const Poly pa = from_recursive(a), pb = from_recursive(b);
  long start = 1;
  for (int attempt = 0; attempt < 6; ++attempt, start = start * 17 + 5) {
    std::vector<Rational> xs;
    std::vector<UPoly> images;
    int best = std::numeric_limits<int>::max();
    for (long x = start; xs.size() < needed; ++x) {
      Rational l0(x);
      if (ueval(a.back(), l0) == 0 || ueval(b.back(), l0) == 0) continue;
      UPoly g = ugcd(rspecialize(a, l0), rspecialize(b, l0));
      if (udeg(g) == 0) return RPoly{UPoly{1}};
      if (udeg(g) > best) continue;
      if (udeg(g) < best) {
        best = udeg(g);
        xs.clear();
        images.clear();
      }
      xs.push_back(l0);
      images.push_back(uscale(g, ueval(gamma, l0)));
    }
    RPoly c(static_cast<std::size_t>(best) + 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      std::vector<Rational> ys;
      for (const auto& img : images) ys.push_back(img[j]);
      c[j] = interpolate(xs, std::move(ys));
    }
    rtrim(c);
    c = rdiv_scalar(c, rcontent(c));
    Poly pc = from_recursive(c);
    if (pa.divide_exact(pc) && pb.divide_exact(pc)) return c;
  }
  return prs_gcd(a, b);
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading().coeff);
}

std::string render_rational(const Rational& r) { return r.get_str(); }

std::string render_monomial_vars(int s, int l) {
  std::string out;
  auto append = [&out](const std::string& v) {
    if (!out.empty()) out += "*";
    out += v;
  };
  if (s > 0) {
    if (s % 2 == 0)
      append(s == 2 ? "q" : "q^" + std::to_string(s / 2));
    else
      append(s == 1 ? "s" : "s^" + std::to_string(s));
  }
  if (l > 0) append(l == 1 ? "l" : "l^" + std::to_string(l));
  return out;
}

// Recursive-descent parser for scalar text.
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  RatFunc parse_all() {
    RatFunc r = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }

  RatFunc term() {
    RatFunc r = factor();
    for (;;) {
      if (accept('*')) {
        r *= factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RatFunc d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        r /= d;
      } else {
        return r;
      }
    }
  }

  RatFunc factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    RatFunc base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", pos_);
      base = base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  RatFunc atom() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFunc(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    ++pos_;
    switch (c) {
      case 's': return RatFunc::s();
      case 'q': return RatFunc::q();
      case 'l': return RatFunc::l();
      default: throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_ - 1);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct NamedGuard {
  const char* name;
  Poly divisor;  // factor looked for in a denominator
  Poly in_q;     // the same condition written in q
};

const std::vector<NamedGuard>& standard_guards() {
  static const std::vector<NamedGuard> guards = {
      {"q=0", Poly::var_s(), Poly::var_q()},
      {"l=0", Poly::var_l(), Poly::var_l()},
      {"1+q=0", Poly(1) + Poly::var_q(), Poly(1) + Poly::var_q()},
      {"q^2+q+1=0", Poly(1) + Poly::var_q() + Poly::var_q() * Poly::var_q(),
       Poly(1) + Poly::var_q() + Poly::var_q() * Poly::var_q()},
  };
  return guards;
}

// Univariate polynomial in q from an even-in-s polynomial with l -> l0.
UPoly to_q_upoly(const Poly& p, const Rational& l0) {
  UPoly r;
  for (const auto& t : p.terms()) {
    if (t.s % 2 != 0) throw InvalidArgument("odd power of s cannot be specialized at an algebraic q");
    auto k = static_cast<std::size_t>(t.s / 2);
    if (r.size() <= k) r.resize(k + 1);
    Rational lp = 1;
    for (int i = 0; i < t.l; ++i) lp *= l0;
    r[k] += t.coeff * lp;
  }
  trim(r);
  return r;
}

Poly from_q_upoly(const UPoly& u) {
  std::vector<Poly::Term> terms;
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] != 0) terms.push_back({static_cast<int>(2 * k), 0, u[k]});
  return Poly::from_terms(std::move(terms));
}

std::optional<Rational> rational_sqrt(const Rational& v) {
  if (v < 0) return std::nullopt;
  Integer n = v.get_num(), d = v.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({0, 0, Rational(c)});
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({0, 0, c});
}

Poly Poly::monomial(const Rational& c, int deg_s, int deg_l) {
  if (deg_s < 0 || deg_l < 0) throw InvalidArgument("negative exponent in polynomial");
  Poly p;
  if (c != 0) p.terms_.push_back({deg_s, deg_l, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Poly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), before);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().s == t.s && out.back().l == t.l)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].s == 0 && terms_[0].l == 0);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].s == 0 && terms_[0].l == 0 && terms_[0].coeff == 1;
}

int Poly::degree_s() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.s);
  return d;
}

int Poly::degree_l() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.l);
  return d;
}

int Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().s + terms_.front().l; }

bool Poly::has_odd_s() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.s % 2 != 0; });
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && before(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || before(b[j], a[i])) {
      out.push_back(b[j]);
      if (subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].s, a[i].l, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial() || b.is_monomial()) {
    const Poly& m = a.is_monomial() ? a : b;
    const Poly& o = a.is_monomial() ? b : a;
    const auto& mt = m.terms_.front();
    Poly r;
    r.terms_.reserve(o.terms_.size());
    for (const auto& t : o.terms_) r.terms_.push_back({t.s + mt.s, t.l + mt.l, t.coeff * mt.coeff});
    return r;  // shifting by a monomial preserves the order
  }
  // Integer accumulation on a dense (s, l) grid; one common denominator.
  auto common_den = [](const Poly& p) {
    Integer d = 1;
    for (const auto& t : p.terms_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.coeff.get_den_mpz_t());
    return d;
  };
  const Integer da = common_den(a), db = common_den(b);
  auto integer_coeffs = [](const Poly& p, const Integer& d) {
    std::vector<Integer> out;
    out.reserve(p.terms_.size());
    for (const auto& t : p.terms_) out.push_back(t.coeff.get_num() * (d / t.coeff.get_den()));
    return out;
  };
  const auto ia = integer_coeffs(a, da), ib = integer_coeffs(b, db);
  const int ds = a.degree_s() + b.degree_s(), dl = a.degree_l() + b.degree_l();
  const auto width = static_cast<std::size_t>(dl + 1);
  std::vector<Integer> grid(static_cast<std::size_t>(ds + 1) * width);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    const auto& x = a.terms_[i];
    for (std::size_t j = 0; j < ib.size(); ++j) {
      const auto& y = b.terms_[j];
      auto& cell = grid[static_cast<std::size_t>(x.s + y.s) * width + static_cast<std::size_t>(x.l + y.l)];
      mpz_addmul(cell.get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }
  const Integer den = da * db;
  Poly r;
  for (int total = ds + dl; total >= 0; --total)
    for (int si = std::min(total, ds); si >= 0 && total - si <= dl; --si) {
      auto& cell = grid[static_cast<std::size_t>(si) * width + static_cast<std::size_t>(total - si)];
      if (cell == 0) continue;
      Rational c(cell, den);
      c.canonicalize();
      r.terms_.push_back({si, total - si, std::move(c)});
    }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.s != y.s || x.l != y.l || x.coeff != y.coeff) return false;
  }
  return true;
}

Rational Poly::evaluate(const Rational& s0, const Rational& l0) const {
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (int i = 0; i < t.s; ++i) v *= s0;
    for (int i = 0; i < t.l; ++i) v *= l0;
    acc += v;
  }
  return acc;
}

Rational Poly::evaluate_q(const Rational& q0, const Rational& l0) const {
  Rational acc = 0;
  for (const auto& t : terms_) {
    if (t.s % 2 != 0) throw InvalidArgument("odd power of s needs a rational square root of q");
    Rational v = t.coeff;
    for (int i = 0; i < t.s / 2; ++i) v *= q0;
    for (int i = 0; i < t.l; ++i) v *= l0;
    acc += v;
  }
  return acc;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw DivisionByZero();
  if (d.is_constant()) return scaled(1 / d.leading().coeff);
  if (d.is_monomial()) {
    const auto& dt = d.leading();
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (t.s < dt.s || t.l < dt.l) return std::nullopt;
      r.terms_.push_back({t.s - dt.s, t.l - dt.l, t.coeff / dt.coeff});
    }
    return r;
  }
  if (is_zero()) return Poly();
  // Division in Q[l][s] with exact division of the leading coefficients.
  RPoly rem = to_recursive(*this);
  const RPoly rd = to_recursive(d);
  if (rem.size() < rd.size()) return std::nullopt;
  RPoly quot(rem.size() - rd.size() + 1);
  while (!rem.empty() && rem.size() >= rd.size()) {
    std::size_t shift = rem.size() - rd.size();
    auto [c, r] = udivmod(rem.back(), rd.back());
    if (!r.empty()) return std::nullopt;
    for (std::size_t j = 0; j < rd.size(); ++j) rem[shift + j] = usub(rem[shift + j], umul(c, rd[j]));
    quot[shift] = std::move(c);
    rtrim(rem);
  }
  if (!rem.empty()) return std::nullopt;
  return from_recursive(quot);
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Term& t = *it;
    bool negative = t.coeff < 0;
    Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (negative)
      out += "-";
    else if (!out.empty())
      out += "+";
    std::string vars = render_monomial_vars(t.s, t.l);
    if (vars.empty()) {
      out += render_rational(mag);
      continue;
    }
    const Integer& n = mag.get_num();
    const Integer& d = mag.get_den();
    if (n != 1) out += n.get_str() + "*";
    out += vars;
    if (d != 1) out += "/" + d.get_str();
  }
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.is_monomial() || b.is_monomial()) {
    const Poly& m = a.is_monomial() ? a : b;
    const Poly& o = a.is_monomial() ? b : a;
    int s = m.leading().s, l = m.leading().l;
    for (const auto& t : o.terms()) {
      s = std::min(s, t.s);
      l = std::min(l, t.l);
    }
    return Poly::monomial(1, s, l);
  }
  Poly ma = monic(a), mb = monic(b);
  if (ma == mb) return ma;
  if (ma.divide_exact(mb)) return mb;
  if (mb.divide_exact(ma)) return ma;

  RPoly ra = to_recursive(a), rb = to_recursive(b);
  UPoly ca = rcontent(ra), cb = rcontent(rb);
  UPoly content_gcd = ugcd(ca, cb);
  ra = rdiv_scalar(ra, ca);
  rb = rdiv_scalar(rb, cb);
  rprimitive(ra);
  rprimitive(rb);
  if (ra.size() < rb.size()) std::swap(ra, rb);
  RPoly g = primitive_gcd(ra, rb);
  for (auto& c : g) c = umul(c, content_gcd);
  return monic(from_recursive(g));
}

// ---------------------------------------------------------------- RatFunc

RatFunc RatFunc::normalize(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RatFunc();
  if (den.is_constant()) return RatFunc(num.scaled(1 / den.leading().coeff), Poly(1), 0);
  Poly g = gcd(num, den);
  if (!g.is_one()) {
    num = *num.divide_exact(g);
    den = *den.divide_exact(g);
  }
  Rational lc = den.leading().coeff;
  if (lc != 1) {
    num = num.scaled(1 / lc);
    den = den.scaled(1 / lc);
  }
  return RatFunc(std::move(num), std::move(den), 0);
}

Rational RatFunc::constant_value() const {
  if (num_.is_zero()) return 0;
  return num_.leading().coeff;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return normalize(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc result(1), base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFunc(a.num_ + b.num_, a.den_, 0);
    return RatFunc::normalize(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_one()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, 0);
  if (b.den_.is_one()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_, 0);
  Poly g = gcd(a.den_, b.den_);
  Poly bd = *b.den_.divide_exact(g);
  Poly ad = *a.den_.divide_exact(g);
  return RatFunc::normalize(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, a.den_, 0);
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly an = g1.is_one() ? a.num_ : *a.num_.divide_exact(g1);
  Poly bd = g1.is_one() ? b.den_ : *b.den_.divide_exact(g1);
  Poly bn = g2.is_one() ? b.num_ : *b.num_.divide_exact(g2);
  Poly ad = g2.is_one() ? a.den_ : *a.den_.divide_exact(g2);
  Poly num = an * bn, den = ad * bd;
  Rational lc = den.leading().coeff;
  if (lc != 1) {
    num = num.scaled(1 / lc);
    den = den.scaled(1 / lc);
  }
  return RatFunc(std::move(num), std::move(den), 0);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

bool RatFunc::is_compound() const { return !den_.is_one() || num_.terms().size() > 1; }

std::string RatFunc::to_string() const {
  std::string n = num_.to_string();
  if (den_.is_one()) return n;
  if (num_.terms().size() > 1 || n.find('/') != std::string::npos) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.terms().size() > 1 || d.find_first_of("*/") != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

RatFunc RatFunc::parse(std::string_view text) { return ScalarParser(text).parse_all(); }

// ---------------------------------------------------------------- evaluation

std::string guard_name(const Poly& den, const Rational& q0, const Rational& l0) {
  for (const auto& g : standard_guards()) {
    if (g.in_q.evaluate_q(q0, l0) == 0 && den.divide_exact(g.divisor)) return g.name;
  }
  return den.to_string() + "=0";
}

Rational evaluate(const RatFunc& a, const Rational& s0, const Rational& l0) {
  if (l0 == 0) throw GuardFailure("l=0");
  Rational d = a.den().evaluate(s0, l0);
  if (d == 0) throw GuardFailure(guard_name(a.den(), s0 * s0, l0));
  return a.num().evaluate(s0, l0) / d;
}

Point Point::rational(const Rational& q0, const Rational& l0) {
  Point p;
  p.q0_ = q0;
  p.l0_ = l0;
  p.s0_ = rational_sqrt(q0);
  return p;
}

Point Point::from_s(const Rational& s0, const Rational& l0) {
  Point p;
  p.q0_ = s0 * s0;
  p.l0_ = l0;
  p.s0_ = s0;
  return p;
}

Point Point::algebraic(const Poly& minimal, const Rational& l0) {
  if (minimal.has_odd_s() || minimal.degree_l() > 0 || minimal.is_constant())
    throw InvalidArgument("algebraic point needs a non-constant polynomial in q alone");
  Point p;
  p.l0_ = l0;
  p.minimal_ = monic(minimal);
  return p;
}

Point Point::parse(std::string_view text) {
  std::optional<Rational> q, s, l;
  std::optional<Poly> minimal;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    // a comma inside root(...) is not a separator
    std::size_t open = text.find('(', pos);
    if (open != std::string_view::npos && open < comma) {
      std::size_t close = text.find(')', open);
      if (close == std::string_view::npos) throw ParseError("unbalanced '('", open);
      comma = text.find(',', close);
    }
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected name=value", pos);
    std::string_view name = item.substr(0, eq);
    std::string_view value = item.substr(eq + 1);
    std::size_t value_pos = pos + eq + 1;
    auto rational_value = [&]() {
      RatFunc v = RatFunc::parse(value);
      if (!v.is_constant()) throw ParseError("expected a rational value", value_pos);
      return v.constant_value();
    };
    if (name == "q") {
      if (value.starts_with("root(") && value.ends_with(")")) {
        RatFunc m = RatFunc::parse(value.substr(5, value.size() - 6));
        if (!m.den().is_one()) throw ParseError("root() needs a polynomial", value_pos);
        minimal = m.num();
      } else {
        q = rational_value();
      }
    } else if (name == "s") {
      s = rational_value();
    } else if (name == "l") {
      l = rational_value();
    } else {
      throw ParseError("unknown parameter '" + std::string(name) + "'", pos);
    }
    pos = comma + 1;
  }
  Rational l0 = l.value_or(Rational(1));
  if (minimal) return algebraic(*minimal, l0);
  if (s) return from_s(*s, l0);
  if (q) return rational(*q, l0);
  throw ParseError("point needs q or s", 0);
}

RatFunc Point::specialize(const RatFunc& a) const {
  if (l0_ == 0) throw GuardFailure("l=0");
  if (!minimal_) {
    Rational n, d;
    if (s0_) {
      n = a.num().evaluate(*s0_, l0_);
      d = a.den().evaluate(*s0_, l0_);
    } else {
      if (a.has_odd_s())
        throw InvalidArgument("sqrt(q) is irrational at q=" + q0_.get_str());
      n = a.num().evaluate_q(q0_, l0_);
      d = a.den().evaluate_q(q0_, l0_);
    }
    if (d == 0) throw GuardFailure(guard_name(a.den(), q0_, l0_));
    return RatFunc(Rational(n / d));
  }
  UPoly m = to_q_upoly(*minimal_, 0);
  UPoly num = udivmod(to_q_upoly(a.num(), l0_), m).second;
  UPoly den = udivmod(to_q_upoly(a.den(), l0_), m).second;
  UPoly g = ugcd(den, m);
  if (den.empty() || udeg(g) > 0) {
    Poly gp = den.empty() ? *minimal_ : from_q_upoly(g);
    for (const auto& guard : standard_guards())
      if (monic(guard.in_q) == gp) throw GuardFailure(guard.name);
    throw GuardFailure(gp.to_string() + "=0");
  }
  UPoly value = udivmod(umul(num, uinverse_mod(den, m)), m).second;
  return RatFunc(from_q_upoly(value));
}

std::string Point::to_string() const {
  std::string out;
  if (minimal_)
    out = "q=root(" + minimal_->to_string() + ")";
  else if (s0_ && *s0_ < 0)
    out = "s=" + s0_->get_str();
  else
    out = "q=" + q0_.get_str();
  return out + ",l=" + l0_.get_str();
}

}  // namespace qcl
