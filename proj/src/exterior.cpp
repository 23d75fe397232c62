#include "qclifford/exterior.hpp"

#include <algorithm>
#include <set>

#include "qclifford/errors.hpp"

namespace qcl {

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) out.push_back(__builtin_ctz(m) + 1);
  return out;
}

std::string Blade::to_string(bool comma_separated) const {
  if (mask == 0) return "1";
  std::string out = "e";
  bool first = true;
  for (int i : indices()) {
    if (comma_separated && !first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out;
}

std::strong_ordering operator<=>(Blade a, Blade b) {
  if (auto c = a.grade() <=> b.grade(); c != 0) return c;
  if (a.mask == b.mask) return std::strong_ordering::equal;
  std::uint32_t diff = a.mask ^ b.mask;
  std::uint32_t lowest = diff & (~diff + 1);
  // The blade owning the smallest differing index sorts first.
  return (a.mask & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

int wedge_sign(Blade a, Blade b) {
  if (a.mask & b.mask) return 0;
  // Count pairs (i in a, j in b) with i > j: each is one transposition.
  int swaps = 0;
  for (std::uint32_t m = b.mask; m != 0; m &= m - 1) {
    int j = __builtin_ctz(m);
    swaps += __builtin_popcount(a.mask >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

Multivector::Multivector(int dim) : dim_(dim) {
  if (dim < 0 || dim > 30) throw InvalidArgument("unsupported ambient dimension " + std::to_string(dim));
}

Multivector Multivector::scalar(int dim, const RatFunc& c) { return blade(dim, Blade{}, c); }

Multivector Multivector::blade(int dim, Blade b, const RatFunc& c) {
  Multivector r(dim);
  if (dim < 32 && (b.mask >> dim) != 0) throw DimensionMismatch("blade " + b.to_string() + " outside dimension " + std::to_string(dim));
  r.add_term(b, c);
  return r;
}

Multivector Multivector::from_indices(int dim, const std::vector<int>& indices) {
  Blade acc;
  int sign = 1;
  for (int i : indices) {
    if (i < 1 || i > dim) throw DimensionMismatch("index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
    Blade next{1u << (i - 1)};
    int s = wedge_sign(acc, next);
    if (s == 0) return Multivector(dim);
    sign *= s;
    acc.mask |= next.mask;
  }
  return blade(dim, acc, RatFunc(sign));
}

RatFunc Multivector::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? RatFunc() : it->second;
}

bool Multivector::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.mask == 0);
}

std::vector<int> Multivector::grades() const {
  std::set<int> g;
  for (const auto& [b, c] : terms_) g.insert(b.grade());
  return {g.begin(), g.end()};
}

bool Multivector::is_even() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.grade() % 2 == 0; });
}

void Multivector::add_term(Blade b, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Multivector Multivector::operator-() const {
  Multivector r(*this);
  for (auto& [b, c] : r.terms_) c = -c;
  return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same_dim(*this, o);
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same_dim(*this, o);
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

Multivector operator*(const RatFunc& c, const Multivector& v) {
  Multivector r(v.dim_);
  if (c.is_zero()) return r;
  for (const auto& [b, x] : v.terms_) r.terms_.emplace(b, c * x);
  return r;
}

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  bool commas = dim_ >= 10;
  std::string out;
  for (const auto& [b, c] : terms_) {
    bool negative = c.num().is_monomial() && c.num().leading().coeff < 0;
    RatFunc mag = negative ? -c : c;
    std::string coeff = mag.to_string();
    if (mag.den().is_one() && mag.num().terms().size() > 1) coeff = "(" + coeff + ")";
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coeff + "*" + b.to_string(commas);
  }
  return out;
}

void require_same_dim(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("dimension " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

Multivector wedge(const Multivector& u, const Multivector& v) {
  require_same_dim(u, v);
  Multivector r(u.dim());
  for (const auto& [a, x] : u.terms())
    for (const auto& [b, y] : v.terms()) {
      int s = wedge_sign(a, b);
      if (s == 0) continue;
      r.add_term(Blade{a.mask | b.mask}, s > 0 ? x * y : -(x * y));
    }
  return r;
}

Multivector grade_project(const Multivector& u, int k) {
  Multivector r(u.dim());
  for (const auto& [b, c] : u.terms())
    if (b.grade() == k) r.add_term(b, c);
  return r;
}

Multivector grade_involute(const Multivector& u) {
  Multivector r(u.dim());
  for (const auto& [b, c] : u.terms()) r.add_term(b, b.grade() % 2 ? -c : c);
  return r;
}

std::vector<Blade> all_blades(int dim) {
  std::vector<Blade> out;
  out.reserve(std::size_t{1} << dim);
  for (std::uint32_t m = 0; m < (1u << dim); ++m) out.push_back(Blade{m});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qcl
