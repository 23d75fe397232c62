#include "qclifford/clifford.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "qclifford/errors.hpp"

namespace qcl {

BilinearForm BilinearForm::hecke(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  int dim = 2 * n;
  std::vector<RatFunc> entries(static_cast<std::size_t>(dim * dim));
  auto at = [&](int i, int j) -> RatFunc& { return entries[static_cast<std::size_t>((i - 1) * dim + (j - 1))]; };
  RatFunc q = RatFunc::q(), l = RatFunc::l();
  for (int i = 1; i <= n; ++i) {
    at(i, n + i) = q;
    at(n + i, i) = 1;
    if (i + 1 <= n) at(n + i, i + 1) = l;
    if (i - 1 >= 1) at(n + i, i - 1) = q / l;
  }
  return BilinearForm(n, std::move(entries));
}

BilinearForm BilinearForm::generic(int n, std::vector<RatFunc> entries) {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (entries.size() != static_cast<std::size_t>(4 * n * n))
    throw DimensionMismatch("bilinear form needs " + std::to_string(4 * n * n) + " entries");
  return BilinearForm(n, std::move(entries));
}

BilinearForm BilinearForm::symmetric_part() const {
  std::vector<RatFunc> g(entries_.size());
  RatFunc half(Rational(1, 2));
  for (int i = 1; i <= dim(); ++i)
    for (int j = 1; j <= dim(); ++j) g[index(i, j)] = ((*this)(i, j) + (*this)(j, i)) * half;
  return BilinearForm(n_, std::move(g));
}

bool BilinearForm::is_symmetric() const {
  for (int i = 1; i <= dim(); ++i)
    for (int j = i + 1; j <= dim(); ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

RatFunc BilinearForm::symmetric_value(const Multivector& x, const Multivector& y) const {
  RatFunc acc;
  for (const auto& [a, ca] : x.terms()) {
    if (a.grade() != 1) throw InvalidArgument("symmetric_value needs vectors");
    for (const auto& [b, cb] : y.terms()) {
      if (b.grade() != 1) throw InvalidArgument("symmetric_value needs vectors");
      int i = a.indices()[0], j = b.indices()[0];
      acc += ca * cb * ((*this)(i, j) + (*this)(j, i)) * RatFunc(Rational(1, 2));
    }
  }
  return acc;
}

std::string BilinearForm::to_string() const {
  std::string out = "[";
  for (int i = 1; i <= dim(); ++i) {
    out += i > 1 ? ", [" : "[";
    for (int j = 1; j <= dim(); ++j) {
      if (j > 1) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

// ---------------------------------------------------------------- Algebra

struct Algebra::Impl {
  explicit Impl(BilinearForm f) : form(std::move(f)) {}
  BilinearForm form;
  mutable std::shared_mutex mutex;
  mutable std::unordered_map<std::uint64_t, std::unique_ptr<Multivector>> products;
  mutable std::unordered_map<std::uint32_t, std::unique_ptr<Multivector>> reversions;
};

Algebra::Algebra(BilinearForm form) : impl_(std::make_shared<Impl>(std::move(form))) {}

int Algebra::n() const { return impl_->form.n(); }
int Algebra::dim() const { return impl_->form.dim(); }
const BilinearForm& Algebra::form() const { return impl_->form; }

Multivector Algebra::one() const { return Multivector::scalar(dim(), 1); }
Multivector Algebra::scalar(const RatFunc& c) const { return Multivector::scalar(dim(), c); }
Multivector Algebra::e(int i) const { return Multivector::from_indices(dim(), {i}); }
Multivector Algebra::e(const std::vector<int>& indices) const { return Multivector::from_indices(dim(), indices); }

namespace {

// e_i ⌋ e_T = Σ_m (-1)^{m-1} B(e_i, e_{t_m}) e_{T \ t_m}
void add_vector_contraction(int i, Blade t, const RatFunc& c, const BilinearForm& form, Multivector& out) {
  for (std::uint32_t m = t.mask; m != 0; m &= m - 1) {
    int bit = __builtin_ctz(m);
    const RatFunc& b = form(i, bit + 1);
    if (b.is_zero()) continue;
    int before = __builtin_popcount(t.mask & ((1u << bit) - 1));
    RatFunc term = c * b;
    out.add_term(Blade{t.mask & ~(1u << bit)}, before % 2 ? -term : term);
  }
}

}  // namespace

const Multivector& Algebra::blade_product(Blade a, Blade b) const {
  std::uint64_t key = (static_cast<std::uint64_t>(a.mask) << 32) | b.mask;
  {
    std::shared_lock lock(impl_->mutex);
    auto it = impl_->products.find(key);
    if (it != impl_->products.end()) return *it->second;
  }
  Multivector result(dim());
  if (a.mask == 0) {
    result = Multivector::blade(dim(), b);
  } else {
    // a = e_i ∧ rest with i the smallest index:
    // a∘v = e_i∘(rest∘v) - (e_i ⌋ rest)∘v and e_i∘w = e_i⌋w + e_i∧w.
    int bit = __builtin_ctz(a.mask);
    int i = bit + 1;
    Blade rest{a.mask & ~(1u << bit)};
    const Multivector& w = blade_product(rest, b);
    result = contract_vector(i, w, form()) + wedge(e(i), w);
    Multivector lowered(dim());
    add_vector_contraction(i, rest, RatFunc(1), form(), lowered);
    for (const auto& [t, c] : lowered.terms()) result -= c * blade_product(t, b);
  }
  std::unique_lock lock(impl_->mutex);
  auto [it, inserted] = impl_->products.try_emplace(key, std::make_unique<Multivector>(std::move(result)));
  return *it->second;
}

const Multivector& Algebra::blade_reversion(Blade a) const {
  {
    std::shared_lock lock(impl_->mutex);
    auto it = impl_->reversions.find(a.mask);
    if (it != impl_->reversions.end()) return *it->second;
  }
  Multivector result(dim());
  if (a.grade() <= 1) {
    result = Multivector::blade(dim(), a);
  } else {
    // rev(e_i ∧ rest) = rev(rest)∘e_i - rev(e_i ⌋ rest)
    int bit = __builtin_ctz(a.mask);
    int i = bit + 1;
    Blade rest{a.mask & ~(1u << bit)};
    result = cl_mul(blade_reversion(rest), e(i), *this);
    Multivector lowered(dim());
    add_vector_contraction(i, rest, RatFunc(1), form(), lowered);
    result -= reversion(lowered, *this);
  }
  std::unique_lock lock(impl_->mutex);
  auto [it, inserted] = impl_->reversions.try_emplace(a.mask, std::make_unique<Multivector>(std::move(result)));
  return *it->second;
}

// ---------------------------------------------------------------- products

Multivector contract_vector(int i, const Multivector& v, const BilinearForm& form) {
  if (v.dim() != form.dim()) throw DimensionMismatch("multivector dimension differs from the form");
  Multivector out(v.dim());
  for (const auto& [t, c] : v.terms()) add_vector_contraction(i, t, c, form, out);
  return out;
}

Multivector contract(const Multivector& u, const Multivector& v, const BilinearForm& form) {
  require_same_dim(u, v);
  if (v.dim() != form.dim()) throw DimensionMismatch("multivector dimension differs from the form");
  Multivector out(v.dim());
  for (const auto& [a, c] : u.terms()) {
    Multivector w = v;
    std::vector<int> idx = a.indices();
    for (auto it = idx.rbegin(); it != idx.rend() && !w.is_zero(); ++it) w = contract_vector(*it, w, form);
    out += c * w;
  }
  return out;
}

Multivector cl_mul(const Multivector& u, const Multivector& v, const Algebra& alg) {
  require_same_dim(u, v);
  if (u.dim() != alg.dim()) throw DimensionMismatch("multivector dimension differs from the algebra");
  Multivector out(u.dim());
  for (const auto& [a, x] : u.terms())
    for (const auto& [b, y] : v.terms()) {
      RatFunc xy = x * y;
      for (const auto& [t, c] : alg.blade_product(a, b).terms()) out.add_term(t, xy * c);
    }
  return out;
}

Multivector reversion(const Multivector& u, const Algebra& alg) {
  if (u.dim() != alg.dim()) throw DimensionMismatch("multivector dimension differs from the algebra");
  Multivector out(u.dim());
  for (const auto& [a, x] : u.terms()) out += x * alg.blade_reversion(a);
  return out;
}

RatFunc clifford_map_square(const Multivector& x, const Algebra& alg) {
  if (x.grades() != std::vector<int>{1} && !x.is_zero()) throw InvalidArgument("clifford_map_square needs a grade-1 element");
  Multivector sq = cl_mul(x, x, alg);
  if (!sq.is_scalar()) throw NotInSpan("square of a vector is not scalar: " + sq.to_string());
  RatFunc c = sq.scalar_part();
  if (!(c == alg.form().symmetric_value(x, x))) throw Error("x∘x differs from G(x,x)");
  return c;
}

Multivector cl_product(const std::vector<Multivector>& factors, const Algebra& alg) {
  Multivector acc = alg.one();
  for (const auto& f : factors) acc = cl_mul(acc, f, alg);
  return acc;
}

Multivector commutator(const Multivector& u, const Multivector& v, const Algebra& alg) {
  return cl_mul(u, v, alg) - cl_mul(v, u, alg);
}

}  // namespace qcl
