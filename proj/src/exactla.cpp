#include "qclifford/exactla.hpp"

#include <algorithm>

#include "qclifford/errors.hpp"

namespace qcl {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  if (cols.empty()) return {};
  Matrix m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows_) throw DimensionMismatch("ragged columns");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const RatFunc& x) { return x.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shapes");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RatFunc& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shapes");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) out += (c ? ", " : "") + (*this)(r, c).to_string();
    out += "]";
  }
  return out + "]";
}

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Clear denominators row by row: each row times the lcm of its denominators.
  std::vector<std::vector<Poly>> a(rows, std::vector<Poly>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Poly lcm(1);
    for (std::size_t c = 0; c < cols; ++c) {
      const Poly& d = m(r, c).den();
      if (d.is_one()) continue;
      Poly g = gcd(lcm, d);
      lcm = lcm * *d.divide_exact(g);
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const RatFunc& x = m(r, c);
      if (!x.is_zero()) a[r][c] = x.num() * *lcm.divide_exact(x.den());
    }
  }
  Poly previous(1);
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::optional<std::size_t> best;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      if (!best || a[r][c].total_degree() < a[*best][c].total_degree()) best = r;
    }
    if (!best) continue;
    std::swap(a[pivot_row], a[*best]);
    const Poly& p = a[pivot_row][c];
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Poly v = p * a[r][j] - a[r][c] * a[pivot_row][j];
        auto q = v.divide_exact(previous);
        if (!q) throw Error("fraction-free elimination: inexact division");
        a[r][j] = std::move(*q);
      }
      a[r][c] = Poly();
    }
    previous = p;
    ++pivot_row;
  }
  return pivot_row;
}

namespace {

// Reduced row echelon form over the field; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::optional<std::size_t> best;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m(r, c).is_zero()) continue;
      if (!best || m(r, c).num().total_degree() + m(r, c).den().total_degree() <
                       m(*best, c).num().total_degree() + m(*best, c).den().total_degree())
        best = r;
    }
    if (!best) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(*best, j));
    RatFunc inv = m(row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      RatFunc f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix r = m;
  auto pivots = rref(r);
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
  return x;
}

Matrix blade_coordinates(const std::vector<Multivector>& vectors) {
  if (vectors.empty()) return {};
  auto blades = all_blades(vectors[0].dim());
  Matrix m(blades.size(), vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    require_same_dim(vectors[0], vectors[c]);
    for (const auto& [b, x] : vectors[c].terms()) {
      auto it = std::lower_bound(blades.begin(), blades.end(), b);
      m(static_cast<std::size_t>(it - blades.begin()), c) = x;
    }
  }
  return m;
}

Vector coordinates_in(const Multivector& v, const std::vector<Multivector>& basis) {
  if (basis.empty()) {
    if (v.is_zero()) return {};
    throw NotInSpan("nonzero vector in the empty span");
  }
  std::vector<Multivector> all(basis);
  all.push_back(v);
  Matrix m = blade_coordinates(all);
  Matrix a(m.rows(), basis.size());
  Vector b(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) a(r, c) = m(r, c);
    b[r] = m(r, basis.size());
  }
  auto x = solve(a, b);
  if (!x) throw NotInSpan(v.to_string() + " is not in the span");
  return *x;
}

std::vector<Multivector> independent_subset(const std::vector<Multivector>& vectors) {
  std::vector<Multivector> chosen;
  for (const auto& v : vectors) {
    chosen.push_back(v);
    if (rank(blade_coordinates(chosen)) < chosen.size()) chosen.pop_back();
  }
  return chosen;
}

Matrix left_mult_matrix(const Multivector& a, const std::vector<Multivector>& domain, const Algebra& alg,
                        const std::optional<std::vector<Multivector>>& codomain) {
  std::vector<Multivector> images;
  images.reserve(domain.size());
  for (const auto& d : domain) images.push_back(cl_mul(a, d, alg));
  if (!codomain) return blade_coordinates(images);
  std::vector<Vector> cols;
  for (const auto& img : images) cols.push_back(coordinates_in(img, *codomain));
  if (cols.empty()) return Matrix(codomain->size(), 0);
  return Matrix::from_columns(cols);
}

}  // namespace qcl
