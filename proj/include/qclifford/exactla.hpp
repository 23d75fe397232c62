#pragma once

// Dense exact linear algebra over Q(s, l). All instances in this project are
// at most 64 x 64, so no sparsity is exploited.

#include <optional>
#include <string>
#include <vector>

#include "qclifford/clifford.hpp"
#include "qclifford/coeff.hpp"
#include "qclifford/exterior.hpp"

namespace qcl {

using Vector = std::vector<RatFunc>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatFunc& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RatFunc& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vector column(std::size_t c) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFunc> data_;
};

/// Rank by fraction-free (Bareiss) elimination on the denominator-cleared
/// matrix; pivots of minimal total degree.
std::size_t rank(const Matrix& m);

/// Basis of the right nullspace, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);

/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Rows indexed by the blades of `dim` (ascending order), one column per
/// multivector.
Matrix blade_coordinates(const std::vector<Multivector>& vectors);

/// Coordinates of `v` in the span of `basis`; throws NotInSpan otherwise.
Vector coordinates_in(const Multivector& v, const std::vector<Multivector>& basis);

/// Linearly independent subset of `vectors`, chosen greedily in order.
std::vector<Multivector> independent_subset(const std::vector<Multivector>& vectors);

/// Column j holds the coordinates of a∘domain[j], on all blades by default
/// or on `codomain` when given (NotInSpan if a product leaves it).
Matrix left_mult_matrix(const Multivector& a, const std::vector<Multivector>& domain, const Algebra& alg,
                        const std::optional<std::vector<Multivector>>& codomain = std::nullopt);

}  // namespace qcl
