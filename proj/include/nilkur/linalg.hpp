#pragma once

// Dense exact-rational linear algebra: row reduction, kernels, projectors
// and the canonical Subspace type.

#include "nilkur/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nilkur {

using Vector = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector col_vector(std::size_t c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Vector operator*(std::span<const Rational> v) const;

  bool is_zero() const;
  bool operator==(const Matrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;                   // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form; pivots are chosen leftmost column first, topmost row first.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis (as RREF rows) of {x : m x = 0}.
Matrix nullspace(const Matrix& m);

/// Inverse of a nonsingular square matrix. Throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

/// Moore-Penrose pseudo-inverse, exact, via a full-rank factorisation.
Matrix pseudo_inverse(const Matrix& m);

/// Linear subspace of Q^n stored canonically as RREF rows, so equality is syntactic.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);
  static Subspace from_rows(const Matrix& spanning_rows);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v (assumed to lie in the subspace) in the RREF basis.
  Vector coordinates(std::span<const Rational> v) const;

  Subspace sum(const Subspace& other) const;
  /// Annihilator in the dual space, identified with Q^n via the standard pairing.
  Subspace annihilator() const;
  Subspace orthogonal_complement() const { return annihilator(); }

  /// Orthogonal projector (standard inner product) onto this subspace.
  Matrix projector() const;

  bool operator==(const Subspace& other) const { return ambient_ == other.ambient_ && basis_ == other.basis_; }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace nilkur
