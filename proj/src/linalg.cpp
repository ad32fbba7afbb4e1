#include "nilkur/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace nilkur {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::col_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Rational& b = rhs(k, c);
        if (sgn(b) != 0) out(r, c) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix difference: shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Vector Matrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix-vector product: shape mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
    os << "]\n";
  }
  return os.str();
}

RowEchelon rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t pr = lead_row;
    while (pr < a.rows() && sgn(a(pr, c)) == 0) ++pr;
    if (pr == a.rows()) continue;
    if (pr != lead_row)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(pr, k), a(lead_row, k));
    const Rational inv = 1 / a(lead_row, c);
    for (std::size_t k = c; k < a.cols(); ++k) a(lead_row, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || sgn(a(r, c)) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (sgn(a(lead_row, k)) != 0) a(r, k) -= f * a(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  Matrix reduced(pivots.size(), a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) reduced(r, k) = a(r, k);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  const auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    basis.push_back(std::move(v));
  }
  // canonicalise: RREF of the basis rows
  return rref(Matrix::from_rows(basis, m.cols())).reduced;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto [red, pivots] = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw std::domain_error("inverse: singular matrix");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

Matrix pseudo_inverse(const Matrix& m) {
  const auto [f, pivots] = rref(m);
  if (pivots.empty()) return Matrix(m.cols(), m.rows());
  Matrix c(m.rows(), pivots.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t k = 0; k < pivots.size(); ++k) c(r, k) = m(r, pivots[k]);
  const Matrix ft = f.transpose();
  const Matrix ct = c.transpose();
  return ft * inverse(f * ft) * inverse(ct * c) * ct;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning) : ambient_(ambient_dim) {
  auto e = rref(Matrix::from_rows(spanning, ambient_dim));
  basis_ = std::move(e.reduced);
  pivots_ = std::move(e.pivots);
}

Subspace Subspace::from_rows(const Matrix& spanning_rows) {
  Subspace s(spanning_rows.cols());
  auto e = rref(spanning_rows);
  s.basis_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) { return from_rows(Matrix::identity(ambient_dim)); }

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
  // reduce v against the RREF rows; v lies in the span iff nothing is left
  Vector w(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Rational f = w[pivots_[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (sgn(basis_(r, k)) != 0) w[k] -= f * basis_(r, k);
  }
  for (const auto& x : w)
    if (sgn(x) != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Vector Subspace::coordinates(std::span<const Rational> v) const {
  Vector out(dim());
  for (std::size_t r = 0; r < dim(); ++r) out[r] = v[pivots_[r]];
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < dim(); ++r) rows.push_back(basis_.row_vector(r));
  for (std::size_t r = 0; r < other.dim(); ++r) rows.push_back(other.basis_.row_vector(r));
  return Subspace(ambient_, rows);
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return whole(ambient_);
  return from_rows(nullspace(basis_));
}

Matrix Subspace::projector() const {
  if (dim() == 0) return Matrix(ambient_, ambient_);
  const Matrix bt = basis_.transpose();
  return bt * inverse(basis_ * bt) * basis_;
}

}  // namespace nilkur
