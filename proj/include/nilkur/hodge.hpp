#pragma once

// Exact Hodge theory for the Dolbeault complex (Lambda^{0,*}, delbar) of a Lie
// algebra with complex structure, and for its version with values in V = h^{1,0}.
// The monomial bases are declared orthonormal, so adjoints are transposes.

#include "nilkur/exterior.hpp"
#include "nilkur/linalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nilkur {

class PreimageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using PolyVector = std::vector<Polynomial>;

/// M * v for a rational matrix and a vector of polynomials.
PolyVector apply_matrix(const Matrix& m, const PolyVector& v);
bool is_zero(const PolyVector& v);

/// Basis of Lambda^{0,q}: q-subsets of {1..n} in lexicographic order, as masks on the barred bits.
std::vector<Mask> barred_basis(unsigned n, unsigned q);

/// Finite cochain complex C^0 -> C^1 -> ... -> C^N with the standard inner product.
class HodgeComplex {
 public:
  struct Degree {
    Subspace exact;     // B^k = im D_{k-1}
    Subspace harmonic;  // H^k = ker Laplacian
    Subspace coexact;   // V^k = im D_k^T
    Matrix proj_exact, proj_harmonic, proj_coexact;
    Matrix delta;  // C^k -> C^{k-1}: inverse of D_{k-1} from V^{k-1} onto B^k, zero on (B^k)^perp
  };

  HodgeComplex() = default;
  /// differentials[k] : C^k -> C^{k+1}, a dims[k+1] x dims[k] matrix.
  HodgeComplex(std::vector<std::size_t> dims, std::vector<Matrix> differentials, unsigned decompose_up_to);

  std::size_t top() const { return dims_.size() - 1; }
  std::size_t dim(std::size_t k) const { return dims_.at(k); }
  /// D_k, or a zero matrix outside the complex.
  Matrix differential(std::size_t k) const;
  /// D_{k-1}, the map into degree k (0 columns for k = 0).
  Matrix differential_in(std::size_t k) const;
  std::size_t cohomology_dim(std::size_t k) const { return betti_.at(k); }
  bool has_degree(std::size_t k) const { return k < degrees_.size(); }
  const Degree& degree(std::size_t k) const;
  Matrix laplacian(std::size_t k) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Matrix> d_;
  std::vector<std::size_t> betti_;
  std::vector<Degree> degrees_;
};

/// Hodge decomposition of (Lambda^{0,*} h^*, delbar).
class HodgeDecomposition {
 public:
  HodgeDecomposition(const ExteriorAlgebra& E, unsigned max_degree = 2);

  unsigned n() const { return n_; }
  const std::vector<Mask>& basis(unsigned q) const { return bases_.at(q); }
  const HodgeComplex& complex() const { return complex_; }
  std::size_t hodge_number(unsigned q) const { return complex_.cohomology_dim(q); }

  Vector coordinates(const Form& f, unsigned q) const;  // constant coefficients only
  PolyVector poly_coordinates(const Form& f, unsigned q) const;
  Form form(const PolyVector& coords, unsigned q) const;
  Form form(const Vector& coords, unsigned q) const;

  std::vector<Form> exact_basis(unsigned q) const;
  std::vector<Form> harmonic_basis(unsigned q) const;
  std::vector<Form> coexact_basis(unsigned q) const;

 private:
  unsigned n_;
  std::vector<std::vector<Mask>> bases_;
  HodgeComplex complex_;
};

/// Hodge theory of Lambda^{0,*} (x) V with the Dolbeault operator of the holomorphic
/// tangent bundle: delbar(a (x) X) = delbar a (x) X + (-1)^q a ^ delbar X, where
/// delbar X_j = sum_b cw^b (x) [cX_b, X_j]^{1,0}. Coordinates of a V-valued (0,q)-form
/// are indexed s*n + j for the s-th barred basis monomial and the vector X_(j+1).
///
/// In the parallelisable case delbar X = 0, and the componentwise mode reuses the
/// scalar decomposition for each vector index instead of building the large matrices.
class ThetaHodge {
 public:
  ThetaHodge(const ExteriorAlgebra& E, unsigned max_degree = 2);

  bool componentwise() const { return componentwise_; }
  unsigned n() const { return n_; }
  std::size_t dim(unsigned q) const { return scalar_.basis(q).size() * n_; }
  const HodgeDecomposition& scalar() const { return scalar_; }

  /// h^q(Theta) for q = 0..n.
  std::vector<std::size_t> cohomology_dims() const;

  PolyVector coordinates(const VectorForm& v, unsigned q) const;
  VectorForm vector_form(const PolyVector& coords, unsigned q) const;

  PolyVector delbar(const PolyVector& v, unsigned q) const;
  PolyVector project_exact(const PolyVector& v, unsigned q) const;
  PolyVector project_harmonic(const PolyVector& v, unsigned q) const;
  PolyVector project_coexact(const PolyVector& v, unsigned q) const;
  /// The delta of degree q: B^q (x) V -> V^{q-1} (x) V, zero on the orthogonal complement of B^q.
  PolyVector delta(const PolyVector& v, unsigned q) const;
  /// delta restricted to its domain; throws PreimageError if v has harmonic or coexact parts.
  PolyVector delta_checked(const PolyVector& v, unsigned q) const;

  /// Harmonic space in degree q as a subspace of the coordinate space.
  Subspace harmonic(unsigned q) const;
  Subspace exact(unsigned q) const;
  /// Coordinates of v (harmonic) with respect to the RREF basis of harmonic(q).
  PolyVector harmonic_coordinates(const PolyVector& v, unsigned q) const;

 private:
  PolyVector apply_blockwise(const Matrix& scalar_matrix, const PolyVector& v) const;
  enum class Piece { exact, harmonic, coexact };
  PolyVector project(const PolyVector& v, unsigned q, Piece piece) const;

  unsigned n_;
  bool componentwise_;
  HodgeDecomposition scalar_;
  HodgeComplex full_;  // used only when !componentwise_
};

}  // namespace nilkur
