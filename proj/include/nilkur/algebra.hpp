#pragma once

// Nilpotent Lie algebras given by exact structure constants, and Lie algebras
// with a left-invariant complex structure given by the differentials of their
// (1,0)-covectors. All indices in this API are 0-based; text formats are 1-based.

#include "nilkur/linalg.hpp"
#include "nilkur/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilkur {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class JacobiViolation : public std::runtime_error {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k);
  std::size_t i, j, k;  // 0-based witness triple
};

class NotNilpotent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complex Lie algebra [X_i, X_j] = sum_k c^k_ij X_k with rational constants.
class LieAlgebra {
 public:
  struct Bracket {
    std::size_t i, j;  // i < j
    Vector coeffs;     // length dim
  };

  LieAlgebra() = default;
  LieAlgebra(std::size_t dim, const std::vector<Bracket>& brackets, std::string name = {},
             std::vector<std::string> labels = {});

  static LieAlgebra abelian(std::size_t dim);
  /// b_m = V + Lambda^2 V with [e_a, e_b] = e_ab; dimension m(m+1)/2.
  static LieAlgebra free_two_step(std::size_t m);
  static LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// c^k_{ij}, antisymmetric in (i, j).
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  bool is_abelian() const;

  /// Coefficient of w^a ^ w^b (a < b) in d w^k, i.e. -c^k_ab.
  Rational differential_coeff(std::size_t k, std::size_t a, std::size_t b) const { return -constant(a, b, k); }

  /// Salamon-style rendering "(0,0,12,13)"; requires dim <= 9 and integer constants.
  std::string salamon() const;

  bool operator==(const LieAlgebra& other) const { return dim_ == other.dim_ && c_ == other.c_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
  std::string name_;
  std::vector<std::string> labels_;
};

/// Real Lie algebra h with complex structure, h_C = V + conj(V), stored via the
/// differentials of the (1,0)-covectors w^1..w^n:
///   d w^k = sum_{a<b} holo[k](a,b) w^a ^ w^b + sum_{a,b} mixed[k](a,b) cw^a ^ w^b.
/// The conjugate equations are implied. Only (2,0) and (1,1) parts are representable,
/// so integrability holds by construction.
class ComplexStructureAlgebra {
 public:
  ComplexStructureAlgebra() = default;
  ComplexStructureAlgebra(std::size_t dim_complex, std::vector<Matrix> holo, std::vector<Matrix> mixed,
                          std::string name = {});

  std::size_t dim_complex() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const Rational& holo(std::size_t k, std::size_t a, std::size_t b) const { return holo_[k](a, b); }
  const Rational& mixed(std::size_t k, std::size_t a, std::size_t b) const { return mixed_[k](a, b); }

  /// [X_a, X_b] inside V.
  Vector bracket_holo(std::size_t a, std::size_t b) const;
  /// (1,0)-component of [conj(X_b), X_j].
  Vector bracket_mixed_10(std::size_t b, std::size_t j) const;

  /// The complexification h_C as a 2n-dimensional algebra with basis X_1..X_n, cX_1..cX_n.
  LieAlgebra complexification() const;

  bool operator==(const ComplexStructureAlgebra& o) const {
    return n_ == o.n_ && holo_ == o.holo_ && mixed_ == o.mixed_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Matrix> holo_;
  std::vector<Matrix> mixed_;
  std::string name_;
};

enum class FreeVerdict { free, not_free, abelian };
enum class ComplexStructureKind { parallelisable, abelian, generic };

std::string to_string(FreeVerdict v);
std::string to_string(ComplexStructureKind k);
FreeVerdict free_verdict_from_string(std::string_view s);

LieAlgebra parse_salamon(std::string_view text);
/// Line format: optional "dim N", then "bracket i j = c1*k1 + c2*k2 ..."; '#' comments.
LieAlgebra parse_structure_constants(std::string_view text);
/// Line format: "dw<k> = [+-][c*]w<a>^w<b> + [c*]cw<a>^w<b> ..."; optional "dim N"; '#' comments.
ComplexStructureAlgebra parse_complex_structure(std::string_view text);

/// Throws JacobiViolation or NotNilpotent.
void validate(const LieAlgebra& L);
void validate(const ComplexStructureAlgebra& H);

std::vector<Subspace> descending_central_series(const LieAlgebra& L);
std::size_t nilpotency_index(const LieAlgebra& L);
Subspace center(const LieAlgebra& L);
/// Ann([g,g]) inside g*, identified with Q^n through the dual basis.
Subspace derived_annihilator(const LieAlgebra& L);
FreeVerdict free_two_step_quotient_test(const LieAlgebra& L);

ComplexStructureKind classify_complex_structure(const ComplexStructureAlgebra& H);
ComplexStructureAlgebra to_complex_structure(const LieAlgebra& L);

}  // namespace nilkur
