#pragma once

// Exterior algebra on h_C^* = V^* + conj(V)^* with polynomial coefficients, and
// forms with values in h_C. Covectors are ordered w^1..w^n, cw^1..cw^n; a basis
// monomial is a bit mask with bit a for w^(a+1) and bit n+a for cw^(a+1).

#include "nilkur/algebra.hpp"
#include "nilkur/polynomial.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nilkur {

using Mask = std::uint64_t;

struct Covector {
  unsigned index = 0;  // 0-based
  bool barred = false;
};

class Form {
 public:
  Form() = default;
  explicit Form(unsigned n) : n_(n) {}

  /// Wedge of the given covectors in the given order (sign from sorting; 0 on repeats).
  static Form monomial(unsigned n, const std::vector<Covector>& covectors, const Polynomial& coeff = 1);
  static Form basis(unsigned n, Mask mask, const Polynomial& coeff = 1);

  unsigned ambient() const { return n_; }
  const std::map<Mask, Polynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(Mask mask) const;

  /// (p, q) of a basis monomial.
  std::pair<unsigned, unsigned> bidegree(Mask mask) const;

  void add_term(Mask mask, const Polynomial& coeff);
  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form operator+(const Form& other) const;
  Form operator-(const Form& other) const;
  Form operator-() const;
  Form operator*(const Polynomial& c) const;

  /// Keeps only the terms of bidegree (p, q).
  Form component(unsigned p, unsigned q) const;

  /// e.g. "w1^w2 + 2*cw3^cw4"
  std::string to_string() const;

  bool operator==(const Form& o) const { return terms_ == o.terms_ && (terms_.empty() || n_ == o.n_); }

 private:
  unsigned n_ = 0;
  std::map<Mask, Polynomial> terms_;
};

/// Sign of e_a ^ e_b relative to e_(a|b) for disjoint masks (+1 or -1).
int wedge_sign(Mask a, Mask b);

Form wedge(const Form& a, const Form& b);

/// Interior product with X_j (barred = false) or cX_j (barred = true).
Form contract(unsigned j, bool barred, const Form& f);

/// Element of Lambda(h_C^*) (x) h_C: component index j < n is X_(j+1), n + j is cX_(j+1).
class VectorForm {
 public:
  VectorForm() = default;
  explicit VectorForm(unsigned n) : n_(n) {}
  static VectorForm simple(const Form& f, unsigned vector_index);

  unsigned ambient() const { return n_; }
  const std::map<unsigned, Form>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  Form component(unsigned vector_index) const;
  bool has_barred_vectors() const;

  void add(unsigned vector_index, const Form& f);
  VectorForm& operator+=(const VectorForm& other);
  VectorForm& operator-=(const VectorForm& other);
  VectorForm operator+(const VectorForm& other) const;
  VectorForm operator-(const VectorForm& other) const;
  VectorForm operator*(const Polynomial& c) const;

  /// e.g. "(cw1^cw3)*X4 - 2*(cw3)*X6"
  std::string to_string() const;

  bool operator==(const VectorForm& o) const { return comps_ == o.comps_ && (comps_.empty() || n_ == o.n_); }

 private:
  unsigned n_ = 0;
  std::map<unsigned, Form> comps_;
};

/// The exterior algebra of a Lie algebra with complex structure, with its differential.
class ExteriorAlgebra {
 public:
  explicit ExteriorAlgebra(const ComplexStructureAlgebra& H);
  explicit ExteriorAlgebra(const LieAlgebra& L);

  unsigned n() const { return n_; }
  bool parallelisable() const { return parallelisable_; }
  const LieAlgebra& complexification() const { return hc_; }

  Form covector(Covector c) const { return Form::monomial(n_, {c}); }

  /// Chevalley-Eilenberg differential, d(a^b) = da^b + (-1)^|a| a^db.
  Form d(const Form& f) const;
  Form del(const Form& f) const;
  Form delbar(const Form& f) const;
  Form lie_derivative(unsigned j, bool barred, const Form& f) const;

  /// Bracket of basis vectors of h_C (indices as in VectorForm).
  Vector bracket(unsigned a, unsigned b) const;

  /// d of a basis monomial, with rational coefficients.
  std::vector<std::pair<Mask, Rational>> d_basis(Mask mask) const;

 private:
  unsigned n_;
  bool parallelisable_;
  LieAlgebra hc_;
  std::vector<std::vector<std::pair<Mask, Rational>>> d_cov_;  // d of each covector
};

/// [a, b] for forms of type (0,1) with (1,0) vector parts on a parallelisable ambient:
/// [a^X, b^Y] = a^b (x) [X, Y].
VectorForm schouten_parallelisable(const ExteriorAlgebra& E, const VectorForm& a, const VectorForm& b);

/// General bracket of (0,1)-forms with (1,0) vector values:
/// [a^X, b^Y] = b ^ i_Y del a (x) X + a ^ i_X del b (x) Y + a ^ b (x) [X, Y].
VectorForm schouten_general(const ExteriorAlgebra& E, const VectorForm& a, const VectorForm& b);

}  // namespace nilkur
