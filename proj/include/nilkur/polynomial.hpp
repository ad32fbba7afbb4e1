#pragma once

// Sparse multivariate polynomials over Q in the deformation parameters t_i^j.
//
// A variable is identified by the pair (i, j): i indexes the harmonic (0,1)-form,
// j the vector X_j. Variables are ordered row-major, t1_1 first; "first" means
// largest in the monomial orders below. The auxiliary variable `u` used by ideal
// elimination has id 0 and precedes every t variable.

#include "nilkur/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilkur {

struct Var {
  std::uint32_t id = 0;

  static constexpr Var t(unsigned i, unsigned j) { return Var{(std::uint32_t(i) << 16) | std::uint32_t(j)}; }
  static constexpr Var aux() { return Var{0}; }

  constexpr unsigned row() const { return id >> 16; }
  constexpr unsigned col() const { return id & 0xFFFFu; }
  std::string name() const;

  constexpr auto operator<=>(const Var&) const = default;
};

class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (variable id, exponent)

  Monomial() = default;
  explicit Monomial(Var v, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(Var v) const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;

  std::string to_string() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;  // sorted by variable id, exponents > 0
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic comparison: negative if a < b, 0 if equal, positive if a > b.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants embed implicitly
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT
  static Polynomial variable(Var v);
  static Polynomial t(unsigned i, unsigned j) { return variable(Var::t(i, j)); }
  static Polynomial from_terms(std::vector<Term> terms);  // combines and sorts

  /// Terms in descending grevlex order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  std::size_t size() const { return terms_.size(); }

  /// Maximal total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(unsigned d) const;

  const Term& leading_term() const;  // grevlex; precondition: nonzero
  std::set<Var> variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  /// this += c * other, without a temporary for the product.
  void add_scaled(const Polynomial& other, const Rational& c);

  /// Substitutes every variable; throws std::out_of_range if one is unassigned.
  Rational evaluate(const std::map<Var, Rational>& point) const;
  /// Substitutes t_i^j := point[(i-1)*cols + (j-1)]; throws std::out_of_range on a mismatch.
  Rational evaluate(std::span<const Rational> point, unsigned cols) const;
  Polynomial substitute(const std::function<Polynomial(Var)>& image) const;

  /// Canonical text form, e.g. "t1_1*t2_2 - t1_2*t2_1".
  std::string to_string() const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// delta_{ij}^{kl} = t_i^k t_j^l - t_i^l t_j^k.
Polynomial minor2(unsigned i, unsigned j, unsigned k, unsigned l);
/// Delta_{ijk}^{lmn}: determinant with rows indexed by the upper indices l,m,n and columns by i,j,k.
Polynomial minor3(unsigned i, unsigned j, unsigned k, unsigned l, unsigned m, unsigned n);

/// Divides out the rational content and makes the grevlex-leading coefficient positive.
Polynomial normalize(const Polynomial& p);

/// Parses the canonical text form. Also accepts parentheses, integer powers `^k`,
/// rational literals `p/q`, and the shorthands `delta(ij;kl)` and `Delta(ijk;lmn)`
/// (lower indices before the semicolon). Throws std::invalid_argument.
Polynomial parse_polynomial(std::string_view text);

/// Ideal given by generators, each normalised; zero generators dropped, duplicates removed.
class IdealGens {
 public:
  IdealGens() = default;
  explicit IdealGens(const std::vector<Polynomial>& gens);

  const std::vector<Polynomial>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }
  std::size_t size() const { return gens_.size(); }
  std::set<Var> variables() const;
  bool operator==(const IdealGens&) const = default;

 private:
  std::vector<Polynomial> gens_;
};

/// Reads one polynomial per line; '#' starts a comment, blank lines are skipped.
std::vector<Polynomial> parse_polynomial_lines(std::string_view text);

}  // namespace nilkur
