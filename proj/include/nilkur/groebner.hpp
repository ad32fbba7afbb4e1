#pragma once

// Buchberger's algorithm over Q with fraction-free integer coefficients, and the
// ideal operations built on it (membership, equality, intersection).
//
// Pair selection follows the normal strategy: smallest lcm degree, ties broken
// by the older pair. Useless pairs are dropped with the Gebauer-Moeller criteria.

#include "nilkur/polynomial.hpp"

#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace nilkur {

class Timeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OrderKind {
  grevlex,
  lex,
  elimination,  // the first variable is eliminated: compare its exponent first, then grevlex on the rest
};

struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::vector<Var> variables;  // first = largest

  /// Variables sorted u first, then t1_1, t1_2, ... (row-major).
  static MonomialOrder standard(const std::set<Var>& vars, OrderKind kind = OrderKind::grevlex);
  bool operator==(const MonomialOrder&) const = default;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(MonomialOrder order, std::vector<Polynomial> polys) : order_(std::move(order)), polys_(std::move(polys)) {}

  const MonomialOrder& order() const { return order_; }
  /// Reduced basis: primitive integer coefficients, positive leading coefficient,
  /// sorted by increasing leading monomial.
  const std::vector<Polynomial>& polys() const { return polys_; }
  bool is_unit() const { return polys_.size() == 1 && polys_[0].is_constant(); }
  bool operator==(const GroebnerBasis&) const = default;

 private:
  MonomialOrder order_;
  std::vector<Polynomial> polys_;
};

/// Reduced Groebner basis. Variables of the generators missing from the order are an error.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order, Deadline deadline = {});
GroebnerBasis buchberger(const IdealGens& gens, OrderKind kind = OrderKind::grevlex, Deadline deadline = {});

/// Remainder of full multivariate division, scaled to a primitive integer polynomial
/// (the scaling does not affect whether it vanishes).
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);

/// Leading monomial of p in the given order.
Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);

/// Buchberger's criterion, checked directly on every pair.
bool s_polynomials_reduce_to_zero(const GroebnerBasis& G);
/// Reducedness: no term of any element is divisible by another element's leading monomial.
bool is_reduced(const GroebnerBasis& G);

bool ideal_member(const Polynomial& p, const IdealGens& I, Deadline deadline = {});
/// I contained in J.
bool ideal_contains(const IdealGens& J, const IdealGens& I, Deadline deadline = {});
bool ideal_equal(const IdealGens& I, const IdealGens& J, Deadline deadline = {});
/// I cap J by eliminating u from u*I + (1-u)*J.
IdealGens ideal_intersect(const IdealGens& I, const IdealGens& J, Deadline deadline = {});

}  // namespace nilkur
