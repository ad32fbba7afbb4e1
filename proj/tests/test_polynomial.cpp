#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilkur/polynomial.hpp"

#include <random>

using namespace nilkur;

namespace {

Polynomial random_poly(std::mt19937& rng, unsigned vars = 3, unsigned terms = 4, unsigned deg = 3) {
  std::uniform_int_distribution<int> c(-5, 5), v(1, int(vars)), e(0, int(deg));
  Polynomial p;
  for (unsigned k = 0; k < terms; ++k) {
    Polynomial m = Rational(c(rng), 1 + rng() % 3);
    const int d = e(rng);
    for (int i = 0; i < d; ++i) m = m * Polynomial::t(unsigned(v(rng)), unsigned(v(rng)));
    p += m;
  }
  return p;
}

std::map<Var, Rational> random_point(std::mt19937& rng, unsigned vars = 3) {
  std::uniform_int_distribution<int> c(-7, 7);
  std::map<Var, Rational> pt;
  for (unsigned i = 1; i <= vars; ++i)
    for (unsigned j = 1; j <= vars; ++j) {
      Rational q(c(rng), 1 + rng() % 4);
      q.canonicalize();
      pt[Var::t(i, j)] = q;
    }
  return pt;
}

Polynomial t(unsigned i, unsigned j) { return Polynomial::t(i, j); }

}  // namespace

TEST_CASE("variable names") {
  CHECK(Var::t(2, 3).name() == "t2_3");
  CHECK(Var::aux().name() == "u");
  CHECK(Var::aux() < Var::t(1, 1));
  CHECK(Var::t(1, 9) < Var::t(2, 1));
}

TEST_CASE("grevlex on hand examples") {
  const Monomial a = Monomial(Var::t(1, 1), 2);
  const Monomial b = Monomial(Var::t(1, 1)) * Monomial(Var::t(1, 2));
  const Monomial c = Monomial(Var::t(1, 2), 2);
  CHECK(grevlex_compare(a, b) > 0);
  CHECK(grevlex_compare(b, c) > 0);
  // same degree: the one with the smaller exponent in the last variable wins
  const Monomial x = Monomial(Var::t(1, 1)) * Monomial(Var::t(2, 2));
  const Monomial y = Monomial(Var::t(1, 2)) * Monomial(Var::t(2, 1));
  CHECK(grevlex_compare(y, x) > 0);
  // higher degree always wins
  CHECK(grevlex_compare(Monomial(Var::t(3, 3), 3), a) > 0);
  CHECK(grevlex_compare(Monomial(), Monomial(Var::t(1, 1))) < 0);
  CHECK(grevlex_compare(a, a) == 0);
}

TEST_CASE("canonical text form and parsing") {
  const Polynomial p = t(1, 1) * t(2, 2) - t(1, 2) * t(2, 1);
  CHECK(p.to_string() == "-t1_2*t2_1 + t1_1*t2_2");
  CHECK(parse_polynomial(p.to_string()) == p);
  CHECK(parse_polynomial("delta(12;12)") == p);
  CHECK(parse_polynomial("(t1_1 + 1)^2") == t(1, 1) * t(1, 1) + t(1, 1) * Rational(2) + 1);
  CHECK(parse_polynomial("1/2*t3_1 - 3") == t(3, 1) * Rational(1, 2) - 3);
  CHECK(parse_polynomial("0").is_zero());
  CHECK(Polynomial().to_string() == "0");
  CHECK_THROWS_AS(parse_polynomial("t1_"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("t1_1 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("(t1_1"), std::invalid_argument);
}

TEST_CASE("text round trip on random polynomials") {
  std::mt19937 rng(3);
  for (int k = 0; k < 100; ++k) {
    const Polynomial p = random_poly(rng);
    CHECK(parse_polynomial(p.to_string()) == p);
  }
}

TEST_CASE("ring laws and evaluation is a homomorphism") {
  std::mt19937 rng(5);
  for (int k = 0; k < 60; ++k) {
    const Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    Polynomial s = a;
    s.add_scaled(b, Rational(-2, 3));
    CHECK(s == a - b * Rational(2, 3));

    const auto pt = random_point(rng);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + c).evaluate(pt) == a.evaluate(pt) + c.evaluate(pt));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("terms are sorted descending and homogeneous parts add up") {
  std::mt19937 rng(9);
  for (int k = 0; k < 40; ++k) {
    const Polynomial p = random_poly(rng, 3, 6);
    for (std::size_t i = 1; i < p.terms().size(); ++i)
      CHECK(grevlex_compare(p.terms()[i - 1].monomial, p.terms()[i].monomial) > 0);
    Polynomial sum;
    for (int d = 0; d <= p.degree(); ++d) {
      const Polynomial h = p.homogeneous_part(unsigned(d));
      CHECK((h.is_zero() || h.is_homogeneous()));
      sum += h;
    }
    CHECK(sum == p);
  }
}

TEST_CASE("minors match the determinant definitions") {
  // delta_{ij}^{kl} = t_i^k t_j^l - t_i^l t_j^k
  CHECK(minor2(1, 3, 2, 4) == t(1, 2) * t(3, 4) - t(1, 4) * t(3, 2));
  CHECK(parse_polynomial("delta(13;24)") == minor2(1, 3, 2, 4));
  // Laplace expansion along the first lower index, written out by hand
  const Polynomial D = minor3(1, 2, 3, 1, 2, 3);
  std::mt19937 rng(13);
  for (int k = 0; k < 10; ++k) {
    const auto pt = random_point(rng);
    auto v = [&](unsigned i, unsigned j) { return pt.at(Var::t(i, j)); };
    // rows indexed by the upper index, columns by the lower index: M(r, c) = t_c^r
    const Rational det = v(1, 1) * (v(2, 2) * v(3, 3) - v(3, 2) * v(2, 3)) -
                         v(2, 1) * (v(1, 2) * v(3, 3) - v(3, 2) * v(1, 3)) +
                         v(3, 1) * (v(1, 2) * v(2, 3) - v(2, 2) * v(1, 3));
    CHECK(D.evaluate(pt) == det);
  }
  CHECK(parse_polynomial("Delta(123;123)") == D);
  // alternating in the lower indices
  CHECK(minor2(2, 1, 1, 2) == -minor2(1, 2, 1, 2));
}

TEST_CASE("normalize and IdealGens") {
  const Polynomial p = t(1, 1) * Rational(-2, 3) + t(2, 1) * Rational(4, 3);
  const Polynomial n = normalize(p);
  CHECK(n.leading_term().coeff > 0);
  CHECK(n == normalize(p * Rational(7)));
  const IdealGens I(std::vector<Polynomial>{p, p * Rational(3), Polynomial(), t(1, 1)});
  CHECK(I.size() == 2);
  CHECK(I.variables() == std::set<Var>{Var::t(1, 1), Var::t(2, 1)});
}

TEST_CASE("substitution and polynomial lines") {
  const Polynomial p = parse_polynomial("t1_1*t2_2 + t1_2");
  const Polynomial q = p.substitute([](Var v) { return v == Var::t(1, 1) ? Polynomial(2) : Polynomial::variable(v); });
  CHECK(q == parse_polynomial("2*t2_2 + t1_2"));
  const auto lines = parse_polynomial_lines("# comment\nt1_1\n\n  t2_1 - t1_1  # trailing\n");
  REQUIRE(lines.size() == 2);
  CHECK(lines[1] == t(2, 1) - t(1, 1));
}
