#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilkur/groebner.hpp"
#include "nilkur/linalg.hpp"

#include <random>

using namespace nilkur;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }
IdealGens I(std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* g : gens) v.push_back(P(g));
  return IdealGens(v);
}
std::vector<Polynomial> polys(std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* g : gens) v.push_back(P(g));
  return v;
}

Polynomial random_poly(std::mt19937& rng, unsigned vars = 2, unsigned terms = 3, unsigned deg = 2) {
  std::uniform_int_distribution<int> c(-3, 3), v(1, int(vars)), e(0, int(deg));
  Polynomial p;
  for (unsigned k = 0; k < terms; ++k) {
    Polynomial m = Rational(c(rng));
    const int d = e(rng);
    for (int i = 0; i < d; ++i) m = m * Polynomial::t(unsigned(v(rng)), unsigned(v(rng)));
    p += m;
  }
  return p;
}

Monomial random_monomial(std::mt19937& rng) {
  Monomial m;
  for (unsigned k = 0, d = 1 + rng() % 3; k < d; ++k) m = m * Monomial(Var::t(1, 1 + rng() % 3));
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (unsigned j = 1; j <= 3; ++j) {
    const auto e = std::max(a.exponent(Var::t(1, j)), b.exponent(Var::t(1, j)));
    if (e) out = out * Monomial(Var::t(1, j), e);
  }
  return out;
}

Polynomial from_monomial(const Monomial& m) { return Polynomial::from_terms({{m, Rational(1)}}); }

}  // namespace

TEST_CASE("hand-computed bases") {
  CHECK(buchberger(I({"t1_1"})).polys() == polys({"t1_1"}));
  CHECK(buchberger(IdealGens(std::vector<Polynomial>{Polynomial()})).polys().empty());
  // S(t1_1*t2_2 - t1_2*t2_1, t1_1) reduces to t1_2*t2_1
  const GroebnerBasis G = buchberger(I({"t1_1*t2_2 - t1_2*t2_1", "t1_1"}));
  CHECK(G.polys() == polys({"t1_1", "t1_2*t2_1"}));
  // x^2 + y^2 - 1, x - y in lex with x > y gives {2y^2 - 1, x - y}
  const GroebnerBasis L = buchberger(I({"t1_1^2 + t1_2^2 - 1", "t1_1 - t1_2"}), OrderKind::lex);
  CHECK(L.polys() == polys({"2*t1_2^2 - 1", "t1_1 - t1_2"}));
  CHECK(buchberger(I({"t1_1 + 1", "t1_1"})).is_unit());
}

TEST_CASE("linear ideals reduce to the row echelon form") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const unsigned nvars = 4;
    const std::size_t rows = 1 + rng() % 3;
    Matrix m(rows, nvars);
    std::vector<Polynomial> gens;
    for (std::size_t r = 0; r < rows; ++r) {
      Polynomial g;
      for (unsigned c = 0; c < nvars; ++c) {
        m(r, c) = int(rng() % 5) - 2;
        g += Polynomial::t(1, c + 1) * m(r, c);
      }
      gens.push_back(g);
    }
    const RowEchelon e = rref(m);
    std::vector<Polynomial> expected;
    for (std::size_t r = e.reduced.rows(); r-- > 0;) {
      Polynomial g;
      for (unsigned c = 0; c < nvars; ++c) g += Polynomial::t(1, c + 1) * e.reduced(r, c);
      expected.push_back(normalize(g));
    }
    std::set<Var> vars;
    for (unsigned c = 1; c <= nvars; ++c) vars.insert(Var::t(1, c));
    CHECK(buchberger(gens, MonomialOrder::standard(vars)).polys() == expected);
  }
}

TEST_CASE("normal forms") {
  const GroebnerBasis G = buchberger(I({"t1_1"}));
  CHECK(normal_form(P("t2_2"), G) == P("t2_2"));
  CHECK(normal_form(P("t1_1*t2_2 + 3*t1_1"), G).is_zero());
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<Polynomial> gens = {random_poly(rng), random_poly(rng)};
    const GroebnerBasis B = buchberger(IdealGens(gens));
    for (const auto& g : gens) CHECK(normal_form(g, B).is_zero());
    const Polynomial p = random_poly(rng, 2, 4, 3);
    const Polynomial q = random_poly(rng);
    // the remainder is unchanged by adding an ideal element (up to the primitive scaling)
    CHECK(normalize(normal_form(p + q * gens[0], B)) == normalize(normal_form(p, B)));
    const Polynomial r = normal_form(p, B);
    for (const auto& t : r.terms())
      for (const auto& b : B.polys()) CHECK_FALSE(leading_monomial(b, B.order()).divides(t.monomial));
  }
}

TEST_CASE("Buchberger post-conditions on random ideals") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> gens;
    for (unsigned k = 0, n = 2 + rng() % 2; k < n; ++k) gens.push_back(random_poly(rng, 2, 3, 2));
    for (OrderKind kind : {OrderKind::grevlex, OrderKind::lex}) {
      const GroebnerBasis G = buchberger(IdealGens(gens), kind);
      CHECK(s_polynomials_reduce_to_zero(G));
      CHECK(is_reduced(G));
      CHECK(buchberger(G.polys(), G.order()) == G);
      for (const auto& g : G.polys()) CHECK(g.leading_term().coeff != 0);
      // every input lies in the ideal of the basis and vice versa
      for (const auto& g : gens) CHECK(normal_form(g, G).is_zero());
      CHECK(ideal_equal(IdealGens(G.polys()), IdealGens(gens)));
    }
  }
}

TEST_CASE("equality and containment") {
  CHECK(ideal_equal(I({"t1_1*t2_2 - t1_2"}), I({"2*t1_1*t2_2 - 2*t1_2"})));
  CHECK_FALSE(ideal_equal(I({"t1_1"}), I({"t1_1^2"})));
  CHECK(ideal_contains(I({"t1_1"}), I({"t1_1^2"})));
  CHECK_FALSE(ideal_contains(I({"t1_1^2"}), I({"t1_1"})));
  CHECK(ideal_member(P("t1_1^2*t2_1 - t1_2*t2_1"), I({"t1_1^2 - t1_2"})));
  CHECK_FALSE(ideal_member(P("t1_1"), I({"t1_1^2 - t1_2"})));
  CHECK(ideal_equal(IdealGens(), IdealGens()));
  CHECK_FALSE(ideal_equal(IdealGens(), I({"t1_1"})));
}

TEST_CASE("intersections") {
  CHECK(ideal_equal(ideal_intersect(I({"t1_1"}), I({"t1_2"})), I({"t1_1*t1_2"})));
  const IdealGens J = I({"t1_1*t2_2 - t1_2*t2_1", "t1_1^2"});
  CHECK(ideal_equal(ideal_intersect(J, J), J));
  // monomial ideals: the intersection is generated by pairwise lcms
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Monomial> a, b;
    for (unsigned k = 0, n = 1 + rng() % 3; k < n; ++k) a.push_back(random_monomial(rng));
    for (unsigned k = 0, n = 1 + rng() % 3; k < n; ++k) b.push_back(random_monomial(rng));
    std::vector<Polynomial> ga, gb, lcms;
    for (const auto& m : a) ga.push_back(from_monomial(m));
    for (const auto& m : b) gb.push_back(from_monomial(m));
    for (const auto& x : a)
      for (const auto& y : b) lcms.push_back(from_monomial(lcm(x, y)));
    const IdealGens meet = ideal_intersect(IdealGens(ga), IdealGens(gb));
    CHECK(ideal_equal(meet, IdealGens(lcms)));
    CHECK(ideal_contains(IdealGens(ga), meet));
    CHECK(ideal_contains(IdealGens(gb), meet));
  }
  // non-monomial ideals: the result lies in both
  for (int trial = 0; trial < 10; ++trial) {
    const IdealGens A({random_poly(rng), random_poly(rng)});
    const IdealGens B({random_poly(rng)});
    const IdealGens meet = ideal_intersect(A, B);
    CHECK(ideal_contains(A, meet));
    CHECK(ideal_contains(B, meet));
    // the product is contained in the intersection
    for (const auto& x : A.generators())
      for (const auto& y : B.generators()) CHECK(ideal_member(x * y, meet));
  }
}

TEST_CASE("orders and deadlines") {
  std::set<Var> vars = {Var::t(1, 1), Var::t(1, 2)};
  const MonomialOrder o = MonomialOrder::standard(vars);
  CHECK(o.variables == std::vector<Var>{Var::t(1, 1), Var::t(1, 2)});
  const MonomialOrder lex = MonomialOrder::standard(vars, OrderKind::lex);
  // t1_1 > t1_2^3 in lex, the reverse in grevlex
  CHECK(leading_monomial(P("t1_1 + t1_2^3"), lex) == Monomial(Var::t(1, 1)));
  CHECK(leading_monomial(P("t1_1 + t1_2^3"), o) == Monomial(Var::t(1, 2), 3));

  const auto past = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  const IdealGens hard = I({"t1_1^3 - t1_2*t2_1*t2_2", "t1_2^3 - t1_1*t2_1^2", "t2_1^3 - t1_1*t1_2*t2_2",
                            "t2_2^3 - t1_1^2*t2_1"});
  CHECK_THROWS_AS(buchberger(hard, OrderKind::grevlex, past), Timeout);
}
