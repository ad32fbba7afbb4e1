#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilkur/groebner.hpp"
#include "nilkur/kuranishi.hpp"

#include <random>

using namespace nilkur;

namespace {

const char* kH7 = "dim 7\ndw6 = w1^w2\ndw7 = w3^w4 + cw1^w5\n";

IdealGens gens(std::initializer_list<const char*> texts) {
  std::vector<Polynomial> v;
  for (const char* t : texts) v.push_back(parse_polynomial(t));
  return IdealGens(v);
}

// Independent test of the quadratic obstruction of a parallelisable algebra at a point T:
// [Phi_1, Phi_1] = sum t_i^a t_k^b cw^i ^ cw^k (x) [X_a, X_b] must be delbar-exact,
// where exactness is decided against the span of delbar of all (0,1)-covectors.
bool quadratic_class_vanishes(const LieAlgebra& L, const std::vector<std::size_t>& closed,
                              const std::vector<std::vector<Rational>>& T) {
  const unsigned n = unsigned(L.dim());
  const ExteriorAlgebra E(L);
  const auto pairs = barred_basis(n, 2);
  auto index_of = [&](Mask m) { return std::size_t(std::find(pairs.begin(), pairs.end(), m) - pairs.begin()); };
  std::vector<Vector> exact;
  for (unsigned k = 0; k < n; ++k) {
    Vector v(pairs.size());
    const Form f = E.delbar(E.covector({k, true}));
    for (const auto& [m, c] : f.terms()) v[index_of(m)] = c.terms()[0].coeff;
    exact.push_back(v);
  }
  const Subspace B(pairs.size(), exact);
  for (unsigned x = 0; x < n; ++x) {
    Vector component(pairs.size());
    for (std::size_t i = 0; i < closed.size(); ++i)
      for (std::size_t k = 0; k < closed.size(); ++k)
        for (unsigned a = 0; a < n; ++a)
          for (unsigned b = 0; b < n; ++b) {
            const Rational c = T[i][a] * T[k][b] * L.constant(a, b, x);
            if (c == 0 || i == k) continue;
            const Form w = Form::monomial(n, {{unsigned(closed[i]), true}, {unsigned(closed[k]), true}});
            const auto& [m, s] = *w.terms().begin();
            component[index_of(m)] += c * s.terms()[0].coeff;
          }
    if (!B.contains(component)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("printed generators") {
  const auto r = analyze(parse_salamon("(0,0,12,13)"));
  CHECK(ideal_equal(IdealGens(r.generators), gens({"t2_1*(t1_1*t2_2 - t1_2*t2_1)"})));
  const auto s = analyze(parse_salamon("(0,0,0,12)"));
  CHECK(ideal_equal(IdealGens(s.generators), gens({"delta(13;12)", "delta(23;12)"})));
  CHECK(s.max_generator_degree == 2);
  CHECK(r.max_generator_degree == 3);
}

TEST_CASE("quadratic obstruction agrees with a direct exactness test") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> c(-3, 3);
  for (const char* s : {"(0,0,0,12)", "(0,0,0,12,13)", "(0,0,0,0,12+34)", "(0,0,12)"}) {
    const LieAlgebra L = parse_salamon(s);
    const KuranishiProblem P(L);
    const ObstructionResult q = P.quadratic_obstruction_closed_form();
    std::vector<std::size_t> closed;
    for (std::size_t k = 0; k < L.dim(); ++k) {
      bool zero = true;
      for (std::size_t a = 0; a < L.dim(); ++a)
        for (std::size_t b = 0; b < L.dim(); ++b) zero = zero && L.constant(a, b, k) == 0;
      if (zero) closed.push_back(k);
    }
    REQUIRE(P.theta().scalar().hodge_number(1) == closed.size());
    int agree_zero = 0, agree_nonzero = 0;
    for (int trial = 0; trial < 60; ++trial) {
      // dense points, rank-one points and sparse points
      std::vector<std::vector<Rational>> T(closed.size(), std::vector<Rational>(L.dim()));
      const int kind = trial % 3;
      Vector u(closed.size()), w(L.dim());
      for (auto& x : u) x = c(rng);
      for (auto& x : w) x = c(rng);
      for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j)
          T[i][j] = kind == 0 ? Rational(c(rng)) : kind == 1 ? u[i] * w[j] : Rational(rng() % 4 == 0 ? c(rng) : 0);
      std::map<Var, Rational> pt;
      for (Var v : P.variables()) pt[v] = T.at(v.row() - 1).at(v.col() - 1);
      bool all_zero = true;
      for (const auto& g : q.generators.generators()) all_zero = all_zero && g.evaluate(pt) == 0;
      const bool oracle = quadratic_class_vanishes(L, closed, T);
      CHECK(all_zero == oracle);
      (oracle ? agree_zero : agree_nonzero)++;
    }
    CHECK(agree_zero > 0);
  }
}

TEST_CASE("closed form equals the degree-two recursion") {
  for (const char* s : {"(0,0,12)", "(0,0,0,12)", "(0,0,12,13)", "(0,0,0,12,13+24)", "(0,0,12,13,14+23)"}) {
    const KuranishiProblem P(parse_salamon(s));
    const auto closed = P.quadratic_obstruction_closed_form();
    const auto two = P.obstruction(P.phi_recursion(2));
    CHECK(closed.harmonic_coefficients == two.harmonic_coefficients);
  }
}

TEST_CASE("recursion and Maurer-Cartan") {
  const KuranishiProblem P(parse_salamon("(0,0,12,13)"));
  const PhiSeries s = P.phi_recursion();
  CHECK(s.max_degree == 3);
  CHECK(s.phi[1] == P.generic_phi1());
  // Phi_k is homogeneous of degree k in t
  for (unsigned k = 1; k <= s.max_degree; ++k)
    for (const auto& c : s.phi[k]) CHECK((c.is_zero() || (c.is_homogeneous() && c.degree() == int(k))));
  CHECK(is_zero(P.mc_residual(s)));

  // where the residual does not vanish it lies in the obstruction ideal
  const KuranishiProblem Q(parse_salamon("(0,0,12,13,14)"));
  const PhiSeries t = Q.phi_recursion();
  const GroebnerBasis G = buchberger(Q.obstruction(t).generators);
  for (const auto& c : Q.mc_residual(t)) CHECK(normal_form(c, G).is_zero());
}

TEST_CASE("abelian and free algebras") {
  for (unsigned k = 1; k <= 4; ++k) {
    const auto r = analyze(LieAlgebra::abelian(k));
    CHECK(r.smooth);
    CHECK(r.generators.empty());
    CHECK(r.kuranishi_dim == (long long)(k * k));
    const bool listed = k * k * (k + 1) / 2 != k * k;
    CHECK(r.discrepancies.size() == (listed ? 1u : 0u));
    if (listed) {
      CHECK(r.discrepancies[0].tag == "paper-discrepancy");
      CHECK(r.discrepancies[0].paper == (long long)(k * k * (k + 1) / 2));
    }
  }
  for (std::size_t m : {2u, 3u}) {
    const auto r = analyze(LieAlgebra::free_two_step(m));
    CHECK(r.smooth);
    CHECK(r.free_verdict == "free");
    CHECK_FALSE(r.lambda2_singular);
    CHECK(r.kuranishi_dim == (long long)(m * m * (m + 1) / 2));
    bool dim_kur = false;
    for (const auto& d : r.discrepancies) dim_kur = dim_kur || (d.quantity == "dim_kur" && d.tag == "paper-discrepancy");
    CHECK(dim_kur);
  }
  const auto ns = analyze(parse_salamon("(0,0,0,12)"));
  CHECK(ns.lambda2_singular);
  CHECK(ns.free_verdict == "not_free");
}

TEST_CASE("central directions and the cylinder dimension") {
  const KuranishiProblem P(parse_salamon("(0,0,0,12,13)"));
  const auto d = P.parallelisable_directions();
  CHECK(d.cylinder_dim == 9);  // h^{0,1} = 3, dim g/z = 3
  CHECK(d.subspace.dim() == 3 * 2);
}

TEST_CASE("general structure") {
  const ComplexStructureAlgebra H = parse_complex_structure(kH7);
  const KuranishiProblem P(H);
  CHECK_FALSE(P.parallelisable());
  CHECK_THROWS_AS(P.phi_recursion(), MissingDegreeCap);
  const unsigned n = 7;
  PolyVector phi1(P.theta().dim(1));
  phi1[2 * n + 0] = 1;  // cw3 (x) X1
  phi1[3 * n + 1] = 1;  // cw4 (x) X2
  const PhiSeries s = P.phi_recursion(3, phi1);
  CHECK(is_zero(s.harmonic[2]));
  CHECK(P.theta().vector_form(s.phi[2], 1).to_string() == "2*(cw7)*X6");
  const auto o = P.obstruction(s);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < o.labels.size(); ++i)
    if (!o.harmonic_coefficients[i].is_zero()) {
      ++nonzero;
      CHECK(o.labels[i] == "(cw3^cw5)*X6");
    }
  CHECK(nonzero == 1);

  const auto r = analyze(H, 3, "h7");
  CHECK(r.structure == "generic");
  CHECK_FALSE(r.smooth);
  CHECK(r.max_generator_degree >= 3);
}

TEST_CASE("JSON round trip") {
  for (const char* s : {"(0,0,0)", "(0,0,12)", "(0,0,0,12)", "(0,0,12,13)"}) {
    const auto r = analyze(parse_salamon(s), s);
    CHECK(report_from_json(to_json(r)) == r);
  }
  const auto g = analyze(parse_complex_structure(kH7), 3, "h7");
  CHECK(report_from_json(to_json(g)) == g);
  CHECK(report_from_json(to_json(g, -1)) == g);
}
