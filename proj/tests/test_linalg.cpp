#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilkur/linalg.hpp"

#include <random>

using namespace nilkur;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int zero_bias = 0) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), z(0, 9);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (z(rng) >= zero_bias) m(i, j) = Rational(num(rng), den(rng));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j).canonicalize();
  return m;
}

// rank by fraction-free Gaussian elimination, written independently of rref()
std::size_t rank_oracle(Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Rational a = m(r, c), b = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = a * m(i, j) - b * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("+1/2") == Rational(1, 2));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1 /2"), std::invalid_argument);
}

TEST_CASE("rref of a hand-reduced matrix") {
  const Matrix m = Matrix::from_rows({{2, 4, 6}, {1, 2, 4}, {0, 0, 1}}, 3);
  const RowEchelon e = rref(m);
  CHECK(e.reduced == Matrix::from_rows({{1, 2, 0}, {0, 0, 1}}, 3));
  CHECK(e.pivots == std::vector<std::size_t>{0, 2});
  CHECK(rank(m) == 2);
  const Matrix k = nullspace(m);
  REQUIRE(k.rows() == 1);
  CHECK(k.row_vector(0) == Vector{1, Rational(-1, 2), 0});
}

TEST_CASE("random matrices: rank, kernel, inverse, pseudo-inverse") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const Matrix m = random_matrix(rng, r, c, trial % 4 * 2);
    const std::size_t rk = rank(m);
    CHECK(rk == rank_oracle(m));

    const Matrix k = nullspace(m);
    CHECK(k.rows() == c - rk);
    CHECK((m * k.transpose()).is_zero());

    const Matrix p = pseudo_inverse(m);
    CHECK(m * p * m == m);
    CHECK(p * m * p == p);
    CHECK((m * p).transpose() == m * p);
    CHECK((p * m).transpose() == p * m);

    if (r == c && rk == r) {
      CHECK(m * inverse(m) == Matrix::identity(r));
    } else if (r == c) {
      CHECK_THROWS_AS(inverse(m), std::domain_error);
    }
  }
}

TEST_CASE("subspaces") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const Matrix gens = random_matrix(rng, 1 + rng() % 3, n, 3);
    const Subspace S = Subspace::from_rows(gens);
    CHECK(S.dim() == rank(gens));
    for (std::size_t i = 0; i < gens.rows(); ++i) CHECK(S.contains(gens.row(i)));

    const Matrix P = S.projector();
    CHECK(P * P == P);
    CHECK(P.transpose() == P);
    CHECK(rank(P) == S.dim());

    const Subspace A = S.annihilator();
    CHECK(A.dim() + S.dim() == n);
    CHECK((S.basis() * A.basis().transpose()).is_zero());
    CHECK(S.sum(A) == Subspace::whole(n));

    // coordinates reproduce the vector
    for (std::size_t i = 0; i < gens.rows(); ++i) {
      const Vector v = gens.row_vector(i);
      const Vector x = S.coordinates(v);
      Vector back(n);
      for (std::size_t b = 0; b < x.size(); ++b)
        for (std::size_t j = 0; j < n; ++j) back[j] += x[b] * S.basis()(b, j);
      CHECK(back == v);
    }
  }
}

TEST_CASE("subspace equality is canonical") {
  const Subspace a(3, {{1, 1, 0}, {0, 1, 1}});
  const Subspace b(3, {{1, 2, 1}, {2, 1, -1}});
  CHECK(a == b);
  CHECK(a.contains(Subspace(3, {{1, 0, -1}})));
  CHECK_FALSE(a.contains(Subspace(3, {{1, 0, 0}})));
}
