#include "ncj/matrix.hpp"
#include "ncj/scalar.hpp"
#include "ncj/subspace.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ncj;

TEST_CASE("rational scalars stay reduced and exact") {
  Field q = Field::rationals();
  Scalar a = q.of(1, 2), b = q.of(1, 3);
  CHECK((a + b).str() == "5/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a - a).is_zero());
  CHECK((a / b).str() == "3/2");
  Scalar big = q.of(1);
  for (int i = 0; i < 64; ++i) big *= q.of(3);  // 3^64 does not fit 64 bits
  CHECK(big.str() == "3433683820292512484657849089281");
  CHECK((big / big).is_one());
  CHECK(q.parse_scalar("-7/4").str() == "-7/4");
  CHECK(q.parse_scalar("12").str() == "12");
  CHECK_THROWS_AS(q.parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(q.parse_scalar("x"), std::invalid_argument);
  CHECK_THROWS_AS(a / q.zero(), std::domain_error);
}

TEST_CASE("prime fields: residues in range, p=2 rejected, inverses") {
  CHECK_THROWS_AS(Field::prime(2), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
  Field f7 = Field::prime(7);
  Scalar x = f7.of(10);
  CHECK(x.str() == "3");
  CHECK((f7.of(1, 2)).str() == "4");  // 1/2 = 4 mod 7
  CHECK((f7.of(3) * f7.of(5)).str() == "1");
  CHECK((f7.of(-1)).str() == "6");
  CHECK((f7.of(3) / f7.of(5)).str() == "2");  // 3 * 5^{-1} = 3*3 = 2
  CHECK_THROWS_AS(f7.of(1) + Field::rationals().of(1), std::invalid_argument);
  CHECK_THROWS_AS(f7.of(1) + Field::prime(5).of(1), std::invalid_argument);
  CHECK(Field::parse("p3") == Field::prime(3));
  CHECK(Field::parse("q").is_rational());
}

TEST_CASE("square roots only when they exist") {
  Field q = Field::rationals();
  CHECK(q.sqrt(q.of(9, 4))->str() == "3/2");
  CHECK_FALSE(q.sqrt(q.of(2)).has_value());
  CHECK_FALSE(q.sqrt(q.of(-1)).has_value());
  Field f7 = Field::prime(7);
  CHECK(f7.sqrt(f7.of(2)).has_value());  // 3^2 = 2 mod 7
  CHECK_FALSE(f7.sqrt(f7.of(3)).has_value());
}

TEST_CASE("nullspace oracle cases") {
  Field q = Field::rationals();
  // identity 3x3 -> zero space
  CHECK(nullspace(Matrix::identity(3, q)).dim() == 0);
  // zero 2x2 -> full space
  CHECK(nullspace(Matrix(2, 2, q)).dim() == 2);
  // [[1,1],[1,1]] -> span{(1,-1)}
  Matrix m(2, 2, q);
  m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = q.one();
  Subspace ker = nullspace(m);
  REQUIRE(ker.dim() == 1);
  CHECK(ker.basis_row(0) == Vec{q.one(), -q.one()});
}

TEST_CASE("rank-nullity on pseudorandom rational matrices") {
  Field q = Field::rationals();
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix m(r, c, q);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = q.of(d(rng), 1 + rng() % 3);
    CHECK(nullspace(m).dim() + rank(m) == r);
  }
}

TEST_CASE("solve_left oracle cases") {
  Field q = Field::rationals();
  Matrix id = Matrix::identity(3, q);
  Vec b = {q.of(2), q.of(-1), q.of(5, 7)};
  CHECK(*solve_left(id, b) == b);

  Matrix m(2, 2, q);
  m.at(0, 0) = q.one();
  CHECK_FALSE(solve_left(m, Vec{q.zero(), q.one()}).has_value());

  Matrix d(2, 2, q);
  d.at(0, 0) = q.of(2);
  d.at(1, 1) = q.of(3);
  Vec x = *solve_left(d, Vec{q.one(), q.one()});
  CHECK(x == Vec{q.of(1, 2), q.of(1, 3)});
  CHECK_THROWS_AS(solve_left(d, Vec{q.one()}), std::invalid_argument);
}

TEST_CASE("subspace lattice semantics") {
  Field q = Field::rationals();
  Subspace e1 = Subspace::span({Vec{q.one(), q.zero(), q.zero()}}, 3, q);
  Subspace e2 = Subspace::span({Vec{q.zero(), q.one(), q.zero()}}, 3, q);
  CHECK(e1 == e1);
  Subspace s = e1.sum(e2);
  CHECK(s.dim() == 2);
  CHECK(e1.intersect(e2).dim() == 0);
  CHECK(s.dim() == e1.dim() + e2.dim() - e1.intersect(e2).dim());

  // span{(1,1)} n span{(1,-1)} = 0 in Q^2
  Subspace a = Subspace::span({Vec{q.one(), q.one()}}, 2, q);
  Subspace b = Subspace::span({Vec{q.one(), -q.one()}}, 2, q);
  CHECK(a.intersect(b).dim() == 0);
  CHECK(a.sum(b).dim() == 2);
  CHECK(a.contains(Vec{q.of(3), q.of(3)}));
  CHECK_FALSE(a.contains(Vec{q.of(3), q.of(2)}));

  Subspace quot = s.quotient_basis(e1);
  CHECK(quot.dim() == 1);
  CHECK_THROWS_AS(e1.quotient_basis(s), std::invalid_argument);
  CHECK_THROWS_AS(a.sum(e1), std::invalid_argument);
}

TEST_CASE("echelonize is idempotent") {
  Field q = Field::rationals();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec> rows;
    std::size_t n = 4;
    for (int i = 0; i < 3; ++i) {
      Vec v(n, q.zero());
      for (auto& x : v) x = q.of(d(rng));
      rows.push_back(v);
    }
    Subspace s = Subspace::span(rows, n, q);
    std::vector<Vec> again;
    for (std::size_t i = 0; i < s.dim(); ++i) again.push_back(s.basis_row(i));
    Subspace s2 = Subspace::span(again, n, q);
    CHECK(s == s2);
  }
}

TEST_CASE("graded subspaces have homogeneous echelon rows") {
  Field q = Field::rationals();
  std::vector<std::uint8_t> par = {0, 0, 1};
  Subspace g = Subspace::span({Vec{q.one(), q.one(), q.zero()}, Vec{q.zero(), q.zero(), q.of(2)}}, 3, q);
  CHECK(g.grade(par));
  CHECK(g.parities() == std::vector<std::uint8_t>{0, 1});
  Subspace mixed = Subspace::span({Vec{q.one(), q.zero(), q.one()}}, 3, q);
  CHECK_FALSE(mixed.grade(par));
}

TEST_CASE("char_poly of a companion-ish matrix") {
  Field q = Field::rationals();
  Matrix m(2, 2, q);
  m.at(0, 0) = q.of(1, 2);
  m.at(0, 1) = q.one();
  m.at(1, 1) = q.of(1, 2);
  auto c = char_poly(m);  // (x - 1/2)^2 = x^2 - x + 1/4
  REQUIRE(c.size() == 3);
  CHECK(c[2] == q.one());
  CHECK(c[1] == -q.one());
  CHECK(c[0] == q.of(1, 4));
  Matrix f3m(3, 3, Field::prime(3));
  CHECK_THROWS_AS(char_poly(f3m), std::domain_error);
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((*inv * m) == Matrix::identity(2, q));
}
