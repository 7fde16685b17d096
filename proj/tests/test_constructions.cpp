#include "ncj/catalog.hpp"
#include "ncj/constructions.hpp"
#include "ncj/identities.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ncj;

namespace {
const Field Q = Field::rationals();

// multiplicative even bijection check, rows of T = images of basis vectors
bool algebra_iso(const SuperAlgebra& a, const SuperAlgebra& b, const Matrix& t) {
  if (a.dim() != b.dim()) return false;
  if (!inverse(t)) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec lhs = b.multiply(t.row(i), t.row(j));
      Vec rhs = a.multiply(a.basis_vec(i), a.basis_vec(j)) * t;
      if (lhs != rhs) return false;
    }
  return true;
}
}  // namespace

TEST_CASE("mutation composition law") {
  Scalar l = Q.of(3), m = Q.of(-2);
  CHECK(mutation_compose(l, Q.one()) == l);
  CHECK(mutation_compose(Q.one(), m) == m);
  CHECK(mutation_compose(l, m) == Q.of(-12));  // 2*3*(-2) - 3 + 2 + 1
  CHECK(inverse_mutation(Q.one()) == Q.one());
  CHECK(mutation_compose(l, inverse_mutation(l)) == Q.one());
  CHECK_THROWS_AS(inverse_mutation(Q.of(1, 2)), std::domain_error);
}

TEST_CASE("mutation on structure constants") {
  SuperAlgebra q2 = build_q(2, Q);
  CHECK(structure_equal(mutate(q2, 1), q2));
  CHECK(structure_equal(mutate(q2, Q.of(1, 2)), symmetrize(q2)));
  // double mutation on fixed rational pairs
  std::vector<std::pair<Scalar, Scalar>> pairs = {
      {Q.of(0), Q.of(0)},  {Q.of(2), Q.of(3)},   {Q.of(-1), Q.of(5, 2)}, {Q.of(1, 3), Q.of(7)},
      {Q.of(4), Q.of(-3)}, {Q.of(5, 7), Q.of(2)}, {Q.of(-2, 3), Q.of(9, 4)},
  };
  for (const auto& [l, m] : pairs)
    CHECK(structure_equal(mutate(mutate(q2, l), m), mutate(q2, mutation_compose(l, m))));
}

TEST_CASE("mutating Dt(1) yields Dt(lambda)") {
  SuperAlgebra d1 = build_dt(Q.of(2), Q.one(), Q.zero(), Q.zero(), Q);
  CHECK(structure_equal(mutate(d1, 3), build_dt(Q.of(2), Q.of(3), Q.zero(), Q.zero(), Q)));
  CHECK(structure_equal(mutate(d1, 0), build_dt(Q.of(2), Q.zero(), Q.zero(), Q.zero(), Q)));
}

TEST_CASE("noncommutative-jordan closure under mutation") {
  for (SuperAlgebra a : {build_q(2, Q), build_dt(Q.of(2), Q.of(1, 3), Q.of(1, 5), Q.of(1, 7), Q),
                         build_k3(Q.of(2), Q.of(1), Q.of(-1), Q)}) {
    REQUIRE(check_noncommutative_jordan(a).passed);
    for (long long l : {0, 2, 3, -5})
      CHECK(check_noncommutative_jordan(mutate(a, l)).passed);
  }
}

TEST_CASE("symmetrize instances") {
  // sym(Dt(t,a,b,g)) has the Jordan D_t table for all parameters
  SuperAlgebra s = symmetrize(build_dt(Q.of(2), Q.of(1, 3), Q.of(1, 5), Q.of(1, 7), Q));
  CHECK(structure_equal(s, build_dt(Q.of(2), Q.of(1, 2), Q.zero(), Q.zero(), Q)));
  // a Jordan algebra is its own symmetrization
  SuperAlgebra dj = build_dt(Q.of(3), Q.of(1, 2), Q.zero(), Q.zero(), Q);
  CHECK(structure_equal(symmetrize(dj), dj));
  // sym(Q(2)): bar a o bar b = [a,b]/2 on the odd part
  SuperAlgebra q2 = build_q(2, Q);
  SuperAlgebra sq = symmetrize(q2);
  std::size_t e12b = 4 + 1, e21b = 4 + 2;  // bar e12, bar e21
  Vec prod = sq.multiply(sq.basis_vec(e12b), sq.basis_vec(e21b));
  // [e12,e21]/2 = (e11 - e22)/2
  Vec expect = zero_vec(8, Q);
  expect[0] = Q.of(1, 2);
  expect[3] = Q.of(-1, 2);
  CHECK(prod == expect);
}

TEST_CASE("opposite algebra") {
  SuperAlgebra dj = build_dt(Q.of(3), Q.of(1, 2), Q.zero(), Q.zero(), Q);
  CHECK(structure_equal(opposite_algebra(dj), dj));  // commutative part
  SuperAlgebra d1 = build_dt(Q.of(2), Q.one(), Q.zero(), Q.zero(), Q);
  CHECK(structure_equal(opposite_algebra(opposite_algebra(d1)), d1));
  CHECK(structure_equal(opposite_algebra(d1), build_dt(Q.of(2), Q.zero(), Q.zero(), Q.zero(), Q)));
}

TEST_CASE("graded tensor product") {
  SuperAlgebra f = build_field_algebra(Q);
  SuperAlgebra d = build_dt(Q.of(2), Q.one(), Q.zero(), Q.zero(), Q);
  SuperAlgebra fd = graded_tensor(f, d);
  CHECK(structure_equal(fd, d));  // F (x) A has A's table under i -> (0,i)
  // sign: (1 (x) b)(a (x) 1) = -(a (x) b) for odd a, b in Q(1) (x) Q(1)
  SuperAlgebra q1 = build_q(1, Q);
  SuperAlgebra t = graded_tensor(q1, q1);
  // indices: (i,j) -> 2i+j with q1 basis (1, bar1)
  Vec lhs = t.multiply(t.basis_vec(0 * 2 + 1), t.basis_vec(1 * 2 + 0));  // (1 (x) bar1)(bar1 (x) 1)
  Vec expect = vec_scale(t.basis_vec(1 * 2 + 1), -Q.one());
  CHECK(lhs == expect);
  // dim and reassociation of structure constants
  SuperAlgebra a = build_q(1, Q), b = build_dt(Q.of(2), Q.one(), Q.zero(), Q.zero(), Q), c = build_k3(Q.of(1, 2), Q.zero(), Q.zero(), Q);
  SuperAlgebra left = graded_tensor(graded_tensor(a, b), c);
  SuperAlgebra right = graded_tensor(a, graded_tensor(b, c));
  REQUIRE(left.dim() == right.dim());
  // (i (x) j) (x) k and i (x) (j (x) k) have identical flat indices row-major
  CHECK(structure_equal(left, right));
  CHECK_THROWS_AS(graded_tensor(a, build_q(1, Field::prime(3))), std::invalid_argument);
}

TEST_CASE("unital hull") {
  // hull of the 1-dim zero algebra: 2-dim with unit
  SuperAlgebra z("z", Q, {0});
  SuperAlgebra hz = unital_hull(z);
  CHECK(hz.dim() == 2);
  CHECK(*hz.unit() == hz.basis_vec(0));
  // hull(K3(a,b,g)) ~ D0(a,b,g) via e1 = e, e2 = 1 - e, x = z, y = w
  Scalar al = Q.of(1, 3), be = Q.of(2, 5), ga = Q.of(-3);
  SuperAlgebra h = unital_hull(build_k3(al, be, ga, Q));
  SuperAlgebra d0 = build_dt(Q.zero(), al, be, ga, Q);
  Matrix t(4, 4, Q);  // rows: images of D0 basis (e1,e2,x,y) in hull coords (1,e,z,w)
  t.at(0, 1) = Q.one();                     // e1 -> e
  t.at(1, 0) = Q.one(); t.at(1, 1) = -Q.one();  // e2 -> 1 - e
  t.at(2, 2) = Q.one();                     // x -> z
  t.at(3, 3) = Q.one();                     // y -> w
  CHECK(algebra_iso(d0, h, t));
  // hull of K3(1/2,0,0) symmetrizes to the Jordan D_0
  SuperAlgebra h2 = unital_hull(build_k3(Q.of(1, 2), Q.zero(), Q.zero(), Q));
  CHECK(algebra_iso(build_dt(Q.zero(), Q.of(1, 2), Q.zero(), Q.zero(), Q), symmetrize(h2), t));
}

TEST_CASE("split null extension") {
  SuperAlgebra d = build_dt(Q.of(2), Q.one(), Q.zero(), Q.zero(), Q);
  SuperBimodule reg = regular(d);
  SuperAlgebra e = split_null_extension(d, reg);
  // the A-block reproduces A exactly
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j)
      for (std::size_t k = 0; k < d.dim(); ++k) CHECK(e.c(i, j, k) == d.c(i, j, k));
  // M*M = 0
  for (std::size_t i = d.dim(); i < e.dim(); ++i)
    for (std::size_t j = d.dim(); j < e.dim(); ++j)
      CHECK(is_zero_vec(e.multiply(e.basis_vec(i), e.basis_vec(j))));
  // E is noncommutative Jordan
  CHECK(check_noncommutative_jordan(e).passed);
  // zero module: E ~ A + zero ideal
  SuperBimodule zm = zero_module(d, {0, 1});
  SuperAlgebra ez = split_null_extension(d, zm);
  CHECK(ez.dim() == 6);
  CHECK(check_noncommutative_jordan(ez).passed);
  // SNE(A, Reg(A)) = (F[s]/s^2) (x) A under the identity map
  SuperAlgebra t = graded_tensor(build_dual_numbers(Q), d);
  CHECK(structure_equal(e, t));
}
