#include "ncj/catalog.hpp"
#include "ncj/peirce.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ncj;

namespace {
const Field Q = Field::rationals();

Subspace span_of(const SuperAlgebra& a, std::initializer_list<std::size_t> idx) {
  std::vector<Vec> rows;
  for (auto i : idx) rows.push_back(a.basis_vec(i));
  return Subspace::span(rows, a.dim(), a.field());
}
}  // namespace

TEST_CASE("peirce decomposition of D_t(1) w.r.t. e1") {
  SuperAlgebra d = build_dt(Q.of(2), Q.one(), Q.zero(), Q.zero(), Q);
  PeirceDecomposition pd = peirce_decompose(d, d.basis_vec(0));
  CHECK(pd.u(0) == span_of(d, {1}));
  CHECK(pd.u(1) == span_of(d, {2, 3}));
  CHECK(pd.u(2) == span_of(d, {0}));
  // projections: orthogonal idempotents summing to the identity
  Matrix sum = pd.p(0) + pd.p(1) + pd.p(2);
  CHECK(sum == Matrix::identity(4, Q));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Matrix prod = pd.p(i) * pd.p(j);
      if (i == j) CHECK(prod == pd.p(i));
      else CHECK(prod.is_zero());
    }
  CHECK_THROWS_AS(peirce_decompose(d, d.basis_vec(2)), std::invalid_argument);
}

TEST_CASE("peirce decomposition of Q(2) w.r.t. e11") {
  SuperAlgebra q = build_q(2, Q);
  PeirceDecomposition pd = peirce_decompose(q, q.basis_vec(0));
  // U_1 = <e12, e21, bar e12, bar e21>
  CHECK(pd.u(1) == span_of(q, {1, 2, 5, 6}));
  CHECK(pd.u(2) == span_of(q, {0, 4}));
  CHECK(pd.u(0) == span_of(q, {3, 7}));
}

TEST_CASE("peirce w.r.t. the unit puts everything in U_2") {
  SuperAlgebra d = build_dt(Q.of(2), Q.one(), Q.zero(), Q.zero(), Q);
  PeirceDecomposition pd = peirce_decompose(d, *d.unit());
  CHECK(pd.u(2).dim() == 4);
  CHECK(pd.u(0).dim() == 0);
  CHECK(pd.u(1).dim() == 0);
  CHECK(verify_peirce_relations(d, *d.unit()).passed);
}

TEST_CASE("multi-idempotent peirce") {
  // M_3(Q) with the diagonal idempotents: U_ij = <e_ij>, all 1-dim
  SuperAlgebra m3 = build_mmn(3, 0, Q);
  std::vector<Vec> idems = {m3.basis_vec(0), m3.basis_vec(4), m3.basis_vec(8)};
  MultiPeirce mp = peirce_multi(m3, idems);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) CHECK(mp.u(i, j) == span_of(m3, {static_cast<std::size_t>((i - 1) * 3 + (j - 1))}));
      else CHECK(mp.u(i, j).dim() == 2);  // <e_ij, e_ji>
    }
  CHECK(mp.u(0, 0).dim() == 0);
  // Q(2) with e11, e22: each U_ij is 2-dim (matrix unit + bar)
  SuperAlgebra q = build_q(2, Q);
  MultiPeirce mq = peirce_multi(q, {q.basis_vec(0), q.basis_vec(3)});
  CHECK(mq.u(1, 1) == span_of(q, {0, 4}));
  CHECK(mq.u(2, 2) == span_of(q, {3, 7}));
  CHECK(mq.u(1, 2) == span_of(q, {1, 2, 5, 6}));
  CHECK(mq.u(0, 0).dim() == 0);
  // D_t with e1, e2
  SuperAlgebra d = build_dt(Q.of(2), Q.one(), Q.zero(), Q.zero(), Q);
  MultiPeirce md = peirce_multi(d, {d.basis_vec(0), d.basis_vec(1)});
  CHECK(md.u(1, 1) == span_of(d, {0}));
  CHECK(md.u(2, 2) == span_of(d, {1}));
  CHECK(md.u(1, 2) == span_of(d, {2, 3}));
  CHECK(md.u(0, 0).dim() == 0);
  // non-orthogonal idempotents rejected
  CHECK_THROWS_AS(peirce_multi(d, {d.basis_vec(0), *d.unit()}), std::invalid_argument);
}

TEST_CASE("L_e eigenspaces inside U_1") {
  SuperAlgebra d = build_dt(Q.of(2), Q.one(), Q.zero(), Q.zero(), Q);
  Vec e1 = d.basis_vec(0);
  CHECK(eigenspace_u1(d, e1, Q.one()) == span_of(d, {2}));   // <x>
  CHECK(eigenspace_u1(d, e1, Q.zero()) == span_of(d, {3}));  // <y>
  // Jordan case: U_1^{[1/2]} is all of U_1
  SuperAlgebra dj = build_dt(Q.of(2), Q.of(1, 2), Q.zero(), Q.zero(), Q);
  CHECK(eigenspace_u1(dj, e1, Q.of(1, 2)) == span_of(dj, {2, 3}));
  // Dt(1/2,1/2,0): L_{e1} has a Jordan block; only <y> is an eigenvector
  SuperAlgebra dh = build_dt(Q.of(2), Q.of(1, 2), Q.of(1, 2), Q.zero(), Q);
  CHECK(eigenspace_u1(dh, e1, Q.of(1, 2)) == span_of(dh, {3}));
  EigenSplit es = u1_eigen_split(dh, e1);
  CHECK_FALSE(es.complete);  // defective: the split needs a Jordan block, not new eigenvalues
  EigenSplit es2 = u1_eigen_split(d, e1);
  CHECK(es2.complete);
  REQUIRE(es2.spaces.size() == 2);
}

TEST_CASE("s_phi and the field-extension diagnostic") {
  SuperAlgebra d = build_dt(Q.of(2), Q.one(), Q.zero(), Q.zero(), Q);
  Vec e1 = d.basis_vec(0);
  CHECK(s_phi(d, e1, Q.zero()) == span_of(d, {2, 3}));
  CHECK(s_phi(d, e1, Q.of(1, 4)).dim() == 0);  // lambda = 1/2 eigenspace is empty here
  CHECK_THROWS_AS(s_phi(d, e1, Q.one()), FieldExtensionError);
  // over F_7: 1 - 4*phi = -3 = 4 is a square, so phi = 1 works
  Field f7 = Field::prime(7);
  SuperAlgebra d7 = build_dt(f7.of(2), f7.one(), f7.zero(), f7.zero(), f7);
  CHECK_NOTHROW(s_phi(d7, d7.basis_vec(0), f7.one()));
}

TEST_CASE("verify_peirce_relations across the catalog") {
  auto check = [](const SuperAlgebra& a, const Vec& e) {
    CheckReport r = verify_peirce_relations(a, e);
    INFO(a.name() << ": " << r.summary());
    CHECK(r.passed);
  };
  SuperAlgebra d = build_dt(Q.of(2), Q.of(1, 3), Q.of(1, 5), Q.of(1, 7), Q);
  check(d, d.basis_vec(0));
  check(d, d.basis_vec(1));
  SuperAlgebra k3 = build_k3(Q.of(1, 3), Q.of(2), Q.of(-1), Q);
  check(k3, k3.basis_vec(0));
  SuperAlgebra q2 = build_q(2, Q);
  check(q2, q2.basis_vec(0));
  SuperAlgebra p2 = build_p2(Q);
  check(p2, p2.basis_vec(0));
  SuperAlgebra k10 = build_k10(Q);
  check(k10, k10.basis_vec(0));
  SuperAlgebra jv = build_jvf(1, 1, Q);
  // e = (1 + v)/2 with f(v,v) = 1... need f(v,v) = 1/4 scaled: e = 1/2 + v/2
  Vec e = vec_add(vec_scale(jv.basis_vec(0), Q.of(1, 2)), vec_scale(jv.basis_vec(1), Q.of(1, 2)));
  REQUIRE(jv.is_idempotent(e));
  check(jv, e);
  SuperAlgebra m11 = build_mmn(1, 1, Q);
  check(m11, m11.basis_vec(0));
  Field f3 = Field::prime(3);
  SuperAlgebra k9 = build_k9(f3);
  check(k9, k9.basis_vec(0));
}

TEST_CASE("P(2): J_1(e1) o J_1(e1) = J_0(e1) + J_2(e1)") {
  SuperAlgebra p = build_p2(Q);
  PeirceDecomposition pd = peirce_decompose(p, p.basis_vec(0));
  const Subspace& u1 = pd.u(1);
  Subspace prod = Subspace::zero(p.dim(), Q);
  for (std::size_t r = 0; r < u1.dim(); ++r)
    for (std::size_t s = 0; s < u1.dim(); ++s)
      prod = prod.sum(Subspace::span({p.circle(u1.basis_row(r), u1.basis_row(s))}, p.dim(), Q));
  CHECK(prod == pd.u(0).sum(pd.u(2)));
}

TEST_CASE("K-set lemma instances") {
  SuperAlgebra d = build_dt(Q.of(2), Q.one(), Q.zero(), Q.zero(), Q);
  CHECK(lemma_k_set(d, d.basis_vec(0), {d.basis_vec(2), d.basis_vec(3)}).passed);
  SuperAlgebra k = build_k10(Q);
  // K = {u, z} inside U_1(e1) = M
  CHECK(lemma_k_set(k, k.basis_vec(0), {k.basis_vec(6), k.basis_vec(9)}).passed);
}

TEST_CASE("eigenspace product lemmas on D_t(1)") {
  SuperAlgebra d = build_dt(Q.of(2), Q.one(), Q.zero(), Q.zero(), Q);
  Vec e1 = d.basis_vec(0);
  PeirceDecomposition pd = peirce_decompose(d, e1);
  Subspace u1_0 = eigenspace_u1(d, e1, Q.zero());  // <y>
  Subspace u1_1 = eigenspace_u1(d, e1, Q.one());   // <x>
  // U_1^{[0]} U_0 = 0 and U_0 U_1^{[1]} = 0
  for (std::size_t r = 0; r < u1_0.dim(); ++r)
    for (std::size_t s = 0; s < pd.u(0).dim(); ++s)
      CHECK(is_zero_vec(d.multiply(u1_0.basis_row(r), pd.u(0).basis_row(s))));
  for (std::size_t r = 0; r < u1_1.dim(); ++r)
    for (std::size_t s = 0; s < pd.u(0).dim(); ++s)
      CHECK(is_zero_vec(d.multiply(pd.u(0).basis_row(s), u1_1.basis_row(r))));
  // (U_1^{[0]})^2 and (U_1^{[1]})^2 inside U_1
  for (const Subspace* s : {&u1_0, &u1_1})
    for (std::size_t r = 0; r < s->dim(); ++r)
      for (std::size_t q = 0; q < s->dim(); ++q)
        CHECK(pd.u(1).contains(d.multiply(s->basis_row(r), s->basis_row(q))));
}

TEST_CASE("connection witnesses") {
  // M_2(Q): e11, e22 evenly connected by u = v = e12 + e21, phi = 0
  SuperAlgebra m2 = build_mmn(2, 0, Q);
  Vec e11 = m2.basis_vec(0), e22 = m2.basis_vec(3);
  Vec uv = vec_add(m2.basis_vec(1), m2.basis_vec(2));
  ConnectionWitness w{0, 1, uv, uv, Q.zero(), false};
  CHECK(verify_connection(m2, {e11, e22}, w).passed);
  CHECK(indicator_of(m2, {e11, e22}, w) == Q.zero());
  // the same witness embedded in the even part of Q(2)
  SuperAlgebra q2 = build_q(2, Q);
  ConnectionWitness wq{0, 1, vec_add(q2.basis_vec(1), q2.basis_vec(2)), vec_add(q2.basis_vec(1), q2.basis_vec(2)),
                       Q.zero(), false};
  CHECK(verify_connection(q2, {q2.basis_vec(0), q2.basis_vec(3)}, wq).passed);
  // wrong witness: u = v = e12 fails (e12^2 = 0)
  ConnectionWitness bad{0, 1, m2.basis_vec(1), m2.basis_vec(1), Q.zero(), false};
  CHECK_FALSE(verify_connection(m2, {e11, e22}, bad).passed);
  CHECK_THROWS_AS(indicator_of(m2, {e11, e22}, bad), std::invalid_argument);
  // odd connection in M_{1,1}: u = e12 + e21, v = e12 - e21
  SuperAlgebra m11 = build_mmn(1, 1, Q);
  ConnectionWitness wo{0, 1, vec_add(m11.basis_vec(1), m11.basis_vec(2)),
                       vec_sub(m11.basis_vec(1), m11.basis_vec(2)), Q.zero(), true};
  CHECK(verify_connection(m11, {m11.basis_vec(0), m11.basis_vec(3)}, wo).passed);
}

TEST_CASE("indicator of mutated matrix algebras") {
  SuperAlgebra m3 = build_mmn(3, 0, Q);
  std::vector<Vec> idems = {m3.basis_vec(0), m3.basis_vec(4), m3.basis_vec(8)};
  for (long long lam : {0, 1, 2, 3}) {
    SuperAlgebra mut = mutate(m3, lam);
    Scalar phi = common_indicator(mut, idems);
    Scalar expect = Q.of(lam) * (Q.one() - Q.of(lam));
    CHECK(phi == expect);
  }
  // phi = 0: associative; phi = 1/4 (symmetrized): supercommutative
  CHECK(common_indicator(m3, idems) == Q.zero());
  CHECK(is_associative(m3));
  SuperAlgebra sym = symmetrize(m3);
  CHECK(common_indicator(sym, idems) == Q.of(1, 4));
  CHECK(is_supercommutative(sym));
}
