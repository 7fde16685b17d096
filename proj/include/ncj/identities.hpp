#pragma once

#include "ncj/constructions.hpp"
#include "ncj/fast_ops.hpp"
#include "ncj/superalgebra.hpp"

namespace ncj {

namespace detail {

/// Graded operator bracket [P,Q] = PQ - (-1)^{p(P)p(Q)} QP.
inline Matrix op_bracket(const Matrix& p, int pp, const Matrix& q, int pq) {
  Matrix pq_ = p * q;
  Matrix qp_ = q * p;
  return (pp & pq & 1) ? pq_ + qp_ : pq_ - qp_;
}

inline Vec flex_residual(const SuperAlgebra& a, std::size_t i, std::size_t j) {
  Matrix ra = a.right_op(a.basis_vec(i)), la = a.left_op(a.basis_vec(i));
  Matrix rb = a.right_op(a.basis_vec(j)), lb = a.left_op(a.basis_vec(j));
  int pi = a.parity()[i], pj = a.parity()[j];
  return (op_bracket(ra, pi, lb, pj) - op_bracket(la, pi, rb, pj)).flatten();
}

inline Vec jordan_residual(const SuperAlgebra& alg, std::size_t a, std::size_t b, std::size_t c) {
  const Field& f = alg.field();
  int pa = alg.parity()[a], pb = alg.parity()[b], pc = alg.parity()[c];
  Scalar sabc = (((pa & pb) ^ (pa & pc) ^ (pb & pc)) & 1) ? -f.one() : f.one();
  Scalar sbc = (pb & pc & 1) ? -f.one() : f.one();
  Scalar sab = (pa & pb & 1) ? -f.one() : f.one();
  Vec ea = alg.basis_vec(a), eb = alg.basis_vec(b), ec = alg.basis_vec(c);
  Matrix ra = alg.right_op(ea), rb = alg.right_op(eb), rc = alg.right_op(ec);
  Matrix lhs = ra * rb * rc + sabc * (rc * rb * ra) + sbc * alg.right_op(alg.multiply(alg.multiply(ea, ec), eb));
  Matrix rhs = ra * alg.right_op(alg.multiply(eb, ec)) + sabc * (rc * alg.right_op(alg.multiply(eb, ea))) +
               sab * (rb * alg.right_op(alg.multiply(ea, ec)));
  return (lhs - rhs).flatten();
}

inline Vec ncj_residual(const SuperAlgebra& alg, std::size_t a, std::size_t b, std::size_t c) {
  int pa = alg.parity()[a], pb = alg.parity()[b], pc = alg.parity()[c];
  auto term = [&](std::size_t i, std::size_t j, std::size_t k) {
    Matrix r = alg.right_op(alg.circle(alg.basis_vec(i), alg.basis_vec(j)));
    return op_bracket(r, (alg.parity()[i] ^ alg.parity()[j]) & 1, alg.left_op(alg.basis_vec(k)), alg.parity()[k]);
  };
  const Field& f = alg.field();
  Scalar s2 = (pa & (pb ^ pc) & 1) ? -f.one() : f.one();
  Scalar s3 = (pc & (pa ^ pb) & 1) ? -f.one() : f.one();
  return (term(a, b, c) + s2 * term(b, c, a) + s3 * term(c, a, b)).flatten();
}

inline Vec poisson_residual(const SuperAlgebra& j, const SuperAlgebra& br, std::size_t a, std::size_t b,
                            std::size_t c) {
  Vec ea = j.basis_vec(a), eb = j.basis_vec(b), ec = j.basis_vec(c);
  Vec lhs = br.multiply(j.multiply(ea, eb), ec);
  Scalar s = (j.parity()[b] & j.parity()[c] & 1) ? -j.field().one() : j.field().one();
  Vec rhs = vec_add(vec_scale(j.multiply(br.multiply(ea, ec), eb), s), j.multiply(ea, br.multiply(eb, ec)));
  return vec_sub(lhs, rhs);
}

}  // namespace detail

/// Flexibility, operator form [R_a,L_b] = [L_a,R_b] on homogeneous pairs.
inline CheckReport check_flexible(const SuperAlgebra& a) {
  std::optional<std::array<std::size_t, 2>> bad;
  if (auto ictx = detail::make_int_ctx(a)) bad = detail::flex_scan(*ictx);
  else bad = detail::flex_scan(detail::make_scalar_ctx(a));
  if (!bad) return CheckReport::pass("flexible");
  return CheckReport::fail("flexible", {(*bad)[0], (*bad)[1]}, detail::flex_residual(a, (*bad)[0], (*bad)[1]),
                           "[R_a,L_b] != [L_a,R_b]");
}

/// Reformulation (flex_1): (-1)^{ab} L_{ab} - L_b L_a = R_{ba} - R_b R_a.
inline CheckReport check_flexible_alt1(const SuperAlgebra& alg) {
  for (std::size_t a = 0; a < alg.dim(); ++a)
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      Vec ea = alg.basis_vec(a), eb = alg.basis_vec(b);
      const Field& f = alg.field();
      Scalar s = (alg.parity()[a] & alg.parity()[b] & 1) ? -f.one() : f.one();
      Matrix lhs = s * alg.left_op(alg.multiply(ea, eb)) - alg.left_op(eb) * alg.left_op(ea);
      Matrix rhs = alg.right_op(alg.multiply(eb, ea)) - alg.right_op(eb) * alg.right_op(ea);
      if (lhs != rhs) return CheckReport::fail("flexible(flex_1)", {a, b}, (lhs - rhs).flatten());
    }
  return CheckReport::pass("flexible(flex_1)");
}

/// Element form: (x,y,z) + (-1)^{xy+xz+yz}(z,y,x) = 0.
inline CheckReport check_flexible_elementwise(const SuperAlgebra& alg) {
  for (std::size_t x = 0; x < alg.dim(); ++x)
    for (std::size_t y = 0; y < alg.dim(); ++y)
      for (std::size_t z = 0; z < alg.dim(); ++z) {
        int px = alg.parity()[x], py = alg.parity()[y], pz = alg.parity()[z];
        Scalar s = (((px & py) ^ (px & pz) ^ (py & pz)) & 1) ? -alg.field().one() : alg.field().one();
        Vec l = alg.associator(alg.basis_vec(x), alg.basis_vec(y), alg.basis_vec(z));
        Vec r = alg.associator(alg.basis_vec(z), alg.basis_vec(y), alg.basis_vec(x));
        Vec res = vec_add(l, vec_scale(r, s));
        if (!is_zero_vec(res)) return CheckReport::fail("flexible(flex_2)", {x, y, z}, res);
      }
  return CheckReport::pass("flexible(flex_2)");
}

/// Jordan: supercommutativity plus the degree-4 operator identity, both on
/// homogeneous basis tuples (complete by multilinearity).
inline CheckReport check_jordan(const SuperAlgebra& a) {
  auto ictx = detail::make_int_ctx(a);
  if (ictx) {
    if (auto bad = detail::supercomm_scan(*ictx))
      return CheckReport::fail("jordan", {(*bad)[0], (*bad)[1]},
                               a.bracket(a.basis_vec((*bad)[0]), a.basis_vec((*bad)[1])), "not supercommutative");
    if (auto bad = detail::jordan_scan(*ictx))
      return CheckReport::fail("jordan", {(*bad)[0], (*bad)[1], (*bad)[2]},
                               detail::jordan_residual(a, (*bad)[0], (*bad)[1], (*bad)[2]),
                               "operator identity fails");
    return CheckReport::pass("jordan");
  }
  auto sctx = detail::make_scalar_ctx(a);
  if (auto bad = detail::supercomm_scan(sctx))
    return CheckReport::fail("jordan", {(*bad)[0], (*bad)[1]},
                             a.bracket(a.basis_vec((*bad)[0]), a.basis_vec((*bad)[1])), "not supercommutative");
  if (auto bad = detail::jordan_scan(sctx))
    return CheckReport::fail("jordan", {(*bad)[0], (*bad)[1], (*bad)[2]},
                             detail::jordan_residual(a, (*bad)[0], (*bad)[1], (*bad)[2]), "operator identity fails");
  return CheckReport::pass("jordan");
}

/// Noncommutative Jordan, checked by both routes:
///   route 1: the two operator identities (noncomm_jord_identity) + (flex);
///   route 2: flexible and Jordan symmetrization.
/// A route disagreement means a sign-convention bug and throws.
inline CheckReport check_noncommutative_jordan(const SuperAlgebra& a) {
  CheckReport r1 = CheckReport::pass("noncommutative-jordan");
  CheckReport flex = check_flexible(a);
  if (!flex.passed) {
    r1 = CheckReport::fail("noncommutative-jordan", flex.witness->indices, flex.witness->residual,
                           "flexibility fails");
  } else {
    std::optional<std::array<std::size_t, 3>> bad;
    if (auto ictx = detail::make_int_ctx(a)) bad = detail::ncj_scan(*ictx);
    else bad = detail::ncj_scan(detail::make_scalar_ctx(a));
    if (bad)
      r1 = CheckReport::fail("noncommutative-jordan", {(*bad)[0], (*bad)[1], (*bad)[2]},
                             detail::ncj_residual(a, (*bad)[0], (*bad)[1], (*bad)[2]),
                             "jordan-type operator identity fails");
  }
  bool route2 = flex.passed && check_jordan(symmetrize(a)).passed;
  if (r1.passed != route2)
    throw std::logic_error("check_noncommutative_jordan: the two verification routes disagree on " + a.name());
  return r1;
}

/// Generic Poisson bracket rule for a bracket tensor over an algebra
/// (typically a Jordan one). A non-superanticommutative or ungraded bracket
/// is reported as a failure, witness included.
inline CheckReport check_generic_poisson(const SuperAlgebra& j, const SuperAlgebra& br) {
  if (j.dim() != br.dim() || j.parity() != br.parity() || j.field() != br.field())
    throw std::invalid_argument("check_generic_poisson: bracket shape mismatch");
  if (auto v = br.grading_violation())
    return CheckReport::fail("generic-poisson", {(*v)[0], (*v)[1], (*v)[2]}, Vec{}, "bracket not graded");
  for (std::size_t i = 0; i < j.dim(); ++i)
    for (std::size_t k = 0; k <= i; ++k) {
      // superanticommutative: {x,y} = -(-1)^{xy}{y,x}
      Scalar s = (j.parity()[i] & j.parity()[k] & 1) ? -j.field().one() : j.field().one();
      Vec res = vec_add(br.multiply(j.basis_vec(i), j.basis_vec(k)),
                        vec_scale(br.multiply(j.basis_vec(k), j.basis_vec(i)), s));
      if (!is_zero_vec(res))
        return CheckReport::fail("generic-poisson", {i, k}, res, "bracket not superanticommutative");
    }
  std::optional<std::array<std::size_t, 3>> bad;
  auto ij = detail::make_int_ctx(j), ib = detail::make_int_ctx(br);
  if (ij && ib && ij->ring.p == ib->ring.p) bad = detail::poisson_scan(*ij, *ib);
  else bad = detail::poisson_scan(detail::make_scalar_ctx(j), detail::make_scalar_ctx(br));
  if (!bad) return CheckReport::pass("generic-poisson");
  return CheckReport::fail("generic-poisson", {(*bad)[0], (*bad)[1], (*bad)[2]},
                           detail::poisson_residual(j, br, (*bad)[0], (*bad)[1], (*bad)[2]),
                           "Leibniz rule fails");
}

}  // namespace ncj
