#pragma once

#include "ncj/bimodule.hpp"
#include "ncj/constructions.hpp"
#include "ncj/superalgebra.hpp"

#include <optional>
#include <sstream>

namespace ncj {

// ---------------------------------------------------------------------------
// Builders. Basis orderings are fixed and are part of the file-format
// contract; they are documented per family below.
// ---------------------------------------------------------------------------

/// D_t(alpha,beta,gamma): dim 4, basis (e1,e2,x,y), parity (0,0,1,1).
inline SuperAlgebra build_dt(const Scalar& t, const Scalar& al, const Scalar& be, const Scalar& ga,
                             const Field& f) {
  SuperAlgebra a("Dt(" + t.str() + "," + al.str() + "," + be.str() + "," + ga.str() + ")", f, {0, 0, 1, 1});
  enum { E1, E2, X, Y };
  const Scalar one = f.one(), two = f.of(2);
  a.set_c(E1, E1, E1, one);
  a.set_c(E2, E2, E2, one);
  auto pair2 = [&](int i, int j, const Scalar& cx, const Scalar& cy) {
    a.set_c(i, j, X, cx);
    a.set_c(i, j, Y, cy);
  };
  pair2(E1, X, al, be);            // e1 x = alpha x + beta y
  pair2(X, E2, al, be);            // = x e2
  pair2(X, E1, one - al, -be);     // x e1 = (1-alpha)x - beta y
  pair2(E2, X, one - al, -be);     // = e2 x
  pair2(E1, Y, ga, one - al);      // e1 y = gamma x + (1-alpha)y
  pair2(Y, E2, ga, one - al);
  pair2(Y, E1, -ga, al);           // y e1 = -gamma x + alpha y
  pair2(E2, Y, -ga, al);
  a.set_c(X, Y, E1, two * al);
  a.set_c(X, Y, E2, two * (one - al) * t);
  a.set_c(Y, X, E1, -two * (one - al));
  a.set_c(Y, X, E2, -two * al * t);
  a.set_c(X, X, E1, -two * be);
  a.set_c(X, X, E2, two * be * t);
  a.set_c(Y, Y, E1, two * ga);
  a.set_c(Y, Y, E2, -two * ga * t);
  a.validate_grading();
  return a;
}

/// K_3(alpha,beta,gamma): dim 3, basis (e,z,w), parity (0,1,1).
inline SuperAlgebra build_k3(const Scalar& al, const Scalar& be, const Scalar& ga, const Field& f) {
  SuperAlgebra a("K3(" + al.str() + "," + be.str() + "," + ga.str() + ")", f, {0, 1, 1});
  enum { E, Z, W };
  const Scalar one = f.one(), two = f.of(2);
  a.set_c(E, E, E, one);
  a.set_c(E, Z, Z, al);   a.set_c(E, Z, W, be);
  a.set_c(E, W, Z, ga);   a.set_c(E, W, W, one - al);
  a.set_c(Z, E, Z, one - al); a.set_c(Z, E, W, -be);
  a.set_c(W, E, W, al);   a.set_c(W, E, Z, -ga);
  a.set_c(Z, Z, E, -two * be);
  a.set_c(Z, W, E, two * al);
  a.set_c(W, Z, E, -two * (one - al));
  a.set_c(W, W, E, two * ga);
  a.validate_grading();
  return a;
}

/// U(V,f,star) on F + V. The form and product data are validated; each
/// violation is reported distinctly.
inline SuperAlgebra build_uvf_star(const std::vector<std::uint8_t>& vparity, const Matrix& form,
                                   const std::optional<SuperAlgebra>& star, const Field& fld) {
  std::size_t nv = vparity.size();
  if (form.rows() != nv || form.cols() != nv) throw std::invalid_argument("build_uvf_star: form shape mismatch");
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) {
      if (!form.at(i, j).is_zero() && (vparity[i] ^ vparity[j]))
        throw std::invalid_argument("build_uvf_star: f not graded (pairs odd with even)");
      Scalar s = (vparity[i] & vparity[j] & 1) ? -fld.one() : fld.one();
      if (form.at(i, j) != s * form.at(j, i)) throw std::invalid_argument("build_uvf_star: f not supersymmetric");
    }
  if (rank(form) != nv) throw std::invalid_argument("build_uvf_star: f degenerate");
  if (star) {
    if (star->dim() != nv || star->parity() != vparity || star->field() != fld)
      throw std::invalid_argument("build_uvf_star: star shape mismatch");
    if (star->grading_violation()) throw std::invalid_argument("build_uvf_star: star not graded");
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < nv; ++j) {
        Scalar s = (vparity[i] & vparity[j] & 1) ? -fld.one() : fld.one();
        for (std::size_t k = 0; k < nv; ++k)
          if (star->c(i, j, k) != -(s * star->c(j, i, k)))
            throw std::invalid_argument("build_uvf_star: star not superanticommutative");
      }
    // f(x*y, z) = f(x, y*z) on basis triples
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < nv; ++j)
        for (std::size_t k = 0; k < nv; ++k) {
          Scalar lhs = fld.zero(), rhs = fld.zero();
          for (std::size_t m = 0; m < nv; ++m) {
            lhs += star->c(i, j, m) * form.at(m, k);
            rhs += star->c(j, k, m) * form.at(i, m);
          }
          if (lhs != rhs) throw std::invalid_argument("build_uvf_star: star not f-invariant");
        }
  }
  std::vector<std::uint8_t> par(nv + 1, 0);
  for (std::size_t i = 0; i < nv; ++i) par[i + 1] = vparity[i];
  SuperAlgebra a(star ? "UVf" : "JVf", fld, par);
  a.set_c(0, 0, 0, fld.one());
  for (std::size_t i = 0; i < nv; ++i) {
    a.set_c(0, i + 1, i + 1, fld.one());
    a.set_c(i + 1, 0, i + 1, fld.one());
    for (std::size_t j = 0; j < nv; ++j) {
      if (!form.at(i, j).is_zero()) a.set_c(i + 1, j + 1, 0, form.at(i, j));
      if (star)
        for (std::size_t k = 0; k < nv; ++k)
          if (!star->c(i, j, k).is_zero()) a.set_c(i + 1, j + 1, k + 1, star->c(i, j, k));
    }
  }
  a.validate_grading();
  return a;
}

/// J(V,f) with p orthonormal even vectors and q hyperbolic odd pairs.
/// Basis: (1, v_1..v_p, x_1,y_1,..,x_q,y_q), f(x_i,y_i) = 1 = -f(y_i,x_i).
inline SuperAlgebra build_jvf(std::size_t p, std::size_t q, const Field& fld) {
  std::size_t nv = p + 2 * q;
  if (nv == 0) throw std::invalid_argument("build_jvf: empty V");
  std::vector<std::uint8_t> vpar(nv, 0);
  for (std::size_t i = p; i < nv; ++i) vpar[i] = 1;
  Matrix form(nv, nv, fld);
  for (std::size_t i = 0; i < p; ++i) form.at(i, i) = fld.one();
  for (std::size_t i = 0; i < q; ++i) {
    form.at(p + 2 * i, p + 2 * i + 1) = fld.one();
    form.at(p + 2 * i + 1, p + 2 * i) = -fld.one();
  }
  SuperAlgebra a = build_uvf_star(vpar, form, std::nullopt, fld);
  a.set_name("JVf(" + std::to_string(p) + "," + std::to_string(q) + ")");
  return a;
}

/// Full matrix superalgebra M_{m,n}: basis e_{ij} at index i*(m+n)+j,
/// parity of e_{ij} = [i<m] xor [j<m].
inline SuperAlgebra build_mmn(std::size_t m, std::size_t n, const Field& f) {
  std::size_t d = m + n;
  if (d == 0) throw std::invalid_argument("build_mmn: empty");
  std::vector<std::uint8_t> par(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) par[i * d + j] = static_cast<std::uint8_t>((i < m) != (j < m));
  SuperAlgebra a("M(" + std::to_string(m) + "," + std::to_string(n) + ")", f, par);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) a.set_c(i * d + j, j * d + l, i * d + l, f.one());
  a.validate_grading();
  return a;
}

/// Q(n), the double of M_n: basis e_{ij} then bar e_{ij}, dim 2n^2.
inline SuperAlgebra build_q(std::size_t n, const Field& f) {
  if (n == 0) throw std::invalid_argument("build_q: n >= 1");
  std::size_t nn = n * n;
  std::vector<std::uint8_t> par(2 * nn, 0);
  for (std::size_t i = nn; i < 2 * nn; ++i) par[i] = 1;
  SuperAlgebra a("Q(" + std::to_string(n) + ")", f, par);
  auto idx = [&](std::size_t i, std::size_t j, std::size_t bar) { return bar * nn + i * n + j; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t b1 = 0; b1 < 2; ++b1)
          for (std::size_t b2 = 0; b2 < 2; ++b2)
            a.set_c(idx(i, j, b1), idx(j, l, b2), idx(i, l, (b1 + b2) % 2), f.one());
  a.validate_grading();
  return a;
}

/// P(2) = H(M_{2,2}, strp), frozen multiplication table.
/// Basis (e1,e2,a,b | e,f,c,d): even (e1,e2,a,b) indices 0..3,
/// odd (e,f,c,d) indices 4..7.
inline SuperAlgebra build_p2(const Field& fld) {
  SuperAlgebra p("P2", fld, {0, 0, 0, 0, 1, 1, 1, 1});
  enum { E1, E2, A, B, E, F, C, D };
  const Scalar one = fld.one(), half = fld.of(1, 2);
  // symmetric completion: set ij and (-1)^{pi pj} ji at once
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    p.set_c(i, j, k, v);
    if (i != j) {
      Scalar s = (p.parity()[i] & p.parity()[j] & 1) ? -v : v;
      p.set_c(j, i, k, s);
    }
  };
  put(E1, E1, E1, one);
  put(E2, E2, E2, one);
  put(E1, E, E, one);
  put(E2, F, F, one);
  for (std::size_t u : {A, B, C, D}) {
    put(E1, u, u, half);
    put(E2, u, u, half);
  }
  put(E, A, D, half);
  put(E, C, B, half);
  put(F, B, D, half);
  put(F, C, A, -half);
  put(A, B, E1, half); put(A, B, E2, half);
  put(A, D, F, one);
  put(B, D, E, one);
  put(C, D, E1, half); put(C, D, E2, -half);
  p.validate_grading();
  return p;
}

/// Kac superalgebra K_10. Basis (e1,e2,uz,vz,uw,vw | u,v,w,z): even 0..5,
/// odd 6..9. The products beyond the quoted generators were expanded under
/// the symmetries z<->w, u<->v and the substitution z<->u, w<->v; the
/// expansion is frozen here and cross-checked by check_jordan in the tests.
inline SuperAlgebra build_k10(const Field& fld) {
  SuperAlgebra a("K10", fld, {0, 0, 0, 0, 0, 0, 1, 1, 1, 1});
  enum { E1, E2, UZ, VZ, UW, VW, U, V, W, Z };
  const Scalar one = fld.one(), half = fld.of(1, 2), two = fld.of(2), three = fld.of(3);
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    a.add_c(i, j, k, v);
    if (i != j) {
      Scalar s = (a.parity()[i] & a.parity()[j] & 1) ? -v : v;
      a.add_c(j, i, k, s);
    }
  };
  // e1 is the unit of A1 = <e1,uz,vz,uw,vw>; e2 idempotent; A1.A2 = 0
  put(E1, E1, E1, one);
  put(E2, E2, E2, one);
  for (std::size_t x : {UZ, VZ, UW, VW}) put(E1, x, x, one);
  for (std::size_t m : {U, V, W, Z}) {
    put(E1, m, m, half);
    put(E2, m, m, half);
  }
  // odd o odd
  put(U, Z, UZ, one);
  put(U, W, UW, one);
  put(V, Z, VZ, one);
  put(V, W, VW, one);
  put(Z, W, E1, one); put(Z, W, E2, -three);
  put(U, V, E1, one); put(U, V, E2, -three);
  // A1 x odd
  put(UZ, W, U, -one);
  put(VZ, W, V, -one);
  put(UW, Z, U, one);
  put(VW, Z, V, one);
  put(UZ, V, Z, one);
  put(VZ, U, Z, -one);
  put(UW, V, W, one);
  put(VW, U, W, -one);
  // A1 x A1: hyperbolic pairs
  put(UZ, VW, E1, two);
  put(UW, VZ, E1, -two);
  a.validate_grading();
  return a;
}

/// K_9 = A_1 + M inside K_10, only over characteristic 3.
/// Basis (e1,uz,vz,uw,vw | u,v,w,z).
inline SuperAlgebra build_k9(const Field& fld) {
  if (fld.characteristic() != 3) throw std::invalid_argument("build_k9: requires characteristic 3");
  SuperAlgebra k10 = build_k10(fld);
  std::vector<std::size_t> keep = {0, 2, 3, 4, 5, 6, 7, 8, 9};  // drop e2
  std::vector<std::uint8_t> par;
  for (auto i : keep) par.push_back(k10.parity()[i]);
  SuperAlgebra a("K9", fld, par);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      Vec prod = k10.multiply(k10.basis_vec(keep[i]), k10.basis_vec(keep[j]));
      if (!prod[1].is_zero())
        throw std::logic_error("build_k9: subspace not closed (e2 coefficient nonzero)");
      for (std::size_t k = 0; k < keep.size(); ++k) a.set_c(i, j, k, prod[keep[k]]);
    }
  a.validate_grading();
  return a;
}

/// The base field as a one-dimensional unital algebra.
inline SuperAlgebra build_field_algebra(const Field& f) {
  SuperAlgebra a("F", f, {0});
  a.set_c(0, 0, 0, f.one());
  return a;
}

/// F[s]/(s^2), basis (1,s), all even.
inline SuperAlgebra build_dual_numbers(const Field& f) {
  SuperAlgebra a("F[s]/(s^2)", f, {0, 0});
  a.set_c(0, 0, 0, f.one());
  a.set_c(0, 1, 1, f.one());
  a.set_c(1, 0, 1, f.one());
  return a;
}

/// Group algebra F[C_2], basis (1,g), g^2 = 1, all even.
inline SuperAlgebra build_group_algebra_c2(const Field& f) {
  SuperAlgebra a("F[C2]", f, {0, 0});
  a.set_c(0, 0, 0, f.one());
  a.set_c(0, 1, 1, f.one());
  a.set_c(1, 0, 1, f.one());
  a.set_c(1, 1, 0, f.one());
  return a;
}

// ---------------------------------------------------------------------------
// V(alpha,beta,gamma) modules over D_{-1} (Jordan) and, with the bracket
// actions attached, over D_{-1}(1/2,1/2,0). Module basis (v,w,z,t),
// parity (0,0,1,1).
// ---------------------------------------------------------------------------

namespace detail {
/// Circle-action rows m o a for V(alpha,beta,gamma); a in (e1,e2,x,y).
inline std::vector<std::vector<Vec>> v_module_circle(const Scalar& al, const Scalar& be, const Scalar& ga,
                                                     const Field& f) {
  enum { VV, WW, ZZ, SS };
  const Scalar one = f.one(), half = f.of(1, 2);
  std::vector<std::vector<Vec>> circ(4, std::vector<Vec>(4, zero_vec(4, f)));
  auto set = [&](int m, int a, Vec v) { circ[m][a] = std::move(v); };
  // o e1 and o e2
  set(VV, 0, unit_vec(4, VV, f));
  set(ZZ, 0, vec_scale(unit_vec(4, ZZ, f), half));
  set(SS, 0, vec_scale(unit_vec(4, SS, f), half));
  set(WW, 1, unit_vec(4, WW, f));
  set(ZZ, 1, vec_scale(unit_vec(4, ZZ, f), half));
  set(SS, 1, vec_scale(unit_vec(4, SS, f), half));
  // o x
  set(VV, 2, unit_vec(4, ZZ, f));
  {
    Vec r = zero_vec(4, f);
    r[ZZ] = ga - one;
    r[SS] = -f.of(2) * al;
    set(WW, 2, r);
  }
  set(ZZ, 2, vec_scale(unit_vec(4, VV, f), al));
  {
    Vec r = zero_vec(4, f);
    r[VV] = half * (ga - one);
    r[WW] = -half;
    set(SS, 2, r);
  }
  // o y
  set(VV, 3, unit_vec(4, SS, f));
  {
    Vec r = zero_vec(4, f);
    r[ZZ] = f.of(2) * be;
    r[SS] = -(ga + one);
    set(WW, 3, r);
  }
  {
    Vec r = zero_vec(4, f);
    r[VV] = half * (ga + one);
    r[WW] = half;
    set(ZZ, 3, r);
  }
  set(SS, 3, vec_scale(unit_vec(4, VV, f), be));  // t o y = beta v
  return circ;
}
}  // namespace detail

/// Jordan bimodule V(alpha,beta,gamma) over D_{-1} = build_dt(-1,1/2,0,0).
inline SuperBimodule build_v_module_jordan(const Scalar& al, const Scalar& be, const Scalar& ga, const Field& f) {
  SuperAlgebra j = build_dt(f.of(-1), f.of(1, 2), f.zero(), f.zero(), f);
  auto circ = detail::v_module_circle(al, be, ga, f);
  SuperBimodule m(j, {0, 0, 1, 1});
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t mm = 0; mm < 4; ++mm) {
      m.set_right_row(mm, a, circ[mm][a]);
      Scalar s = (j.parity()[a] & m.mparity()[mm] & 1) ? -f.one() : f.one();
      m.set_left_row(a, mm, vec_scale(circ[mm][a], s));
    }
  m.validate_grading();
  return m;
}

/// The bracket-action tensors (m R_a^-) attached per the d0r- expressions.
/// Indexed by algebra basis a in (e1,e2,x,y); each entry is rows over m.
inline std::vector<Matrix> v_module_rminus(const Scalar& al, const Scalar& be, const Scalar& ga, const Field& f) {
  (void)al;
  enum { VV, WW, ZZ, SS };
  const Scalar one = f.one(), half = f.of(1, 2);
  std::vector<Matrix> rm(4, Matrix(4, 4, f));
  // R^-_x
  rm[2].at(WW, SS) = ga + one;
  rm[2].at(WW, ZZ) = -f.of(2) * be;
  rm[2].at(VV, SS) = one;
  rm[2].at(ZZ, WW) = half;
  rm[2].at(ZZ, VV) = -half * (ga + one);
  // R^-_{e1} = -R^-_{e2}
  rm[0].at(ZZ, ZZ) = half * be;
  rm[0].at(ZZ, SS) = -half * (ga + one);
  rm[1].at(ZZ, ZZ) = -half * be;
  rm[1].at(ZZ, SS) = half * (ga + one);
  // R^-_y = 0
  return rm;
}

/// Noncommutative Jordan candidate module over D_{-1}(1/2,1/2,0):
/// actions assembled as R = R^+ + R^-, L = R^+ - R^-.
inline SuperBimodule build_v_module_ncj(const Scalar& al, const Scalar& be, const Scalar& ga, const Field& f) {
  SuperAlgebra d = build_dt(f.of(-1), f.of(1, 2), f.of(1, 2), f.zero(), f);
  auto circ = detail::v_module_circle(al, be, ga, f);
  auto rm = v_module_rminus(al, be, ga, f);
  SuperBimodule m(d, {0, 0, 1, 1});
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t mm = 0; mm < 4; ++mm) {
      Vec right = vec_add(circ[mm][a], rm[a].row(mm));
      Vec lop = vec_sub(circ[mm][a], rm[a].row(mm));
      m.set_right_row(mm, a, right);
      Scalar s = (d.parity()[a] & m.mparity()[mm] & 1) ? -f.one() : f.one();
      m.set_left_row(a, mm, vec_scale(lop, s));
    }
  m.validate_grading();
  return m;
}

// ---------------------------------------------------------------------------
// Catalog name resolver (CLI surface): Dt(t,a,b,g), K3(a,b,g), JVf(p,q),
// UVf(p,q), Q(n), M(m,n), P2, K10, K9@p3, Vmod(a,b,g).
// ---------------------------------------------------------------------------

namespace detail {
inline std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}
}  // namespace detail

inline SuperAlgebra build_catalog(const std::string& name, const Field& f) {
  std::string head = name, args;
  auto lp = name.find('(');
  if (lp != std::string::npos) {
    if (name.back() != ')') throw std::invalid_argument("catalog: unbalanced parens in '" + name + "'");
    head = name.substr(0, lp);
    args = name.substr(lp + 1, name.size() - lp - 2);
  }
  auto a = detail::split_args(args);
  auto want = [&](std::size_t k) {
    if (a.size() != k)
      throw std::invalid_argument("catalog: " + head + " expects " + std::to_string(k) + " arguments");
  };
  auto num = [&](std::size_t i) { return f.parse_scalar(a[i]); };
  auto cnt = [&](std::size_t i) -> std::size_t { return static_cast<std::size_t>(std::stoul(a[i])); };
  if (head == "Dt") {
    want(4);
    return build_dt(num(0), num(1), num(2), num(3), f);
  }
  if (head == "K3") {
    want(3);
    return build_k3(num(0), num(1), num(2), f);
  }
  if (head == "JVf" || head == "UVf") {
    want(2);
    return build_jvf(cnt(0), cnt(1), f);
  }
  if (head == "Q") {
    want(1);
    return build_q(cnt(0), f);
  }
  if (head == "M") {
    want(2);
    return build_mmn(cnt(0), cnt(1), f);
  }
  if (head == "P2") {
    want(0);
    return build_p2(f);
  }
  if (head == "K10") {
    want(0);
    return build_k10(f);
  }
  if (head == "K9@p3" || head == "K9") {
    want(0);
    return build_k9(f.characteristic() == 3 ? f : Field::prime(3));
  }
  if (head == "F") {
    want(0);
    return build_field_algebra(f);
  }
  if (head == "Dual") {
    want(0);
    return build_dual_numbers(f);
  }
  if (head == "C2") {
    want(0);
    return build_group_algebra_c2(f);
  }
  throw std::invalid_argument("catalog: unknown algebra '" + name + "'");
}

/// Module catalog: Vmod(a,b,g) (Jordan V-module) and VmodNcj(a,b,g),
/// Reg(<algebra>), RegOp(<algebra>).
inline SuperBimodule build_catalog_module(const std::string& name, const Field& f) {
  auto lp = name.find('(');
  std::string head = lp == std::string::npos ? name : name.substr(0, lp);
  std::string args = lp == std::string::npos ? "" : name.substr(lp + 1, name.size() - lp - 2);
  if (head == "Vmod" || head == "VmodNcj") {
    auto a = detail::split_args(args);
    if (a.size() != 3) throw std::invalid_argument("catalog: " + head + " expects 3 arguments");
    if (head == "Vmod")
      return build_v_module_jordan(f.parse_scalar(a[0]), f.parse_scalar(a[1]), f.parse_scalar(a[2]), f);
    return build_v_module_ncj(f.parse_scalar(a[0]), f.parse_scalar(a[1]), f.parse_scalar(a[2]), f);
  }
  if (head == "Reg") return regular(build_catalog(args, f));
  if (head == "RegOp") return opposite_module(regular(build_catalog(args, f)));
  throw std::invalid_argument("catalog: unknown module '" + name + "'");
}

}  // namespace ncj
