#pragma once

#include "ncj/identities.hpp"
#include "ncj/superalgebra.hpp"

#include <array>
#include <map>
#include <optional>

namespace ncj {

namespace detail {

/// Restriction of a right-acting operator to an invariant subspace,
/// expressed in the subspace basis. Throws if the space is not invariant.
inline Matrix restrict_operator(const Matrix& op, const Subspace& s) {
  Matrix w(s.dim(), s.dim(), op.field());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec img = s.basis_row(i) * op;
    auto coords = solve_left(s.basis(), img);
    if (!coords) throw std::invalid_argument("restrict_operator: subspace not invariant");
    w.set_row(i, *coords);
  }
  return w;
}

/// Lagrange projection polynomial of T at eigenvalue i over {0,1,2}.
inline Matrix peirce_projection_poly(const Matrix& t, int i) {
  const Field& f = t.field();
  std::size_t n = t.rows();
  Matrix id = Matrix::identity(n, f);
  Matrix t1 = t - id;
  Matrix t2 = t - (f.of(2) * id);
  switch (i) {
    case 0: return f.of(1, 2) * (t1 * t2);
    case 1: return -f.one() * (t * t2);
    case 2: return f.of(1, 2) * (t * t1);
  }
  throw std::logic_error("peirce_projection_poly: eigenvalue out of range");
}

}  // namespace detail

/// Peirce decomposition U = U_0 + U_1 + U_2 w.r.t. one even idempotent,
/// with the projections realized as polynomials in L_e + R_e.
struct PeirceDecomposition {
  Vec idempotent;
  std::array<Subspace, 3> component;
  std::array<Matrix, 3> projection;

  const Subspace& u(int i) const { return component.at(i); }
  const Matrix& p(int i) const { return projection.at(i); }
};

inline PeirceDecomposition peirce_decompose(const SuperAlgebra& a, const Vec& e) {
  if (!a.is_idempotent(e)) throw std::invalid_argument("peirce_decompose: not an even idempotent");
  const Field& f = a.field();
  Matrix t = a.left_op(e) + a.right_op(e);
  PeirceDecomposition pd;
  pd.idempotent = e;
  std::size_t total = 0;
  for (int i = 0; i < 3; ++i) {
    Matrix shifted = t - (f.of(i) * Matrix::identity(a.dim(), f));
    pd.component[i] = nullspace(shifted);
    pd.component[i].grade(a.parity());
    total += pd.component[i].dim();
  }
  if (total != a.dim())
    throw std::domain_error("peirce_decompose: L_e + R_e is not split by {0,1,2} (non-flexible input?)");
  for (int i = 0; i < 3; ++i) {
    pd.projection[i] = detail::peirce_projection_poly(t, i);
    // kernel route and polynomial route must agree
    for (int j = 0; j < 3; ++j)
      for (std::size_t r = 0; r < pd.component[j].dim(); ++r) {
        Vec img = pd.component[j].basis_row(r) * pd.projection[i];
        Vec want = (i == j) ? pd.component[j].basis_row(r) : zero_vec(a.dim(), f);
        if (img != want)
          throw std::logic_error("peirce_decompose: projection polynomial disagrees with kernel computation");
      }
  }
  return pd;
}

/// Peirce decomposition w.r.t. pairwise orthogonal even idempotents
/// e_1..e_n; components indexed by unordered pairs (i,j), 0 <= i <= j <= n,
/// where index 0 plays the role of "1 - sum e_k".
struct MultiPeirce {
  std::vector<Vec> idempotents;
  std::map<std::pair<int, int>, Subspace> components;
  std::map<std::pair<int, int>, Matrix> projections;

  const Subspace& u(int i, int j) const {
    auto key = std::minmax(i, j);
    return components.at({key.first, key.second});
  }
};

inline MultiPeirce peirce_multi(const SuperAlgebra& a, const std::vector<Vec>& idems) {
  const Field& f = a.field();
  std::size_t n = idems.size();
  for (const auto& e : idems)
    if (!a.is_idempotent(e)) throw std::invalid_argument("peirce_multi: not an even idempotent");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!is_zero_vec(a.multiply(idems[i], idems[j])) || !is_zero_vec(a.multiply(idems[j], idems[i])))
        throw std::invalid_argument("peirce_multi: idempotents not orthogonal");

  std::vector<Matrix> ts;
  std::vector<std::array<Matrix, 3>> projs;
  for (const auto& e : idems) {
    Matrix t = a.left_op(e) + a.right_op(e);
    ts.push_back(t);
    projs.push_back({detail::peirce_projection_poly(t, 0), detail::peirce_projection_poly(t, 1),
                     detail::peirce_projection_poly(t, 2)});
  }

  MultiPeirce mp;
  mp.idempotents = idems;
  std::size_t total = 0;
  for (int i = 0; i <= static_cast<int>(n); ++i)
    for (int j = i; j <= static_cast<int>(n); ++j) {
      // multiplicity of e_k on U_{ij}: 2 if i=j=k, 1 if k in {i,j}, else 0
      Subspace comp = Subspace::full(a.dim(), f);
      Matrix proj = Matrix::identity(a.dim(), f);
      for (std::size_t k = 1; k <= n; ++k) {
        int mult = (static_cast<int>(k) == i ? 1 : 0) + (static_cast<int>(k) == j ? 1 : 0);
        Matrix shifted = ts[k - 1] - (f.of(mult) * Matrix::identity(a.dim(), f));
        comp = comp.intersect(nullspace(shifted));
        proj = proj * projs[k - 1][mult];
      }
      comp.grade(a.parity());
      mp.components[{i, j}] = comp;
      mp.projections[{i, j}] = proj;
      total += comp.dim();
    }
  if (total != a.dim()) throw std::domain_error("peirce_multi: components do not direct-sum to the algebra");

  // inclusion lattice: products land in the prescribed component
  auto target_key = [&](std::pair<int, int> x, std::pair<int, int> y) -> std::optional<std::pair<int, int>> {
    if (x == y) return x;  // U_ij^2 handled separately below
    int common = -1;
    for (int u : {x.first, x.second})
      for (int v : {y.first, y.second})
        if (u == v) common = u;
    if (common < 0) return std::nullopt;  // disjoint: product must vanish
    int p = (x.first == common) ? x.second : x.first;
    int q = (y.first == common) ? y.second : y.first;
    auto mm = std::minmax(p, q);
    return std::make_pair(mm.first, mm.second);
  };
  for (const auto& [kx, cx] : mp.components)
    for (const auto& [ky, cy] : mp.components) {
      Subspace target = Subspace::zero(a.dim(), f);
      if (kx == ky && kx.first != kx.second) {
        target = mp.components.at({kx.first, kx.first})
                     .sum(cx)
                     .sum(mp.components.at({kx.second, kx.second}));
      } else if (auto tk = target_key(kx, ky)) {
        target = mp.components.at(*tk);
      }
      for (std::size_t r = 0; r < cx.dim(); ++r)
        for (std::size_t s = 0; s < cy.dim(); ++s)
          if (!target.contains(a.multiply(cx.basis_row(r), cy.basis_row(s))))
            throw std::domain_error("peirce_multi: inclusion lattice violated");
    }
  return mp;
}

/// U_1^{[lambda]} = { x in U_1 : L_e x = lambda x }.
inline Subspace eigenspace_u1(const SuperAlgebra& a, const Vec& e, const Scalar& lambda) {
  PeirceDecomposition pd = peirce_decompose(a, e);
  Matrix shifted = a.left_op(e) - (lambda * Matrix::identity(a.dim(), a.field()));
  Subspace eig = nullspace(shifted).intersect(pd.u(1));
  eig.grade(a.parity());
  return eig;
}

/// S_1^{[phi]}(e) = U_1^{[lambda]} + U_1^{[1-lambda]} where lambda(1-lambda) = phi.
/// Throws FieldExtensionError when no such lambda exists in the field.
inline Subspace s_phi(const SuperAlgebra& a, const Vec& e, const Scalar& phi) {
  const Field& f = a.field();
  Scalar disc = f.one() - f.of(4) * phi;
  auto root = f.sqrt(disc);
  if (!root)
    throw FieldExtensionError("s_phi: lambda(1-lambda) = " + phi.str() + " requires field extension (sqrt of " +
                              disc.str() + ")");
  Scalar lam = (f.one() + *root) / f.of(2);
  return eigenspace_u1(a, e, lam).sum(eigenspace_u1(a, e, f.one() - lam));
}

/// Rational-root eigensplit of L_e on U_1; complete = the eigenspaces
/// exhaust U_1 (otherwise a "needs square root" situation).
struct EigenSplit {
  std::vector<std::pair<Scalar, Subspace>> spaces;
  bool complete = false;
};

inline EigenSplit u1_eigen_split(const SuperAlgebra& a, const Vec& e) {
  PeirceDecomposition pd = peirce_decompose(a, e);
  const Field& f = a.field();
  EigenSplit out;
  if (pd.u(1).dim() == 0) {
    out.complete = true;
    return out;
  }
  Matrix w = detail::restrict_operator(a.left_op(e), pd.u(1));
  std::vector<Scalar> roots;
  if (f.is_rational()) {
    std::vector<Scalar> cp = char_poly(w);
    // integer-scale the monic polynomial and try p/q with p | a0, q | an
    BigInt lcm = 1;
    for (const auto& c : cp) lcm = boost::multiprecision::lcm(lcm, c.denominator());
    std::vector<BigInt> ic;
    for (const auto& c : cp) ic.push_back(c.numerator() * (lcm / c.denominator()));
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(f.zero());
    auto divisors = [](BigInt v) {
      std::vector<BigInt> ds;
      if (v < 0) v = -v;
      for (BigInt d = 1; d * d <= v; ++d)
        if (v % d == 0) {
          ds.push_back(d);
          ds.push_back(v / d);
        }
      return ds;
    };
    if (low < ic.size() - 1) {
      for (const BigInt& p : divisors(ic[low]))
        for (const BigInt& q : divisors(ic.back()))
          for (int sgn : {1, -1}) {
            Scalar cand = Scalar::rational(BigRational(sgn * p, q));
            Scalar val = f.zero();
            for (std::size_t k = cp.size(); k-- > 0;) val = val * cand + cp[k];
            if (val.is_zero()) {
              bool seen = false;
              for (const auto& r : roots) seen = seen || r == cand;
              if (!seen) roots.push_back(cand);
            }
          }
    }
  } else {
    for (std::uint32_t r = 0; r < f.modulus(); ++r) {
      Scalar cand = f.of(r);
      Matrix shifted = w - (cand * Matrix::identity(w.rows(), f));
      if (rank(shifted) < w.rows()) roots.push_back(cand);
    }
  }
  std::size_t covered = 0;
  for (const auto& lam : roots) {
    Subspace es = eigenspace_u1(a, e, lam);
    if (es.dim() == 0) continue;
    covered += es.dim();
    out.spaces.emplace_back(lam, es);
  }
  out.complete = covered == pd.u(1).dim();
  return out;
}

/// The full battery of Peirce relations w.r.t. one even idempotent:
/// (pd_1), (pd_2), (comm_op), (comm_proj), the u0/u2 product recovery,
/// the P_i/P_1 transfer relations, and the psu1id operator identities.
inline CheckReport verify_peirce_relations(const SuperAlgebra& a, const Vec& e) {
  PeirceDecomposition pd = peirce_decompose(a, e);
  const Field& f = a.field();
  auto fail = [&](std::string what, std::vector<std::size_t> idx) {
    return CheckReport::fail("peirce-relations", std::move(idx), Vec{}, std::move(what));
  };
  const Subspace &u0 = pd.u(0), &u1 = pd.u(1), &u2 = pd.u(2);

  // (pd_1)
  for (int i : {0, 2}) {
    const Subspace& ui = pd.u(i);
    for (std::size_t r = 0; r < ui.dim(); ++r)
      for (std::size_t s = 0; s < ui.dim(); ++s)
        if (!ui.contains(a.multiply(ui.basis_row(r), ui.basis_row(s))))
          return fail("(pd_1) U_" + std::to_string(i) + "^2 not inside U_" + std::to_string(i), {r, s});
    for (std::size_t r = 0; r < ui.dim(); ++r)
      for (std::size_t s = 0; s < u1.dim(); ++s) {
        if (!u1.contains(a.multiply(ui.basis_row(r), u1.basis_row(s))))
          return fail("(pd_1) U_i U_1 not inside U_1", {r, s});
        if (!u1.contains(a.multiply(u1.basis_row(s), ui.basis_row(r))))
          return fail("(pd_1) U_1 U_i not inside U_1", {r, s});
      }
  }
  for (std::size_t r = 0; r < u0.dim(); ++r)
    for (std::size_t s = 0; s < u2.dim(); ++s)
      if (!is_zero_vec(a.multiply(u0.basis_row(r), u2.basis_row(s))) ||
          !is_zero_vec(a.multiply(u2.basis_row(s), u0.basis_row(r))))
        return fail("(pd_1) U_0 U_2 != 0", {r, s});

  // (pd_2): P_i (L_e - i/2) = 0 = P_i (R_e - i/2), and U_1 o U_1 in U_0+U_2
  Matrix le = a.left_op(e), re = a.right_op(e);
  for (int i : {0, 2}) {
    Matrix half = f.of(i, 2) * Matrix::identity(a.dim(), f);
    if (!(pd.p(i) * (le - half)).is_zero() || !(pd.p(i) * (re - half)).is_zero())
      return fail("(pd_2) xe = ex = (i/2)x fails on U_" + std::to_string(i), {});
  }
  Subspace u02 = u0.sum(u2);
  for (std::size_t r = 0; r < u1.dim(); ++r)
    for (std::size_t s = 0; s < u1.dim(); ++s)
      if (!u02.contains(a.circle(u1.basis_row(r), u1.basis_row(s))))
        return fail("(pd_2) U_1 o U_1 not inside U_0 + U_2", {r, s});

  // (comm_op) and (comm_proj) for x in U_0 + U_2
  for (std::size_t r = 0; r < u02.dim(); ++r) {
    Vec x = u02.basis_row(r);
    for (OperatorKind ke : {OperatorKind::L, OperatorKind::R}) {
      Matrix ex = a.mult_operator(x, ke);
      for (OperatorKind kf : {OperatorKind::L, OperatorKind::R}) {
        Matrix fe = kf == OperatorKind::L ? le : re;
        if (ex * fe != fe * ex) return fail("(comm_op) [E_x, F_e] != 0 for x in U_0+U_2", {r});
      }
      for (int i = 0; i < 3; ++i)
        if (ex * pd.p(i) != pd.p(i) * ex) return fail("(comm_proj) [E_x, P_i] != 0", {r});
    }
  }

  // (u0_mult) / (u2_mult)
  for (std::size_t s = 0; s < u1.dim(); ++s) {
    Vec z = u1.basis_row(s);
    Vec ez = a.multiply(e, z), ze = a.multiply(z, e);
    for (std::size_t r = 0; r < u0.dim(); ++r) {
      Vec y = u0.basis_row(r);
      Vec zy = a.multiply(z, y), yz = a.multiply(y, z);
      if (a.multiply(e, a.bullet(z, y)) != zy || a.bullet(ez, y) != zy)
        return fail("(u0_mult) e(z.y) = ez.y = zy fails", {r, s});
      if (a.multiply(a.bullet(y, z), e) != yz || a.bullet(y, ze) != yz)
        return fail("(u0_mult) (y.z)e = y.ze = yz fails", {r, s});
    }
    for (std::size_t r = 0; r < u2.dim(); ++r) {
      Vec u = u2.basis_row(r);
      Vec uz = a.multiply(u, z), zu = a.multiply(z, u);
      if (a.multiply(e, a.bullet(u, z)) != uz || a.bullet(u, ez) != uz)
        return fail("(u2_mult) e(u.z) = u.ez = uz fails", {r, s});
      if (a.multiply(a.bullet(z, u), e) != zu || a.bullet(ze, u) != zu)
        return fail("(u2_mult) (z.u)e = ze.u = zu fails", {r, s});
    }
  }

  // (p_i): P_2(ez . w) = P_2(z . we) = P_2(zw), P_0(w . ez) = P_0(we . z) = P_0(wz)
  for (std::size_t r = 0; r < u1.dim(); ++r)
    for (std::size_t s = 0; s < u1.dim(); ++s) {
      Vec z = u1.basis_row(r), w = u1.basis_row(s);
      Vec ez = a.multiply(e, z), we = a.multiply(w, e);
      auto P = [&](int i, const Vec& v) { return v * pd.p(i); };
      if (P(2, a.bullet(ez, w)) != P(2, a.multiply(z, w)) || P(2, a.bullet(z, we)) != P(2, a.multiply(z, w)))
        return fail("(p_i) P_2 transfer fails", {r, s});
      if (P(0, a.bullet(w, ez)) != P(0, a.multiply(w, z)) || P(0, a.bullet(we, z)) != P(0, a.multiply(w, z)))
        return fail("(p_i) P_0 transfer fails", {r, s});
    }

  // (p_1): P_1(zw) . u = P_1(z(w . u)) = (-1)^{wu} P_1((z . u)w), u in U_0 or U_2
  for (std::size_t r = 0; r < u1.dim(); ++r)
    for (std::size_t s = 0; s < u1.dim(); ++s) {
      Vec z = u1.basis_row(r), w = u1.basis_row(s);
      auto P1 = [&](const Vec& v) { return v * pd.p(1); };
      for (const Subspace* ui : {&u0, &u2})
        for (std::size_t q = 0; q < ui->dim(); ++q) {
          Vec u = ui->basis_row(q);
          Scalar sg = a.koszul(w, u);
          Vec lhs = a.bullet(P1(a.multiply(z, w)), u);
          Vec mid = P1(a.multiply(z, a.bullet(w, u)));
          Vec rhs = vec_scale(P1(a.multiply(a.bullet(z, u), w)), sg);
          if (lhs != mid || mid != rhs) return fail("(p_1) transfer fails", {r, s, q});
        }
    }

  // (p_ip_1): x o P_1(yz) = P_1(xy) o z = (-1)^{x(y+z)} y o P_1(zx)
  for (std::size_t rx = 0; rx < u1.dim(); ++rx)
    for (std::size_t ry = 0; ry < u1.dim(); ++ry)
      for (std::size_t rz = 0; rz < u1.dim(); ++rz) {
        Vec x = u1.basis_row(rx), y = u1.basis_row(ry), z = u1.basis_row(rz);
        auto P1 = [&](const Vec& v) { return v * pd.p(1); };
        int px = u1.parities()[rx], py = u1.parities()[ry], pz = u1.parities()[rz];
        Scalar sg = (px & (py ^ pz) & 1) ? -f.one() : f.one();
        Vec t1 = a.circle(x, P1(a.multiply(y, z)));
        Vec t2 = a.circle(P1(a.multiply(x, y)), z);
        Vec t3 = vec_scale(a.circle(y, P1(a.multiply(z, x))), sg);
        if (t1 != t2 || t2 != t3) return fail("(p_ip_1) fails", {rx, ry, rz});
      }

  // (l_xp_1r_y+l_y): x,y in U_1 with xy in U_0+U_2
  for (std::size_t rx = 0; rx < u1.dim(); ++rx)
    for (std::size_t ry = 0; ry < u1.dim(); ++ry) {
      Vec x = u1.basis_row(rx), y = u1.basis_row(ry);
      if (!u02.contains(a.multiply(x, y))) continue;
      Matrix lx = a.left_op(x), rxo = a.right_op(x);
      Matrix sum = a.right_op(y) + a.left_op(y);
      if (!(pd.p(1) * lx * pd.p(1) * sum).is_zero() || !(pd.p(1) * rxo * pd.p(1) * sum).is_zero())
        return fail("(l_xp_1r_y+l_y) fails", {rx, ry});
    }

  // psu1id: for a,b in U_i, i = 0,2, operator identities restricted to U_1
  for (int i : {0, 2}) {
    const Subspace& ui = pd.u(i);
    for (std::size_t r = 0; r < ui.dim(); ++r)
      for (std::size_t s = 0; s < ui.dim(); ++s) {
        Vec xa = ui.basis_row(r), xb = ui.basis_row(s);
        Scalar sg = a.koszul(xa, xb);
        Matrix ra = a.right_op(xa), rb = a.right_op(xb);
        Matrix la = a.left_op(xa), lb = a.left_op(xb);
        Matrix rab = a.right_op(a.multiply(xa, xb)), lab = a.left_op(a.multiply(xa, xb));
        const Matrix& p1 = pd.p(1);
        if (!(p1 * (rab - ra * rb - sg * (lb * ra))).is_zero() ||
            !(p1 * (rab - ra * rb - sg * (rb * la))).is_zero())
          return fail("(psu1id) R_{ab} identity fails on U_1", {static_cast<std::size_t>(i), r, s});
        if (!(p1 * (lab - sg * (lb * la) - la * rb)).is_zero() ||
            !(p1 * (lab - sg * (lb * la) - ra * lb)).is_zero())
          return fail("(psu1id) L_{ab} identity fails on U_1", {static_cast<std::size_t>(i), r, s});
      }
  }

  return CheckReport::pass("peirce-relations");
}

/// Connection witness for a pair of orthogonal idempotents; the product
/// conditions use the algebra product itself.
struct ConnectionWitness {
  std::size_t i = 0, j = 1;  // indices into the idempotent list
  Vec u, v;
  Scalar phi;
  bool odd_kind = false;
};

inline CheckReport verify_connection(const SuperAlgebra& a, const std::vector<Vec>& idems,
                                     const ConnectionWitness& w) {
  const Field& f = a.field();
  auto fail = [&](std::string what) { return CheckReport::fail("connection", {w.i, w.j}, Vec{}, std::move(what)); };
  const Vec &ei = idems.at(w.i), &ej = idems.at(w.j);
  if (!a.is_idempotent(ei) || !a.is_idempotent(ej)) return fail("not idempotents");
  if (!is_zero_vec(a.multiply(ei, ej)) || !is_zero_vec(a.multiply(ej, ei))) return fail("idempotents not orthogonal");
  for (const Vec* x : {&w.u, &w.v}) {
    auto par = a.parity_of(*x);
    if (!par || *par != (w.odd_kind ? 1 : 0)) return fail("witness elements not homogeneous of the declared kind");
  }
  // membership in S^[phi]_{ij} = (U_1(e_i) n U_1(e_j)) n ker(L_e^2 - L_e + phi)
  for (const Vec* ep : {&ei, &ej}) {
    Matrix t = a.left_op(*ep) + a.right_op(*ep);
    Matrix le = a.left_op(*ep);
    Matrix cond = le * le - le + (w.phi * Matrix::identity(a.dim(), f));
    for (const Vec* x : {&w.u, &w.v}) {
      if (*x * t != *x) return fail("witness not in U_1 of both idempotents");
      if (!is_zero_vec(*x * cond)) return fail("witness not in S^[phi]");
    }
  }
  Vec uv = a.multiply(w.u, w.v), vu = a.multiply(w.v, w.u);
  if (!w.odd_kind) {
    Vec sum = vec_add(ei, ej);
    if (vu != sum || uv != sum) return fail("even connection products vu = uv = e_i + e_j fail");
  } else {
    Vec diff = vec_sub(ei, ej);
    if (vu != diff || uv != vec_scale(diff, -f.one())) return fail("odd connection products vu = -uv = e_i - e_j fail");
  }
  return CheckReport::pass("connection");
}

/// phi = lambda(1-lambda) read off the witness: u(L_e - L_e^2) = phi u.
inline Scalar indicator_of(const SuperAlgebra& a, const std::vector<Vec>& idems, const ConnectionWitness& w) {
  CheckReport ok = verify_connection(a, idems, w);
  if (!ok.passed) throw std::invalid_argument("indicator_of: witness not verified: " + ok.summary());
  Matrix le = a.left_op(idems.at(w.i));
  Vec img = vec_sub(w.u * le, (w.u * le) * le);
  // img = phi * u
  for (std::size_t k = 0; k < img.size(); ++k)
    if (!w.u[k].is_zero()) {
      Scalar phi = img[k] / w.u[k];
      if (img != vec_scale(w.u, phi))
        throw std::domain_error("indicator_of: witness mixes distinct indicator values");
      return phi;
    }
  throw std::invalid_argument("indicator_of: zero witness");
}

/// Batch variant: all U_ij (i < j) share one indicator (degree >= 3 case);
/// computed from T - T^2 = phi id on each component, T = L_{e_i} restricted.
inline Scalar common_indicator(const SuperAlgebra& a, const std::vector<Vec>& idems) {
  MultiPeirce mp = peirce_multi(a, idems);
  std::optional<Scalar> phi;
  for (std::size_t i = 1; i <= idems.size(); ++i)
    for (std::size_t j = i + 1; j <= idems.size(); ++j) {
      const Subspace& c = mp.u(static_cast<int>(i), static_cast<int>(j));
      if (c.dim() == 0) continue;
      Matrix t = detail::restrict_operator(a.left_op(idems[i - 1]), c);
      Matrix d = t - t * t;
      Scalar cand = d.at(0, 0);
      if (d != cand * Matrix::identity(c.dim(), a.field()))
        throw std::domain_error("common_indicator: L_e - L_e^2 is not scalar on U_" + std::to_string(i) +
                                std::to_string(j));
      if (phi && *phi != cand) throw std::domain_error("common_indicator: indicators differ between components");
      phi = cand;
    }
  if (!phi) throw std::domain_error("common_indicator: no connected components");
  return *phi;
}

/// Executable form of the K-set lemma: given K inside U_1 with K U_1 in
/// U_0+U_2 and trivial circle-annihilator, P_1(U_1 U_1) must vanish.
inline CheckReport lemma_k_set(const SuperAlgebra& a, const Vec& e, const std::vector<Vec>& kset) {
  PeirceDecomposition pd = peirce_decompose(a, e);
  const Subspace& u1 = pd.u(1);
  Subspace u02 = pd.u(0).sum(pd.u(2));
  auto fail = [&](std::string what, std::vector<std::size_t> idx) {
    return CheckReport::fail("k-set", std::move(idx), Vec{}, std::move(what));
  };
  for (std::size_t i = 0; i < kset.size(); ++i) {
    if (!u1.contains(kset[i])) return fail("K not inside U_1", {i});
    for (std::size_t s = 0; s < u1.dim(); ++s)
      if (!u02.contains(a.multiply(kset[i], u1.basis_row(s)))) return fail("K U_1 not inside U_0+U_2", {i, s});
  }
  // annihilator: a in U_1 with k o a = 0 for all k
  const Field& f = a.field();
  Matrix sys(u1.dim(), kset.size() * a.dim(), f);
  for (std::size_t s = 0; s < u1.dim(); ++s)
    for (std::size_t i = 0; i < kset.size(); ++i) {
      Vec prod = a.circle(kset[i], u1.basis_row(s));
      for (std::size_t k = 0; k < a.dim(); ++k) sys.at(s, i * a.dim() + k) = prod[k];
    }
  if (nullspace(sys).dim() != 0) return fail("circle-annihilator of K in U_1 is nontrivial", {});
  for (std::size_t r = 0; r < u1.dim(); ++r)
    for (std::size_t s = 0; s < u1.dim(); ++s) {
      Vec p1 = a.multiply(u1.basis_row(r), u1.basis_row(s)) * pd.p(1);
      if (!is_zero_vec(p1)) return fail("P_1(U_1 U_1) != 0 despite K-set hypotheses", {r, s});
    }
  return CheckReport::pass("k-set");
}

}  // namespace ncj
