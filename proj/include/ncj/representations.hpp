#pragma once

#include "ncj/bimodule.hpp"
#include "ncj/identities.hpp"
#include "ncj/peirce.hpp"

#include <algorithm>
#include <deque>

namespace ncj {

/// Noncommutative Jordan bimodule check through the split null extension:
/// E = A + M must satisfy the defining identities. Witness indices are
/// labelled A#k / M#k in the detail string.
inline CheckReport check_ncj_bimodule(const SuperAlgebra& a, const SuperBimodule& m) {
  if (m.grading_violation()) {
    auto v = *m.grading_violation();
    return CheckReport::fail("ncj-bimodule", {v[0], v[1], v[2]}, Vec{}, "module grading violation");
  }
  SuperAlgebra e = split_null_extension(a, m);
  CheckReport r = check_noncommutative_jordan(e);
  if (r.passed) return CheckReport::pass("ncj-bimodule");
  std::string lifted;
  for (std::size_t idx : r.witness->indices) {
    if (!lifted.empty()) lifted += ",";
    lifted += idx < a.dim() ? "A#" + std::to_string(idx) : "M#" + std::to_string(idx - a.dim());
  }
  return CheckReport::fail("ncj-bimodule", r.witness->indices, r.witness->residual,
                           r.witness->detail + " at (" + lifted + ")");
}

/// Jordan bimodule check over a Jordan (super)algebra.
inline CheckReport check_jordan_bimodule(const SuperAlgebra& j, const SuperBimodule& m) {
  SuperAlgebra e = split_null_extension(j, m);
  CheckReport r = check_jordan(e);
  if (r.passed) return CheckReport::pass("jordan-bimodule");
  return CheckReport::fail("jordan-bimodule", r.witness->indices, r.witness->residual, r.witness->detail);
}

/// R+/R- route of the bimodule axioms: R+ must be a Jordan representation of
/// the symmetrized algebra and the relations
///   (r+r-1)  [R+_a, R-_b] = 1/2 R+_{[a,b]}
///   (r+r-2)  R-_a R+_b + (-1)^{ab} R-_b R+_a = R-_{a o b}
/// must hold on homogeneous basis pairs. The verdict is cross-checked
/// against the split-null-extension route on the assembled module
/// (R = R+ + R-, L = R+ - R-); a disagreement throws.
///
/// `u` is the noncommutative Jordan algebra in its two-product view,
/// `circle` the Jordan bimodule over symmetrize(u) carrying the R+ action,
/// `rminus[a]` the matrix of R-_{e_a}.
struct RpmReport {
  CheckReport report;
  SuperBimodule assembled;  // module over u with R = R+ + R-, L = R+ - R-
};

inline SuperBimodule assemble_from_rpm(const SuperAlgebra& u, const SuperBimodule& circle,
                                       const std::vector<Matrix>& rminus) {
  SuperBimodule m(u, circle.mparity());
  const Field& f = u.field();
  for (std::size_t a = 0; a < u.dim(); ++a) {
    Matrix rp = circle.right_op(u.basis_vec(a));
    const Matrix& rm = rminus.at(a);
    Matrix right = rp + rm;
    Matrix lop = rp - rm;
    for (std::size_t i = 0; i < m.mdim(); ++i) {
      m.set_right_row(i, a, right.row(i));
      Scalar s = (u.parity()[a] & m.mparity()[i] & 1) ? -f.one() : f.one();
      m.set_left_row(a, i, vec_scale(lop.row(i), s));
    }
  }
  return m;
}

inline RpmReport check_via_rpm(const SuperAlgebra& u, const SuperBimodule& circle,
                               const std::vector<Matrix>& rminus) {
  if (circle.algebra() != symmetrize(u))
    throw std::invalid_argument("check_via_rpm: circle module is not over symmetrize(u)");
  if (rminus.size() != u.dim()) throw std::invalid_argument("check_via_rpm: need one R- matrix per basis element");
  const Field& f = u.field();
  std::size_t md = circle.mdim();
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t i = 0; i < md; ++i)
      for (std::size_t k = 0; k < md; ++k)
        if (!rminus[a].at(i, k).is_zero() &&
            ((u.parity()[a] ^ circle.mparity()[i]) != circle.mparity()[k]))
          throw std::invalid_argument("check_via_rpm: R- tensor violates grading");

  SuperBimodule assembled = assemble_from_rpm(u, circle, rminus);

  std::vector<Matrix> rp;
  for (std::size_t a = 0; a < u.dim(); ++a) rp.push_back(circle.right_op(u.basis_vec(a)));
  auto rp_of = [&](const Vec& x) {
    Matrix m(md, md, f);
    for (std::size_t a = 0; a < u.dim(); ++a)
      if (!x[a].is_zero()) m = m + x[a] * rp[a];
    return m;
  };
  auto rm_of = [&](const Vec& x) {
    Matrix m(md, md, f);
    for (std::size_t a = 0; a < u.dim(); ++a)
      if (!x[a].is_zero()) m = m + x[a] * rminus[a];
    return m;
  };

  CheckReport verdict = CheckReport::pass("rpm-bimodule");
  // (r+r-1), (r+r-2) on homogeneous basis pairs
  for (std::size_t a = 0; a < u.dim() && verdict.passed; ++a)
    for (std::size_t b = 0; b < u.dim() && verdict.passed; ++b) {
      Scalar s = (u.parity()[a] & u.parity()[b] & 1) ? -f.one() : f.one();
      Matrix lhs1 = rp[a] * rminus[b] - s * (rminus[b] * rp[a]);
      Matrix rhs1 = f.of(1, 2) * rp_of(u.bracket(u.basis_vec(a), u.basis_vec(b)));
      if (lhs1 != rhs1) {
        verdict = CheckReport::fail("rpm-bimodule", {a, b}, (lhs1 - rhs1).flatten(), "(r+r-1) fails");
        break;
      }
      Matrix lhs2 = rminus[a] * rp[b] + s * (rminus[b] * rp[a]);
      Matrix rhs2 = rm_of(u.circle(u.basis_vec(a), u.basis_vec(b)));
      if (lhs2 != rhs2) {
        verdict = CheckReport::fail("rpm-bimodule", {a, b}, (lhs2 - rhs2).flatten(), "(r+r-2) fails");
        break;
      }
    }
  // R+ is a Jordan representation of symmetrize(u)
  if (verdict.passed) {
    CheckReport jr = check_jordan_bimodule(circle.algebra(), circle);
    if (!jr.passed)
      verdict = CheckReport::fail("rpm-bimodule", jr.witness->indices, jr.witness->residual,
                                  "R+ is not a Jordan representation: " + jr.witness->detail);
  }
  CheckReport sne = check_ncj_bimodule(u, assembled);
  if (sne.passed != verdict.passed)
    throw std::logic_error("check_via_rpm: R+/R- route disagrees with the split-null-extension route");
  return RpmReport{std::move(verdict), std::move(assembled)};
}

/// Mod(m): least action-invariant subspace containing m.
inline Subspace submodule_generated(const SuperBimodule& m, const Vec& gen) {
  const SuperAlgebra& a = m.algebra();
  Subspace s = Subspace::span({gen}, m.mdim(), m.field());
  std::deque<Vec> work;
  if (!is_zero_vec(gen)) work.push_back(gen);
  while (!work.empty()) {
    Vec v = work.front();
    work.pop_front();
    for (std::size_t x = 0; x < a.dim(); ++x) {
      for (Vec img : {m.act_right(v, a.basis_vec(x)), m.act_left(a.basis_vec(x), v)}) {
        if (!s.contains(img)) {
          s = s.sum(Subspace::span({img}, m.mdim(), m.field()));
          work.push_back(img);
        }
      }
    }
  }
  s.grade(m.mparity());
  return s;
}

/// Echelonized basis of the unital multiplication envelope: the span of the
/// identity and all words in the action operators, closed under composition.
inline std::vector<Matrix> envelope(const SuperBimodule& m) {
  const SuperAlgebra& a = m.algebra();
  std::size_t md = m.mdim();
  std::vector<Matrix> gens;
  for (std::size_t x = 0; x < a.dim(); ++x) {
    gens.push_back(m.right_op(a.basis_vec(x)));
    gens.push_back(m.left_op(a.basis_vec(x)));
  }
  std::vector<Matrix> basis;
  Subspace span = Subspace::zero(md * md, m.field());
  std::deque<Matrix> work;
  auto add = [&](const Matrix& mat) {
    Vec flat = mat.flatten();
    if (span.contains(flat)) return;
    span = span.sum(Subspace::span({flat}, md * md, m.field()));
    basis.push_back(mat);
    work.push_back(mat);
  };
  add(Matrix::identity(md, m.field()));
  while (!work.empty()) {
    Matrix w = work.front();
    work.pop_front();
    for (const Matrix& g : gens) add(w * g);
  }
  return basis;
}

enum class Irreducibility { irreducible, reducible, undecided };

struct IrredVerdict {
  Irreducibility kind = Irreducibility::undecided;
  std::optional<Subspace> witness;  // proper nonzero submodule when reducible
  std::size_t envelope_dim = 0;
};

/// Deterministic scan order for submodule generators: basis vectors, then
/// e_i + e_j, then e_i - e_j (i < j).
inline std::vector<Vec> generator_scan_order(std::size_t md, const Field& f) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < md; ++i) out.push_back(unit_vec(md, i, f));
  for (std::size_t i = 0; i < md; ++i)
    for (std::size_t j = i + 1; j < md; ++j) out.push_back(vec_add(unit_vec(md, i, f), unit_vec(md, j, f)));
  for (std::size_t i = 0; i < md; ++i)
    for (std::size_t j = i + 1; j < md; ++j) out.push_back(vec_sub(unit_vec(md, i, f), unit_vec(md, j, f)));
  return out;
}

/// Absolute irreducibility via Burnside: envelope = full operator algebra.
inline IrredVerdict is_abs_irreducible(const SuperBimodule& m) {
  if (m.mdim() == 0) throw std::invalid_argument("is_abs_irreducible: empty module");
  IrredVerdict v;
  v.envelope_dim = envelope(m).size();
  if (v.envelope_dim == m.mdim() * m.mdim()) {
    v.kind = Irreducibility::irreducible;
    return v;
  }
  for (const Vec& gen : generator_scan_order(m.mdim(), m.field())) {
    Subspace s = submodule_generated(m, gen);
    if (s.dim() > 0 && s.dim() < m.mdim()) {
      v.kind = Irreducibility::reducible;
      v.witness = s;
      return v;
    }
  }
  v.kind = Irreducibility::undecided;
  return v;
}

/// Module restricted to an invariant graded subspace, in its basis.
inline SuperBimodule restrict_module(const SuperBimodule& m, const Subspace& s) {
  Subspace g = s;
  if (!g.grade(m.mparity())) throw std::invalid_argument("restrict_module: subspace not graded");
  std::vector<std::uint8_t> par(g.parities());
  SuperBimodule r(m.algebra(), par);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t x = 0; x < m.algebra().dim(); ++x) {
      auto right = solve_left(g.basis(), m.act_right(g.basis_row(i), m.algebra().basis_vec(x)));
      auto left = solve_left(g.basis(), m.act_left(m.algebra().basis_vec(x), g.basis_row(i)));
      if (!right || !left) throw std::invalid_argument("restrict_module: subspace not invariant");
      r.set_right_row(i, x, *right);
      for (std::size_t k = 0; k < g.dim(); ++k) r.set_left(x, i, k, (*left)[k]);
    }
  return r;
}

/// Intertwiner space Hom(M,N) of the declared parity shift: T with
/// Op^M_x T = (-1)^{shift p(x)} T Op^N_x for all basis x and both actions,
/// returned as a subspace of flattened mdim(M) x mdim(N) matrices.
inline Subspace intertwiners(const SuperBimodule& m, const SuperBimodule& n, int parity_shift) {
  if (m.algebra() != n.algebra()) throw std::invalid_argument("intertwiners: modules over different algebras");
  const SuperAlgebra& a = m.algebra();
  const Field& f = m.field();
  std::size_t rm = m.mdim(), rn = n.mdim();
  std::size_t unknowns = rm * rn;
  std::vector<Vec> eqs;  // each eq: coefficients per unknown
  auto eq_block = [&](const Matrix& opm, const Matrix& opn, const Scalar& s) {
    // opm * T - s * T * opn = 0, entry (i,j)
    for (std::size_t i = 0; i < rm; ++i)
      for (std::size_t j = 0; j < rn; ++j) {
        Vec row(unknowns, f.zero());
        for (std::size_t k = 0; k < rm; ++k) row[k * rn + j] += opm.at(i, k);
        for (std::size_t l = 0; l < rn; ++l) row[i * rn + l] -= s * opn.at(l, j);
        eqs.push_back(std::move(row));
      }
  };
  for (std::size_t x = 0; x < a.dim(); ++x) {
    Scalar s = ((parity_shift & a.parity()[x]) & 1) ? -f.one() : f.one();
    eq_block(m.right_op(a.basis_vec(x)), n.right_op(a.basis_vec(x)), s);
    eq_block(m.left_op(a.basis_vec(x)), n.left_op(a.basis_vec(x)), s);
  }
  // parity pattern: T[i][j] = 0 unless p_N(j) = p_M(i) + shift
  for (std::size_t i = 0; i < rm; ++i)
    for (std::size_t j = 0; j < rn; ++j)
      if ((m.mparity()[i] ^ (parity_shift & 1)) != n.mparity()[j]) {
        Vec row(unknowns, f.zero());
        row[i * rn + j] = f.one();
        eqs.push_back(std::move(row));
      }
  Matrix sys(unknowns, eqs.size(), f);
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (std::size_t u = 0; u < unknowns; ++u) sys.at(u, e) = eqs[e][u];
  return nullspace(sys);
}

inline std::optional<Matrix> find_module_isomorphism(const SuperBimodule& m, const SuperBimodule& n,
                                                     int parity_shift) {
  if (m.mdim() != n.mdim()) return std::nullopt;
  Subspace tw = intertwiners(m, n, parity_shift);
  const Field& f = m.field();
  std::size_t rn = n.mdim();
  auto unflatten = [&](const Vec& v) {
    Matrix t(m.mdim(), rn, f);
    for (std::size_t i = 0; i < m.mdim(); ++i)
      for (std::size_t j = 0; j < rn; ++j) t.at(i, j) = v[i * rn + j];
    return t;
  };
  for (std::size_t i = 0; i < tw.dim(); ++i) {
    Matrix t = unflatten(tw.basis_row(i));
    if (inverse(t)) return t;
  }
  for (std::size_t i = 0; i < tw.dim(); ++i)
    for (std::size_t j = i + 1; j < tw.dim(); ++j)
      for (int sgn : {1, -1}) {
        Vec comb = sgn > 0 ? vec_add(tw.basis_row(i), tw.basis_row(j)) : vec_sub(tw.basis_row(i), tw.basis_row(j));
        Matrix t = unflatten(comb);
        if (inverse(t)) return t;
      }
  return std::nullopt;
}

inline bool modules_isomorphic(const SuperBimodule& m, const SuperBimodule& n, int parity_shift) {
  return find_module_isomorphism(m, n, parity_shift).has_value();
}

struct ModuleSummand {
  Subspace space;             // inside the original module
  Irreducibility verdict;     // of the restricted module
  bool flagged_indecomposable_or_undetected = false;
};

namespace detail {

/// Invariant complement of W inside M via an even projection in the
/// commutant: pi with [pi, actions] = 0, im(pi) <= W, pi|_W = id.
inline std::optional<Subspace> invariant_complement(const SuperBimodule& m, const Subspace& w) {
  const SuperAlgebra& a = m.algebra();
  const Field& f = m.field();
  std::size_t md = m.mdim(), dw = w.dim();
  // pi[m][k] = sum_j alpha[m][j] * W[j][k]; unknowns alpha: md x dw
  std::size_t unknowns = md * dw;
  std::vector<Vec> eqs;
  std::vector<Scalar> rhs;
  std::vector<Matrix> ops;
  for (std::size_t x = 0; x < a.dim(); ++x) {
    ops.push_back(m.right_op(a.basis_vec(x)));
    ops.push_back(m.left_op(a.basis_vec(x)));
  }
  const Matrix& wb = w.basis();
  // commutation: op * pi = pi * op  <=>  for all i,k:
  //   sum_m op[i][m] alpha[m][j] W[j][k] = sum_j alpha[i][j] (W*op)[j][k]
  for (const Matrix& op : ops) {
    Matrix wop(dw, md, f);
    for (std::size_t j = 0; j < dw; ++j) wop.set_row(j, w.basis_row(j) * op);
    for (std::size_t i = 0; i < md; ++i)
      for (std::size_t k = 0; k < md; ++k) {
        Vec row(unknowns, f.zero());
        for (std::size_t mm = 0; mm < md; ++mm)
          for (std::size_t j = 0; j < dw; ++j)
            if (!op.at(i, mm).is_zero() && !wb.at(j, k).is_zero())
              row[mm * dw + j] += op.at(i, mm) * wb.at(j, k);
        for (std::size_t j = 0; j < dw; ++j) row[i * dw + j] -= wop.at(j, k);
        eqs.push_back(std::move(row));
        rhs.push_back(f.zero());
      }
  }
  // pi|_W = id: for each W basis row r: (W_r) * pi = W_r
  for (std::size_t r = 0; r < dw; ++r)
    for (std::size_t k = 0; k < md; ++k) {
      Vec row(unknowns, f.zero());
      for (std::size_t mm = 0; mm < md; ++mm)
        for (std::size_t j = 0; j < dw; ++j)
          if (!wb.at(r, mm).is_zero() && !wb.at(j, k).is_zero()) row[mm * dw + j] += wb.at(r, mm) * wb.at(j, k);
      eqs.push_back(std::move(row));
      rhs.push_back(wb.at(r, k));
    }
  Matrix sys(unknowns, eqs.size(), f);
  Vec target(eqs.size(), f.zero());
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    for (std::size_t u = 0; u < unknowns; ++u) sys.at(u, e) = eqs[e][u];
    target[e] = rhs[e];
  }
  auto alpha = solve_left(sys, target);
  if (!alpha) return std::nullopt;
  Matrix pi(md, md, f);
  for (std::size_t mm = 0; mm < md; ++mm) {
    Vec row(md, f.zero());
    for (std::size_t j = 0; j < dw; ++j) vec_axpy(row, (*alpha)[mm * dw + j], w.basis_row(j));
    pi.set_row(mm, row);
  }
  // complement = ker(pi), invariant because pi commutes with the actions
  Subspace comp = nullspace(pi);
  if (comp.dim() + dw != md) return std::nullopt;
  return comp;
}

inline void decompose_rec(const SuperBimodule& m, const Subspace& ambient_embed,
                          std::vector<ModuleSummand>& out) {
  // m: restricted module on ambient_embed (rows of ambient_embed = its basis)
  IrredVerdict iv = is_abs_irreducible(m);
  if (iv.kind == Irreducibility::irreducible) {
    out.push_back({ambient_embed, Irreducibility::irreducible, false});
    return;
  }
  // smallest proper generated submodule over the deterministic scan
  std::optional<Subspace> best;
  for (const Vec& gen : generator_scan_order(m.mdim(), m.field())) {
    Subspace s = submodule_generated(m, gen);
    if (s.dim() == 0 || s.dim() == m.mdim()) continue;
    if (!best || s.dim() < best->dim()) best = s;
  }
  std::optional<Subspace> comp = best ? invariant_complement(m, *best) : std::nullopt;
  if (!best || !comp) {
    out.push_back({ambient_embed, iv.kind, true});
    return;
  }
  auto lift = [&](const Subspace& s) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(s.basis_row(i) * ambient_embed.basis());
    return Subspace::span(rows, ambient_embed.ambient_dim(), m.field());
  };
  decompose_rec(restrict_module(m, *best), lift(*best), out);
  decompose_rec(restrict_module(m, *comp), lift(*comp), out);
}

}  // namespace detail

/// Greedy complete-reducibility decomposition. Summands always sum to M;
/// pieces that could not be split further and are not provably irreducible
/// carry the indecomposable-or-undetected flag.
inline std::vector<ModuleSummand> decompose(const SuperBimodule& m) {
  std::vector<ModuleSummand> out;
  detail::decompose_rec(m, Subspace::full(m.mdim(), m.field()), out);
  return out;
}

/// Peirce decomposition of a module w.r.t. an even idempotent of the
/// algebra, with the zero/special/unital classification relative to it.
struct ModulePeirce {
  std::array<Subspace, 3> component;
  std::array<Matrix, 3> projection;
  std::array<bool, 3> is_submodule = {false, false, false};
  bool m0_zero_action = false;  // all operators vanish on M_0
  bool m2_unital = false;       // L_e = R_e = id on M_2
};

inline ModulePeirce module_peirce(const SuperBimodule& m, const Vec& e) {
  const SuperAlgebra& a = m.algebra();
  if (!a.is_idempotent(e)) throw std::invalid_argument("module_peirce: not an even idempotent");
  const Field& f = m.field();
  Matrix t = m.left_op(e) + m.right_op(e);
  ModulePeirce mp;
  std::size_t total = 0;
  for (int i = 0; i < 3; ++i) {
    mp.component[i] = nullspace(t - (f.of(i) * Matrix::identity(m.mdim(), f)));
    mp.component[i].grade(m.mparity());
    mp.projection[i] = detail::peirce_projection_poly(t, i);
    total += mp.component[i].dim();
  }
  if (total != m.mdim()) throw std::domain_error("module_peirce: L_e + R_e not split by {0,1,2}");
  for (int i = 0; i < 3; ++i) {
    bool sub = true;
    for (std::size_t r = 0; r < mp.component[i].dim() && sub; ++r)
      for (std::size_t x = 0; x < a.dim() && sub; ++x) {
        sub = mp.component[i].contains(m.act_right(mp.component[i].basis_row(r), a.basis_vec(x))) &&
              mp.component[i].contains(m.act_left(a.basis_vec(x), mp.component[i].basis_row(r)));
      }
    mp.is_submodule[i] = sub;
  }
  bool zero0 = true;
  for (std::size_t r = 0; r < mp.component[0].dim() && zero0; ++r)
    for (std::size_t x = 0; x < a.dim() && zero0; ++x)
      zero0 = is_zero_vec(m.act_right(mp.component[0].basis_row(r), a.basis_vec(x))) &&
              is_zero_vec(m.act_left(a.basis_vec(x), mp.component[0].basis_row(r)));
  mp.m0_zero_action = zero0;
  bool unital2 = true;
  for (std::size_t r = 0; r < mp.component[2].dim() && unital2; ++r) {
    const Vec row = mp.component[2].basis_row(r);
    unital2 = m.act_right(row, e) == row && m.act_left(e, row) == row;
  }
  mp.m2_unital = unital2;
  return mp;
}

/// All families {R-_a} making a Jordan bimodule over a Jordan superalgebra
/// into a noncommutative Jordan one (the bracket on J is zero, so the
/// constraints (r+r-1)/(r+r-2) are linear in R-). Returns a basis of the
/// solution space; {0} means every noncommutative structure is Jordan.
inline std::vector<std::vector<Matrix>> ncj_rminus_space(const SuperBimodule& circle) {
  const SuperAlgebra& j = circle.algebra();
  const Field& f = j.field();
  std::size_t md = circle.mdim(), n = j.dim();
  std::vector<Matrix> rp;
  for (std::size_t a = 0; a < n; ++a) rp.push_back(circle.right_op(j.basis_vec(a)));

  // step 1: per-subscript solution of [R+_a, X_b] = 0 with the parity
  // pattern of p(b); unknowns are the admissible entries of X_b.
  std::vector<std::vector<Matrix>> kb(n);  // basis matrices per b
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < md; ++i)
      for (std::size_t k = 0; k < md; ++k)
        if ((circle.mparity()[i] ^ j.parity()[b]) == circle.mparity()[k]) slots.emplace_back(i, k);
    std::size_t un = slots.size();
    std::vector<Vec> eqs;
    for (std::size_t a = 0; a < n; ++a) {
      Scalar s = (j.parity()[a] & j.parity()[b] & 1) ? -f.one() : f.one();
      // R+_a X - s X R+_a = 0 at entry (i,k)
      for (std::size_t i = 0; i < md; ++i)
        for (std::size_t k = 0; k < md; ++k) {
          Vec row(un, f.zero());
          bool nonzero = false;
          for (std::size_t t = 0; t < un; ++t) {
            auto [si, sk] = slots[t];
            Scalar coef = f.zero();
            if (sk == k) coef += rp[a].at(i, si);
            if (si == i) coef -= s * rp[a].at(sk, k);
            if (!coef.is_zero()) nonzero = true;
            row[t] = coef;
          }
          if (nonzero) eqs.push_back(std::move(row));
        }
    }
    Matrix sys(un, eqs.size(), f);
    for (std::size_t e = 0; e < eqs.size(); ++e)
      for (std::size_t u2 = 0; u2 < un; ++u2) sys.at(u2, e) = eqs[e][u2];
    Subspace sol = nullspace(sys);
    for (std::size_t r = 0; r < sol.dim(); ++r) {
      Matrix x(md, md, f);
      for (std::size_t t = 0; t < un; ++t) x.at(slots[t].first, slots[t].second) = sol.basis_row(r)[t];
      kb[b].push_back(x);
    }
  }

  // step 2: impose (r+r-2) on the joint parameter vector.
  std::vector<std::pair<std::size_t, std::size_t>> params;  // (b, index in kb[b])
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t t = 0; t < kb[b].size(); ++t) params.emplace_back(b, t);
  std::size_t np = params.size();
  std::vector<Vec> eqs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Scalar s = (j.parity()[a] & j.parity()[b] & 1) ? -f.one() : f.one();
      Vec ab = j.circle(j.basis_vec(a), j.basis_vec(b));
      // residual contribution of each parameter, as a full matrix
      std::vector<Matrix> contrib(np, Matrix(md, md, f));
      for (std::size_t t = 0; t < np; ++t) {
        auto [pb, pt] = params[t];
        Matrix m(md, md, f);
        if (pb == a) m = m + kb[a][pt] * rp[b];
        if (pb == b) m = m + s * (kb[b][pt] * rp[a]);
        if (!ab[pb].is_zero()) m = m - ab[pb] * kb[pb][pt];
        contrib[t] = std::move(m);
      }
      for (std::size_t i = 0; i < md; ++i)
        for (std::size_t k = 0; k < md; ++k) {
          Vec row(np, f.zero());
          bool nonzero = false;
          for (std::size_t t = 0; t < np; ++t) {
            row[t] = contrib[t].at(i, k);
            nonzero = nonzero || !row[t].is_zero();
          }
          if (nonzero) eqs.push_back(std::move(row));
        }
    }
  Matrix sys(np, eqs.size(), f);
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (std::size_t u2 = 0; u2 < np; ++u2) sys.at(u2, e) = eqs[e][u2];
  Subspace sol = np == 0 ? Subspace::zero(0, f) : nullspace(sys);
  std::vector<std::vector<Matrix>> out;
  for (std::size_t r = 0; r < sol.dim(); ++r) {
    std::vector<Matrix> fam(n, Matrix(md, md, f));
    for (std::size_t t = 0; t < np; ++t) {
      auto [pb, pt] = params[t];
      if (!sol.basis_row(r)[t].is_zero()) fam[pb] = fam[pb] + sol.basis_row(r)[t] * kb[pb][pt];
    }
    out.push_back(std::move(fam));
  }
  return out;
}

}  // namespace ncj
