#pragma once

#include "ncj/representations.hpp"

namespace ncj {

/// Closure of span(S) under all left/right multiplications.
inline Subspace ideal_generated(const SuperAlgebra& a, const std::vector<Vec>& gens) {
  Subspace s = Subspace::span(gens, a.dim(), a.field());
  std::deque<Vec> work;
  for (std::size_t i = 0; i < s.dim(); ++i) work.push_back(s.basis_row(i));
  while (!work.empty()) {
    Vec v = work.front();
    work.pop_front();
    for (std::size_t x = 0; x < a.dim(); ++x) {
      for (Vec img : {a.multiply(v, a.basis_vec(x)), a.multiply(a.basis_vec(x), v)}) {
        if (!s.contains(img)) {
          s = s.sum(Subspace::span({img}, a.dim(), a.field()));
          work.push_back(img);
        }
      }
    }
  }
  s.grade(a.parity());
  return s;
}

enum class Simplicity { simple, not_simple, undecided };

struct SimplicityVerdict {
  Simplicity kind = Simplicity::undecided;
  std::optional<Subspace> witness_ideal;
  std::size_t envelope_dim = 0;
};

/// Absolute simplicity: A^2 != 0 and Reg(A) absolutely irreducible
/// (Burnside on the multiplication envelope).
inline SimplicityVerdict is_simple(const SuperAlgebra& a) {
  SimplicityVerdict v;
  bool square_zero = true;
  for (std::size_t i = 0; i < a.dim() && square_zero; ++i)
    for (std::size_t j = 0; j < a.dim() && square_zero; ++j)
      square_zero = is_zero_vec(a.multiply(a.basis_vec(i), a.basis_vec(j)));
  if (square_zero) {
    v.kind = Simplicity::not_simple;
    v.witness_ideal = Subspace::full(a.dim(), a.field());
    return v;
  }
  IrredVerdict iv = is_abs_irreducible(regular(a));
  v.envelope_dim = iv.envelope_dim;
  switch (iv.kind) {
    case Irreducibility::irreducible: v.kind = Simplicity::simple; break;
    case Irreducibility::reducible:
      v.kind = Simplicity::not_simple;
      v.witness_ideal = iv.witness;
      break;
    case Irreducibility::undecided: v.kind = Simplicity::undecided; break;
  }
  return v;
}

/// { a in U : [a, s] = 0 for all s in S }, via the stacked operators
/// [., s] = R_s - L_s for a homogeneous basis of S.
inline Subspace supercommutant(const SuperAlgebra& a, const Subspace& s_in) {
  Subspace s = s_in;
  if (!s.grade(a.parity())) throw std::invalid_argument("supercommutant: S must be graded");
  Subspace result = Subspace::full(a.dim(), a.field());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Matrix br = a.right_op(s.basis_row(i)) - a.left_op(s.basis_row(i));
    result = result.intersect(nullspace(br));
  }
  result.grade(a.parity());
  return result;
}

inline Subspace commutative_center(const SuperAlgebra& a) {
  return supercommutant(a, Subspace::full(a.dim(), a.field()));
}

/// Associative center: elements associating with everything, computed as the
/// intersection of the kernels of the three stacked associator maps.
inline Subspace nucleus(const SuperAlgebra& alg) {
  const Field& f = alg.field();
  Subspace result = Subspace::full(alg.dim(), f);
  for (std::size_t a = 0; a < alg.dim(); ++a)
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      Vec ea = alg.basis_vec(a), eb = alg.basis_vec(b);
      Scalar s = (alg.parity()[a] & alg.parity()[b] & 1) ? -f.one() : f.one();
      Matrix ra = alg.right_op(ea), rb = alg.right_op(eb);
      Matrix la = alg.left_op(ea), lb = alg.left_op(eb);
      // (n,a,b) = n (R_a R_b - R_{ab})
      result = result.intersect(nullspace(ra * rb - alg.right_op(alg.multiply(ea, eb))));
      // (a,n,b) = +-n (L_a R_b - (-1)^{ab} R_b L_a)
      result = result.intersect(nullspace(la * rb - s * (rb * la)));
      // (a,b,n) = +-n (L_{ab} - (-1)^{ab} L_b L_a)
      result = result.intersect(nullspace(alg.left_op(alg.multiply(ea, eb)) - s * (lb * la)));
      if (result.dim() == 0) return result;
    }
  result.grade(alg.parity());
  return result;
}

/// Ambient parity of operator slots: a matrix with support in slot (i,k)
/// moves parity p_i to p_k, so its parity is p_i xor p_k.
inline std::vector<std::uint8_t> operator_slot_parity(const std::vector<std::uint8_t>& from,
                                                      const std::vector<std::uint8_t>& to) {
  std::vector<std::uint8_t> par(from.size() * to.size());
  for (std::size_t i = 0; i < from.size(); ++i)
    for (std::size_t k = 0; k < to.size(); ++k) par[i * to.size() + k] = from[i] ^ to[k];
  return par;
}

namespace detail {
/// Super-Leibniz solutions d: A -> M of parity sigma, flattened n x mdim.
inline Subspace derivations_sigma(const SuperAlgebra& alg, const SuperBimodule& m, int sigma) {
  const Field& f = alg.field();
  std::size_t n = alg.dim(), md = m.mdim();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < md; ++k)
      if ((alg.parity()[i] ^ m.mparity()[k]) == (sigma & 1)) slots.emplace_back(i, k);
  std::size_t un = slots.size();
  std::vector<Vec> eqs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Scalar sg = (alg.parity()[b] & sigma & 1) ? -f.one() : f.one();
      // (e_a e_b)d - e_a (e_b d) - sg (e_a d) e_b = 0, entry l
      for (std::size_t l = 0; l < md; ++l) {
        Vec row(un, f.zero());
        bool nz = false;
        for (std::size_t t = 0; t < un; ++t) {
          auto [i, k] = slots[t];
          Scalar coef = f.zero();
          coef += alg.c(a, b, i) * (k == l ? f.one() : f.zero());
          if (i == b) coef -= m.left(a, k, l);
          if (i == a) coef -= sg * m.right(k, b, l);
          if (!coef.is_zero()) nz = true;
          row[t] = coef;
        }
        if (nz) eqs.push_back(std::move(row));
      }
    }
  Matrix sys(un, eqs.size(), f);
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (std::size_t u = 0; u < un; ++u) sys.at(u, e) = eqs[e][u];
  Subspace sol = nullspace(sys);
  // inflate back to full n*md coordinates
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < sol.dim(); ++r) {
    Vec v(n * md, f.zero());
    for (std::size_t t = 0; t < un; ++t) v[slots[t].first * md + slots[t].second] = sol.basis_row(r)[t];
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, n * md, f);
}
}  // namespace detail

/// Der(A, M): graded space of super-derivations A -> M, flattened n x mdim.
inline Subspace derivations_into(const SuperAlgebra& a, const SuperBimodule& m) {
  Subspace even = detail::derivations_sigma(a, m, 0);
  Subspace odd = detail::derivations_sigma(a, m, 1);
  Subspace all = even.sum(odd);
  all.grade(operator_slot_parity(a.parity(), m.mparity()));
  return all;
}

inline Subspace derivations(const SuperAlgebra& a) { return derivations_into(a, regular(a)); }

/// Span of the inner derivations [R_a, R_b] of a Jordan superalgebra.
inline Subspace inner_derivations(const SuperAlgebra& j) {
  if (!check_jordan(j).passed) throw std::invalid_argument("inner_derivations: input is not Jordan");
  const Field& f = j.field();
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < j.dim(); ++a)
    for (std::size_t b = 0; b < j.dim(); ++b) {
      Scalar s = (j.parity()[a] & j.parity()[b] & 1) ? -f.one() : f.one();
      Matrix ra = j.right_op(j.basis_vec(a)), rb = j.right_op(j.basis_vec(b));
      rows.push_back((ra * rb - s * (rb * ra)).flatten());
    }
  Subspace span = Subspace::span(rows, j.dim() * j.dim(), f);
  span.grade(operator_slot_parity(j.parity(), j.parity()));
  return span;
}

inline bool all_inner(const SuperAlgebra& j) {
  Subspace inner = inner_derivations(j);
  Subspace der = derivations(j);
  return inner == der;
}

/// Lie superalgebra structure on Der(A) under the graded operator bracket,
/// expressed in the computed (graded) derivation basis.
inline SuperAlgebra derivation_algebra(const SuperAlgebra& a) {
  Subspace der = derivations(a);
  if (!der.graded()) throw std::logic_error("derivation_algebra: derivation space failed to grade");
  std::size_t n = a.dim(), k = der.dim();
  const Field& f = a.field();
  auto unflatten = [&](const Vec& v) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
    return m;
  };
  SuperAlgebra lie("Der(" + a.name() + ")", f, der.parities());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Matrix di = unflatten(der.basis_row(i)), dj = unflatten(der.basis_row(j));
      Scalar s = (der.parities()[i] & der.parities()[j] & 1) ? -f.one() : f.one();
      Vec bracket = (di * dj - s * (dj * di)).flatten();
      auto coords = solve_left(der.basis(), bracket);
      if (!coords) throw std::logic_error("derivation_algebra: Der basis not closed under bracket (solver bug)");
      for (std::size_t t = 0; t < k; ++t) lie.set_c(i, j, t, (*coords)[t]);
    }
  lie.validate_grading();
  return lie;
}

/// verify: map rows are images of A's basis; must be even, invertible and
/// multiplicative on basis pairs.
inline CheckReport verify_isomorphism(const SuperAlgebra& a, const SuperAlgebra& b, const Matrix& map) {
  if (a.dim() != b.dim() || a.field() != b.field())
    throw std::invalid_argument("verify_isomorphism: dim/field mismatch");
  if (map.rows() != a.dim() || map.cols() != b.dim())
    throw std::invalid_argument("verify_isomorphism: map shape mismatch");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto par = b.parity_of(map.row(i));
    if (!par || (!is_zero_vec(map.row(i)) && *par != a.parity()[i]))
      return CheckReport::fail("isomorphism", {i}, map.row(i), "map is not even");
  }
  if (!inverse(map)) return CheckReport::fail("isomorphism", {}, Vec{}, "map not invertible");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec lhs = b.multiply(map.row(i), map.row(j));
      Vec rhs = a.multiply(a.basis_vec(i), a.basis_vec(j)) * map;
      if (lhs != rhs) return CheckReport::fail("isomorphism", {i, j}, vec_sub(lhs, rhs), "not multiplicative");
    }
  return CheckReport::pass("isomorphism");
}

enum class IsoStatus { found, none_found, requires_extension, unsupported_shape };

struct IsoSearchResult {
  IsoStatus status = IsoStatus::unsupported_shape;
  std::optional<Matrix> map;  // rows: images of A's basis in B
  std::string note;
};

namespace detail {

/// Normal-form data for the dim-4 parity-(2|2) family (Lemma 2.10 route).
struct DtNormalForm {
  bool defective = false;  // case 2: L_{e1} has a Jordan block at 1/2
  Scalar t, lambda;        // lambda meaningful in case 1 only
  Matrix basis;            // rows: (e1, e2, x, y) in ambient coordinates
};

/// All normalizations of a D_t-shaped algebra (over both idempotent
/// labelings and eigenvalue assignments). `blocked` is set when a square
/// root outside the field was needed.
inline std::vector<DtNormalForm> dt_normalize(const SuperAlgebra& a, bool& blocked) {
  std::vector<DtNormalForm> out;
  const Field& f = a.field();
  auto unit = a.unit();
  if (!unit) return out;
  // even part must be spanned by two orthogonal idempotents summing to 1
  std::vector<std::size_t> evens, odds;
  for (std::size_t i = 0; i < a.dim(); ++i) (a.parity()[i] ? odds : evens).push_back(i);
  if (evens.size() != 2 || odds.size() != 2) return out;
  // Nontrivial even idempotents via completing the square in the 2-dim
  // unital commutative even part: pick v independent of 1, v^2 = p + q v;
  // then e = (1 - q y)/2 + y v with y^2 (q^2 + 4p) = 1, so idempotents exist
  // exactly when d = p + q^2/4 is a nonzero square.
  std::vector<Vec> idems;
  {
    Vec v = a.basis_vec(evens[0]);
    if (Subspace::span({*unit}, a.dim(), f).contains(v)) v = a.basis_vec(evens[1]);
    auto coords = solve_left(Matrix::from_rows({*unit, v}, a.dim(), f), a.multiply(v, v));
    if (!coords) return out;  // even part not commutative-unital of this shape
    Scalar p = (*coords)[0], q = (*coords)[1];
    Scalar d = p + q * q / f.of(4);
    if (d.is_zero()) return out;  // no nontrivial idempotents at all
    auto c = f.sqrt(d);
    if (!c) {
      blocked = true;  // idempotents live in a quadratic extension
      return out;
    }
    for (int sgn : {1, -1}) {
      Scalar y = f.of(sgn) / (f.of(2) * *c);
      Scalar x = (f.one() - q * y) / f.of(2);
      Vec e = vec_add(vec_scale(*unit, x), vec_scale(v, y));
      if (a.is_idempotent(e)) idems.push_back(e);
    }
  }
  for (const Vec& e1 : idems) {
    Vec e2 = vec_sub(*unit, e1);
    if (!a.is_idempotent(e2)) continue;
    if (!is_zero_vec(a.multiply(e1, e2)) || !is_zero_vec(a.multiply(e2, e1))) continue;
    // odd part operators
    Matrix odd_basis(2, a.dim(), f);
    odd_basis.set_row(0, a.basis_vec(odds[0]));
    odd_basis.set_row(1, a.basis_vec(odds[1]));
    Subspace odd_space = Subspace::span({a.basis_vec(odds[0]), a.basis_vec(odds[1])}, a.dim(), f);
    Matrix w = restrict_operator(a.left_op(e1), odd_space);
    if (!(w.at(0, 0) + w.at(1, 1) == f.one())) continue;  // trace must be 1
    Scalar tr = f.one();
    Scalar det = w.at(0, 0) * w.at(1, 1) - w.at(0, 1) * w.at(1, 0);
    Scalar disc = tr * tr - f.of(4) * det;
    auto pairing = [&](const Vec& x, const Vec& y, Scalar& c1, Scalar& t, bool& ok) {
      Vec p = a.circle(x, y);
      auto coords = solve_left(Matrix::from_rows({e1, e2}, a.dim(), f), p);
      ok = coords.has_value();
      if (!ok) return;
      c1 = (*coords)[0];
      if (c1.is_zero()) {
        ok = false;
        return;
      }
      t = (*coords)[1] / c1;
    };
    auto lift = [&](const Vec& c) { return vec_add(vec_scale(odd_space.basis_row(0), c[0]),
                                                   vec_scale(odd_space.basis_row(1), c[1])); };
    auto root = f.sqrt(disc);
    if (!root) {
      blocked = true;  // irrational eigenvalues: out of rational reach
      continue;
    }
    if (!root->is_zero()) {
      // case 1: distinct eigenvalues lambda, 1 - lambda
      for (int pick : {0, 1}) {
        Scalar lam = (f.one() + (pick ? *root : -(*root))) / f.of(2);
        Matrix shift = w - (lam * Matrix::identity(2, f));
        Subspace eig = nullspace(shift);
        Matrix shift2 = w - ((f.one() - lam) * Matrix::identity(2, f));
        Subspace eig2 = nullspace(shift2);
        if (eig.dim() != 1 || eig2.dim() != 1) continue;
        Vec x = lift(eig.basis_row(0)), y = lift(eig2.basis_row(0));
        Scalar c1 = f.zero(), t = f.zero();
        bool ok = false;
        pairing(x, y, c1, t, ok);
        if (!ok) continue;
        x = vec_scale(x, c1.inverse());
        DtNormalForm nf;
        nf.defective = false;
        nf.t = t;
        nf.lambda = lam;
        nf.basis = Matrix::from_rows({e1, e2, x, y}, a.dim(), f);
        out.push_back(nf);
      }
    } else {
      Scalar lam = tr / f.of(2);  // = 1/2
      Matrix shift = w - (lam * Matrix::identity(2, f));
      if ((shift).is_zero()) {
        // scalar case: every odd vector is an eigenvector (Jordan algebra)
        Vec x = lift(Vec{f.one(), f.zero()}), y = lift(Vec{f.zero(), f.one()});
        Scalar c1 = f.zero(), t = f.zero();
        bool ok = false;
        pairing(x, y, c1, t, ok);
        if (!ok) {
          // swap the odd basis pairing direction
          pairing(y, x, c1, t, ok);
          if (!ok) continue;
          std::swap(x, y);
        }
        x = vec_scale(x, c1.inverse());
        DtNormalForm nf;
        nf.defective = false;
        nf.t = t;
        nf.lambda = lam;
        nf.basis = Matrix::from_rows({e1, e2, x, y}, a.dim(), f);
        out.push_back(nf);
      } else {
        // case 2: Jordan block; basis x with x(W - 1/2) = y != 0
        Vec xc = Vec{f.one(), f.zero()};
        Vec yc = xc * shift;
        if (is_zero_vec(yc)) {
          xc = Vec{f.zero(), f.one()};
          yc = xc * shift;
        }
        Vec x = lift(xc), y = lift(yc);
        Scalar c1 = f.zero(), t = f.zero();
        bool ok = false;
        pairing(x, y, c1, t, ok);
        if (!ok) continue;
        auto delta = f.sqrt(c1);
        if (!delta) {
          blocked = true;
          continue;
        }
        Scalar dinv = delta->inverse();
        DtNormalForm nf;
        nf.defective = true;
        nf.t = t;
        nf.lambda = lam;
        nf.basis = Matrix::from_rows({e1, e2, vec_scale(x, dinv), vec_scale(y, dinv)}, a.dim(), f);
        out.push_back(nf);
      }
    }
  }
  // keep only normalizations that genuinely match the reference table
  std::vector<DtNormalForm> checked;
  for (const auto& nf : out) {
    SuperAlgebra ref = nf.defective ? build_dt(nf.t, f.of(1, 2), f.one(), f.zero(), f)
                                    : build_dt(nf.t, nf.lambda, f.zero(), f.zero(), f);
    if (verify_isomorphism(ref, a, nf.basis).passed) checked.push_back(nf);
  }
  return checked;
}

}  // namespace detail

/// Small-dimension isomorphism search (dim <= 4): the D_t/K_3 normal-form
/// pattern, plus one- and two-dimensional all-even commutative algebras.
/// Square roots are taken only inside the field; otherwise the result is
/// requires_extension. The search is deliberately incomplete for other
/// shapes (unsupported_shape).
inline IsoSearchResult search_isomorphism_small(const SuperAlgebra& a, const SuperAlgebra& b) {
  IsoSearchResult res;
  if (a.field() != b.field()) throw std::invalid_argument("search_isomorphism_small: field mismatch");
  if (a.dim() != b.dim()) {
    res.status = IsoStatus::none_found;
    res.note = "dimension mismatch";
    return res;
  }
  if (a.dim() > 4) {
    res.note = "search limited to dim <= 4";
    return res;
  }
  if (a.parity() != std::vector<std::uint8_t>(a.dim(), 0) || b.parity() != std::vector<std::uint8_t>(b.dim(), 0)) {
    // graded shapes: only the 2|2 D_t-like family is implemented
    std::size_t ea = 0, eb = 0;
    for (auto p : a.parity()) ea += p == 0;
    for (auto p : b.parity()) eb += p == 0;
    if (a.dim() == 4 && ea == 2 && eb == 2) {
      bool blocked_a = false, blocked_b = false;
      auto nfa = detail::dt_normalize(a, blocked_a);
      auto nfb = detail::dt_normalize(b, blocked_b);
      for (const auto& na : nfa)
        for (const auto& nb : nfb) {
          if (na.defective != nb.defective || na.t != nb.t) continue;
          if (!na.defective && na.lambda != nb.lambda) continue;
          Matrix t = *inverse(na.basis) * nb.basis;
          if (verify_isomorphism(a, b, t).passed) {
            res.status = IsoStatus::found;
            res.map = t;
            return res;
          }
        }
      if (blocked_a || blocked_b) {
        res.status = IsoStatus::requires_extension;
        res.note = "normalization needs a square root outside the field";
      } else {
        res.status = IsoStatus::none_found;
        res.note = "normal forms do not match";
      }
      return res;
    }
    res.note = "unsupported graded shape";
    return res;
  }
  const Field& f = a.field();
  if (a.dim() == 1) {
    Scalar ca = a.c(0, 0, 0), cb = b.c(0, 0, 0);
    if (ca.is_zero() != cb.is_zero()) {
      res.status = IsoStatus::none_found;
      return res;
    }
    Matrix t(1, 1, f);
    t.at(0, 0) = ca.is_zero() ? f.one() : ca / cb;
    if (verify_isomorphism(a, b, t).passed) {
      res.status = IsoStatus::found;
      res.map = t;
    } else {
      res.status = IsoStatus::none_found;
    }
    return res;
  }
  if (a.dim() == 2) {
    // unital commutative pair: complete the square, compare discriminants
    auto ua = a.unit(), ub = b.unit();
    if (!ua || !ub || !is_supercommutative(a) || !is_supercommutative(b)) {
      res.note = "dim-2 search expects unital commutative algebras";
      return res;
    }
    auto square_free_part = [&](const SuperAlgebra& x, const Vec& un, Vec& vprime, Scalar& d) -> bool {
      // pick v independent of the unit
      Vec v = x.basis_vec(0);
      if (Subspace::span({un}, 2, f).contains(v)) v = x.basis_vec(1);
      // v^2 = p*1 + q*v
      auto coords = solve_left(Matrix::from_rows({un, v}, 2, f), x.multiply(v, v));
      if (!coords) return false;
      Scalar p = (*coords)[0], q = (*coords)[1];
      vprime = vec_sub(v, vec_scale(un, q / f.of(2)));
      d = p + q * q / f.of(4);
      return true;
    };
    Vec va, vb;
    Scalar da = f.zero(), db = f.zero();
    if (!square_free_part(a, *ua, va, da) || !square_free_part(b, *ub, vb, db)) {
      res.status = IsoStatus::none_found;
      return res;
    }
    if (da.is_zero() != db.is_zero()) {
      res.status = IsoStatus::none_found;
      return res;
    }
    Scalar c = f.one();
    if (!da.is_zero()) {
      auto r = f.sqrt(da / db);
      if (!r) {
        res.status = IsoStatus::requires_extension;
        res.note = "discriminant ratio is not a square";
        return res;
      }
      c = *r;
    }
    Matrix t(2, 2, f);
    // images of a's basis: write each as alpha*1_b + beta*c*v'_b using
    // a's coordinates relative to (1_a, v'_a)
    Matrix abasis = Matrix::from_rows({*ua, va}, 2, f);
    for (std::size_t i = 0; i < 2; ++i) {
      auto coords = solve_left(abasis, a.basis_vec(i));
      if (!coords) {
        res.status = IsoStatus::none_found;
        return res;
      }
      Vec img = vec_add(vec_scale(*ub, (*coords)[0]), vec_scale(vb, (*coords)[1] * c));
      t.set_row(i, img);
    }
    if (verify_isomorphism(a, b, t).passed) {
      res.status = IsoStatus::found;
      res.map = t;
    } else {
      res.status = IsoStatus::none_found;
    }
    return res;
  }
  res.note = "all-even shapes above dim 2 are not searched";
  return res;
}

/// Restriction of A to a multiplicatively closed graded subspace.
inline SuperAlgebra subalgebra_from(const SuperAlgebra& a, const Subspace& s_in, const std::string& name) {
  Subspace s = s_in;
  if (!s.grade(a.parity())) throw std::invalid_argument("subalgebra_from: subspace not graded");
  SuperAlgebra sub(name, a.field(), s.parities());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      Vec prod = a.multiply(s.basis_row(i), s.basis_row(j));
      auto coords = solve_left(s.basis(), prod);
      if (!coords) throw std::invalid_argument("subalgebra_from: subspace not multiplicatively closed");
      for (std::size_t k = 0; k < s.dim(); ++k) sub.set_c(i, j, k, (*coords)[k]);
    }
  sub.validate_grading();
  return sub;
}

struct KroneckerResult {
  bool ok = false;
  std::string diagnostic;
  SuperAlgebra z;   // supercommutant of the embedded copy, as an algebra
  Matrix iso;       // rows: images of Z (x) D basis in U
};

/// Kronecker factorization: U = Z (x) D where D is unitally embedded via
/// `embed` (rows: images of D's basis) and Z is the supercommutant of the
/// image. The embedded copy is supplied by the caller, not discovered.
inline KroneckerResult kronecker_factor(const SuperAlgebra& u, const Matrix& embed, const SuperAlgebra& d) {
  KroneckerResult res;
  const Field& f = u.field();
  if (embed.rows() != d.dim() || embed.cols() != u.dim())
    throw std::invalid_argument("kronecker_factor: embed shape mismatch");
  // embedding must be multiplicative, even, injective
  std::vector<Vec> img_rows;
  for (std::size_t i = 0; i < d.dim(); ++i) img_rows.push_back(embed.row(i));
  Subspace image = Subspace::span(img_rows, u.dim(), f);
  if (image.dim() != d.dim()) {
    res.diagnostic = "embedding not injective";
    return res;
  }
  for (std::size_t i = 0; i < d.dim(); ++i) {
    auto par = u.parity_of(embed.row(i));
    if (!par || *par != d.parity()[i]) {
      res.diagnostic = "embedding not even";
      return res;
    }
    for (std::size_t j = 0; j < d.dim(); ++j)
      if (u.multiply(embed.row(i), embed.row(j)) != d.multiply(d.basis_vec(i), d.basis_vec(j)) * embed) {
        res.diagnostic = "embedding not multiplicative";
        return res;
      }
  }
  auto unit_u = u.unit();
  auto unit_d = d.unit();
  if (!unit_u || !unit_d || *unit_d * embed != *unit_u) {
    res.diagnostic = "embedding not unital";
    return res;
  }
  Subspace z = supercommutant(u, image);
  // Z must be a subalgebra
  for (std::size_t i = 0; i < z.dim(); ++i)
    for (std::size_t j = 0; j < z.dim(); ++j)
      if (!z.contains(u.multiply(z.basis_row(i), z.basis_row(j)))) {
        res.diagnostic = "supercommutant not closed under multiplication";
        return res;
      }
  // Peirce cross-check: for an embedded non-unit even idempotent e, the
  // factorization setup has Z inside U_0(e) + U_2(e); report if the plain
  // supercommutant differs.
  std::string note;
  for (std::size_t i = 0; i < d.dim(); ++i) {
    Vec e = embed.row(i);
    if (!u.is_idempotent(e) || e == *unit_u) continue;
    PeirceDecomposition pd = peirce_decompose(u, e);
    Subspace z2 = z.intersect(pd.u(0).sum(pd.u(2)));
    if (z2 != z) {
      note = "supercommutant is not contained in U_0 + U_2 of the embedded idempotent";
      break;
    }
  }
  SuperAlgebra zalg = subalgebra_from(u, z, "Z");
  SuperAlgebra tensor = graded_tensor(zalg, d);
  if (tensor.dim() != u.dim()) {
    res.diagnostic = "dim Z * dim D != dim U" + (note.empty() ? "" : ("; " + note));
    res.z = zalg;
    return res;
  }
  Matrix eval(tensor.dim(), u.dim(), f);
  for (std::size_t i = 0; i < z.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j)
      eval.set_row(i * d.dim() + j, u.multiply(z.basis_row(i), embed.row(j)));
  CheckReport iso = verify_isomorphism(tensor, u, eval);
  if (!iso.passed) {
    res.diagnostic = "evaluation map is not an isomorphism: " + iso.summary() +
                     (note.empty() ? "" : ("; " + note));
    res.z = zalg;
    return res;
  }
  res.ok = true;
  res.z = zalg;
  res.iso = eval;
  res.diagnostic = note;
  return res;
}

}  // namespace ncj
