#pragma once

#include "ncj/superalgebra.hpp"

namespace ncj {

/// Superbimodule over a superalgebra, as the two action tensors
///   left[a][m][m']  : e_a . e_m
///   right[m][a][m'] : e_m . e_a
/// Module operators follow the algebra conventions: (m)R_x = m.x,
/// (m)L_x = (-1)^{p(x)p(m)} x.m, and R_x^{+-} = (R_x +- L_x)/2.
class SuperBimodule {
 public:
  SuperBimodule() : mdim_(0) {}

  SuperBimodule(SuperAlgebra algebra, std::vector<std::uint8_t> mparity)
      : algebra_(std::move(algebra)),
        mdim_(mparity.size()),
        mparity_(std::move(mparity)),
        left_(algebra_.dim() * mdim_ * mdim_, algebra_.field().zero()),
        right_(mdim_ * algebra_.dim() * mdim_, algebra_.field().zero()) {}

  const SuperAlgebra& algebra() const { return algebra_; }
  std::size_t mdim() const { return mdim_; }
  const std::vector<std::uint8_t>& mparity() const { return mparity_; }
  const Field& field() const { return algebra_.field(); }

  const Scalar& left(std::size_t a, std::size_t m, std::size_t k) const {
    return left_[(a * mdim_ + m) * mdim_ + k];
  }
  const Scalar& right(std::size_t m, std::size_t a, std::size_t k) const {
    return right_[(m * algebra_.dim() + a) * mdim_ + k];
  }
  void set_left(std::size_t a, std::size_t m, std::size_t k, Scalar v) {
    left_[(a * mdim_ + m) * mdim_ + k] = std::move(v);
  }
  void set_right(std::size_t m, std::size_t a, std::size_t k, Scalar v) {
    right_[(m * algebra_.dim() + a) * mdim_ + k] = std::move(v);
  }
  void set_left_row(std::size_t a, std::size_t m, const Vec& v) {
    for (std::size_t k = 0; k < mdim_; ++k) set_left(a, m, k, v[k]);
  }
  void set_right_row(std::size_t m, std::size_t a, const Vec& v) {
    for (std::size_t k = 0; k < mdim_; ++k) set_right(m, a, k, v[k]);
  }

  /// a.m for algebra vector x and module vector m (bilinear).
  Vec act_left(const Vec& x, const Vec& m) const {
    Vec out(mdim_, field().zero());
    for (std::size_t a = 0; a < algebra_.dim(); ++a) {
      if (x[a].is_zero()) continue;
      for (std::size_t i = 0; i < mdim_; ++i) {
        if (m[i].is_zero()) continue;
        Scalar w = x[a] * m[i];
        for (std::size_t k = 0; k < mdim_; ++k)
          if (!left(a, i, k).is_zero()) out[k] += w * left(a, i, k);
      }
    }
    return out;
  }

  Vec act_right(const Vec& m, const Vec& x) const {
    Vec out(mdim_, field().zero());
    for (std::size_t i = 0; i < mdim_; ++i) {
      if (m[i].is_zero()) continue;
      for (std::size_t a = 0; a < algebra_.dim(); ++a) {
        if (x[a].is_zero()) continue;
        Scalar w = m[i] * x[a];
        for (std::size_t k = 0; k < mdim_; ++k)
          if (!right(i, a, k).is_zero()) out[k] += w * right(i, a, k);
      }
    }
    return out;
  }

  Matrix right_op(const Vec& x) const {
    Matrix r(mdim_, mdim_, field());
    for (std::size_t m = 0; m < mdim_; ++m) r.set_row(m, act_right(unit_vec(mdim_, m, field()), x));
    return r;
  }

  Matrix left_op(const Vec& x) const {
    auto px = algebra_.parity_of(x);
    if (!px) throw std::invalid_argument("SuperBimodule::left_op needs homogeneous x");
    Matrix r(mdim_, mdim_, field());
    for (std::size_t m = 0; m < mdim_; ++m) {
      Vec row = act_left(x, unit_vec(mdim_, m, field()));
      if ((*px & mparity_[m] & 1) != 0) row = vec_scale(row, -field().one());
      r.set_row(m, row);
    }
    return r;
  }

  Matrix op(const Vec& x, OperatorKind kind) const {
    switch (kind) {
      case OperatorKind::R: return right_op(x);
      case OperatorKind::L: return left_op(x);
      case OperatorKind::Rplus: return field().of(1, 2) * (right_op(x) + left_op(x));
      case OperatorKind::Rminus: return field().of(1, 2) * (right_op(x) - left_op(x));
    }
    throw std::logic_error("SuperBimodule::op: bad kind");
  }

  /// Grading: a.m and m.a land in parity p(a)+p(m).
  std::optional<std::array<std::size_t, 3>> grading_violation() const {
    for (std::size_t a = 0; a < algebra_.dim(); ++a)
      for (std::size_t m = 0; m < mdim_; ++m)
        for (std::size_t k = 0; k < mdim_; ++k) {
          bool ok = ((algebra_.parity()[a] ^ mparity_[m]) == mparity_[k]);
          if (!ok && (!left(a, m, k).is_zero() || !right(m, a, k).is_zero()))
            return std::array<std::size_t, 3>{a, m, k};
        }
    return std::nullopt;
  }

  void validate_grading() const {
    if (auto v = grading_violation())
      throw std::invalid_argument("SuperBimodule: grading violation at (a,m,k)=(" + std::to_string((*v)[0]) + "," +
                                  std::to_string((*v)[1]) + "," + std::to_string((*v)[2]) + ")");
  }

  /// Unital: L_1 = R_1 = id for the algebra unit (throws if no unit).
  bool is_unital() const {
    auto u = algebra_.unit();
    if (!u) throw std::domain_error("SuperBimodule::is_unital: algebra has no unit");
    return right_op(*u) == Matrix::identity(mdim_, field()) && left_op(*u) == Matrix::identity(mdim_, field());
  }

 private:
  SuperAlgebra algebra_;
  std::size_t mdim_;
  std::vector<std::uint8_t> mparity_;
  std::vector<Scalar> left_, right_;
};

inline SuperBimodule regular(const SuperAlgebra& a) {
  SuperBimodule m(a, a.parity());
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      m.set_left_row(x, i, a.multiply(a.basis_vec(x), a.basis_vec(i)));
      m.set_right_row(i, x, a.multiply(a.basis_vec(i), a.basis_vec(x)));
    }
  return m;
}

/// Parity-flipped module with a.m = am and m.a = (-1)^{p(a)} ma.
inline SuperBimodule opposite_module(const SuperBimodule& m) {
  std::vector<std::uint8_t> par(m.mparity());
  for (auto& p : par) p ^= 1;
  SuperBimodule o(m.algebra(), par);
  const Field& f = m.field();
  for (std::size_t a = 0; a < m.algebra().dim(); ++a) {
    Scalar s = (m.algebra().parity()[a] & 1) ? -f.one() : f.one();
    for (std::size_t i = 0; i < m.mdim(); ++i)
      for (std::size_t k = 0; k < m.mdim(); ++k) {
        o.set_left(a, i, k, m.left(a, i, k));
        o.set_right(i, a, k, s * m.right(i, a, k));
      }
  }
  return o;
}

inline SuperBimodule direct_sum(const SuperBimodule& m, const SuperBimodule& n) {
  if (m.algebra() != n.algebra()) throw std::invalid_argument("direct_sum: modules over different algebras");
  std::vector<std::uint8_t> par(m.mparity());
  par.insert(par.end(), n.mparity().begin(), n.mparity().end());
  SuperBimodule s(m.algebra(), par);
  for (std::size_t a = 0; a < m.algebra().dim(); ++a) {
    for (std::size_t i = 0; i < m.mdim(); ++i)
      for (std::size_t k = 0; k < m.mdim(); ++k) {
        s.set_left(a, i, k, m.left(a, i, k));
        s.set_right(i, a, k, m.right(i, a, k));
      }
    for (std::size_t i = 0; i < n.mdim(); ++i)
      for (std::size_t k = 0; k < n.mdim(); ++k) {
        s.set_left(a, m.mdim() + i, m.mdim() + k, n.left(a, i, k));
        s.set_right(m.mdim() + i, a, m.mdim() + k, n.right(i, a, k));
      }
  }
  return s;
}

/// Split null extension E = A + M, with M^2 = 0. Algebra block first.
inline SuperBimodule zero_module(const SuperAlgebra& a, std::vector<std::uint8_t> mparity) {
  return SuperBimodule(a, std::move(mparity));
}

inline SuperAlgebra split_null_extension(const SuperAlgebra& a, const SuperBimodule& m) {
  if (a != m.algebra()) throw std::invalid_argument("split_null_extension: module is over a different algebra");
  m.validate_grading();
  std::vector<std::uint8_t> par(a.parity());
  par.insert(par.end(), m.mparity().begin(), m.mparity().end());
  SuperAlgebra e("E(" + a.name() + ")", a.field(), par);
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.c(i, j, k).is_zero()) e.set_c(i, j, k, a.c(i, j, k));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < m.mdim(); ++i)
      for (std::size_t k = 0; k < m.mdim(); ++k) {
        if (!m.left(x, i, k).is_zero()) e.set_c(x, n + i, n + k, m.left(x, i, k));
        if (!m.right(i, x, k).is_zero()) e.set_c(n + i, x, n + k, m.right(i, x, k));
      }
  return e;
}

}  // namespace ncj
