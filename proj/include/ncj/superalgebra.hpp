#pragma once

#include "ncj/matrix.hpp"
#include "ncj/report.hpp"
#include "ncj/subspace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncj {

enum class OperatorKind { L, R, Rplus, Rminus };

/// Finite-dimensional superalgebra over an exact field, given by structure
/// constants e_i e_j = sum_k c[i][j][k] e_k on a parity-graded basis.
///
/// Conventions (fixed project-wide):
///   * vectors are rows, operators act on the right: (y)R_x = y*x,
///     (y)L_x = (-1)^{p(x)p(y)} x*y, composition left-to-right;
///   * R_x^+ = (R_x + L_x)/2 and R_x^- = (R_x - L_x)/2, so
///     (y)R_x^+ = y o x and (y)R_x^- = [y,x]/2.
class SuperAlgebra {
 public:
  SuperAlgebra() : dim_(0) {}

  SuperAlgebra(std::string name, Field field, std::vector<std::uint8_t> parity)
      : name_(std::move(name)),
        field_(field),
        dim_(parity.size()),
        parity_(std::move(parity)),
        c_(dim_ * dim_ * dim_, field.zero()) {
    if (field_.characteristic() == 2) throw std::invalid_argument("SuperAlgebra: characteristic 2 rejected");
  }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::uint8_t>& parity() const { return parity_; }
  int parity_of_index(std::size_t i) const { return parity_[i]; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  void set_c(std::size_t i, std::size_t j, std::size_t k, Scalar v) {
    c_[(i * dim_ + j) * dim_ + k] = std::move(v);
  }
  void add_c(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    c_[(i * dim_ + j) * dim_ + k] += v;
  }
  const std::vector<Scalar>& tensor() const { return c_; }

  /// Grading compatibility: c[i][j][k] != 0 requires p(k) = p(i)+p(j).
  /// Returns the offending (i,j,k) if any.
  std::optional<std::array<std::size_t, 3>> grading_violation() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (!c(i, j, k).is_zero() && ((parity_[i] ^ parity_[j]) != parity_[k]))
            return std::array<std::size_t, 3>{i, j, k};
    return std::nullopt;
  }

  void validate_grading() const {
    if (auto v = grading_violation())
      throw std::invalid_argument(name_ + ": grading violation at c[" + std::to_string((*v)[0]) + "][" +
                                  std::to_string((*v)[1]) + "][" + std::to_string((*v)[2]) + "]");
  }

  Vec basis_vec(std::size_t i) const { return unit_vec(dim_, i, field_); }

  /// Parity of a homogeneous vector; nullopt if mixed. Zero counts as even.
  std::optional<int> parity_of(const Vec& v) const {
    int par = -1;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (v[i].is_zero()) continue;
      if (par == -1) par = parity_[i];
      else if (par != parity_[i]) return std::nullopt;
    }
    return par == -1 ? 0 : par;
  }

  Vec multiply(const Vec& u, const Vec& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw std::invalid_argument(name_ + ": multiply dim mismatch");
    Vec out(dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (v[j].is_zero()) continue;
        Scalar uv = u[i] * v[j];
        for (std::size_t k = 0; k < dim_; ++k) {
          const Scalar& ck = c(i, j, k);
          if (!ck.is_zero()) out[k] += uv * ck;
        }
      }
    }
    return out;
  }

  /// Right multiplication operator: rows are e_i * x. Linear in x.
  Matrix right_op(const Vec& x) const {
    Matrix m(dim_, dim_, field_);
    for (std::size_t i = 0; i < dim_; ++i) m.set_row(i, multiply(basis_vec(i), x));
    return m;
  }

  /// Left multiplication operator with the Koszul sign; x must be homogeneous.
  Matrix left_op(const Vec& x) const {
    auto px = parity_of(x);
    if (!px) throw std::invalid_argument(name_ + ": left_op needs a homogeneous argument");
    Matrix m(dim_, dim_, field_);
    for (std::size_t i = 0; i < dim_; ++i) {
      Vec r = multiply(x, basis_vec(i));
      if ((*px & parity_[i] & 1) != 0) r = vec_scale(r, -field_.one());
      m.set_row(i, r);
    }
    return m;
  }

  Matrix mult_operator(const Vec& x, OperatorKind kind) const {
    switch (kind) {
      case OperatorKind::R: return right_op(x);
      case OperatorKind::L: return left_op(x);
      case OperatorKind::Rplus: {
        Scalar h = field_.of(1, 2);
        return h * (right_op(x) + left_op(x));
      }
      case OperatorKind::Rminus: {
        Scalar h = field_.of(1, 2);
        return h * (right_op(x) - left_op(x));
      }
    }
    throw std::logic_error("mult_operator: bad kind");
  }

  /// Koszul sign (-1)^{p(u)p(v)} for homogeneous u, v.
  Scalar koszul(const Vec& u, const Vec& v) const {
    auto pu = parity_of(u), pv = parity_of(v);
    if (!pu || !pv) throw std::invalid_argument(name_ + ": koszul sign of non-homogeneous vector");
    return (*pu & *pv & 1) ? -field_.one() : field_.one();
  }

  /// u o v = (uv + (-1)^{uv} vu)/2, extended bilinearly over homogeneous parts.
  Vec circle(const Vec& u, const Vec& v) const { return derived(u, v, DerivedKind::Circle); }
  /// [u,v] = uv - (-1)^{uv} vu.
  Vec bracket(const Vec& u, const Vec& v) const { return derived(u, v, DerivedKind::Bracket); }
  /// u . v = uv + (-1)^{uv} vu.
  Vec bullet(const Vec& u, const Vec& v) const { return derived(u, v, DerivedKind::Bullet); }

  enum class DerivedKind { Circle, Bracket, Bullet };
  Vec derived(const Vec& u, const Vec& v, DerivedKind kind) const {
    Vec out(dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (v[j].is_zero()) continue;
        Scalar s = (parity_[i] & parity_[j] & 1) ? -field_.one() : field_.one();
        Scalar w = u[i] * v[j];
        for (std::size_t k = 0; k < dim_; ++k) {
          Scalar term = c(i, j, k);
          switch (kind) {
            case DerivedKind::Circle: term = (term + s * c(j, i, k)) * field_.of(1, 2); break;
            case DerivedKind::Bracket: term = term - s * c(j, i, k); break;
            case DerivedKind::Bullet: term = term + s * c(j, i, k); break;
          }
          if (!term.is_zero()) out[k] += w * term;
        }
      }
    }
    return out;
  }

  /// (u,v,w) = (uv)w - u(vw).
  Vec associator(const Vec& u, const Vec& v, const Vec& w) const {
    return vec_sub(multiply(multiply(u, v), w), multiply(u, multiply(v, w)));
  }

  bool is_idempotent(const Vec& e) const {
    if (is_zero_vec(e)) return false;
    auto p = parity_of(e);
    if (!p || *p != 0) return false;
    return multiply(e, e) == e;
  }

  /// Two-sided unit, if the algebra has one.
  std::optional<Vec> unit() const {
    // u with u*e_i = e_i and e_i*u = e_i for all i: linear system in u.
    Matrix sys(dim_, 2 * dim_ * dim_, field_);
    for (std::size_t a = 0; a < dim_; ++a) {
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
          sys.at(a, i * dim_ + k) = c(a, i, k);              // (u e_i)_k
          sys.at(a, dim_ * dim_ + i * dim_ + k) = c(i, a, k);  // (e_i u)_k
        }
    }
    Vec rhs(2 * dim_ * dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      rhs[i * dim_ + i] = field_.one();
      rhs[dim_ * dim_ + i * dim_ + i] = field_.one();
    }
    return solve_left(sys, rhs);
  }

  friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
    return a.dim_ == b.dim_ && a.parity_ == b.parity_ && a.field_ == b.field_ && a.c_ == b.c_;
  }
  friend bool operator!=(const SuperAlgebra& a, const SuperAlgebra& b) { return !(a == b); }

 private:
  std::string name_;
  Field field_;
  std::size_t dim_;
  std::vector<std::uint8_t> parity_;
  std::vector<Scalar> c_;
};

/// Structure-constant equality ("structure-equals" in reports).
inline bool structure_equal(const SuperAlgebra& a, const SuperAlgebra& b) { return a == b; }

inline bool is_associative(const SuperAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!is_zero_vec(a.associator(a.basis_vec(i), a.basis_vec(j), a.basis_vec(k)))) return false;
  return true;
}

inline bool is_supercommutative(const SuperAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!is_zero_vec(a.bracket(a.basis_vec(i), a.basis_vec(j)))) return false;
  return true;
}

}  // namespace ncj
