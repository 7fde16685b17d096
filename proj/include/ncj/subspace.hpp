#pragma once

#include "ncj/matrix.hpp"

#include <optional>
#include <vector>

namespace ncj {

/// A linear subspace given by its reduced-row-echelon basis, so equality of
/// subspaces is entrywise equality of bases. Optionally carries a parity per
/// basis row (set when the space is graded w.r.t. an ambient parity vector).
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  static Subspace zero(std::size_t ambient, const Field& f) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(0, ambient, f);
    return s;
  }

  static Subspace full(std::size_t ambient, const Field& f) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(ambient, f);
    return s;
  }

  static Subspace span(const std::vector<Vec>& gens, std::size_t ambient, const Field& f) {
    Matrix m = Matrix::from_rows(gens, ambient, f);
    rref(m);
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = m;
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const Field& field() const { return basis_.field(); }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
    Vec r = reduce(v);
    return is_zero_vec(r);
  }

  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_row(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  /// Residue of v after eliminating against the echelon basis.
  Vec reduce(const Vec& v) const {
    Vec r = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      std::size_t c = 0;
      while (c < ambient_ && basis_.at(i, c).is_zero()) ++c;
      if (c == ambient_ || r[c].is_zero()) continue;
      Scalar f = r[c];  // pivots are 1 in RREF
      for (std::size_t j = c; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
    }
    return r;
  }

  Subspace sum(const Subspace& other) const {
    check_ambient(other);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_row(i));
    for (std::size_t i = 0; i < other.dim(); ++i) rows.push_back(other.basis_row(i));
    return span(rows, ambient_, field());
  }

  Subspace intersect(const Subspace& other) const {
    check_ambient(other);
    // (u,v) with u*A - v*B = 0; intersection = span of u*A.
    std::size_t ra = dim(), rb = other.dim();
    Matrix stacked(ra + rb, ambient_, field());
    for (std::size_t i = 0; i < ra; ++i) stacked.set_row(i, basis_row(i));
    for (std::size_t i = 0; i < rb; ++i) stacked.set_row(ra + i, vec_scale(other.basis_row(i), -field().one()));
    // kernel of v -> v*stacked
    Subspace ker = kernel_of(stacked);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ker.dim(); ++i) {
      Vec uv = ker.basis_row(i);
      Vec x(ambient_, field().zero());
      for (std::size_t j = 0; j < ra; ++j) vec_axpy(x, uv[j], basis_row(j));
      rows.push_back(x);
    }
    return span(rows, ambient_, field());
  }

  /// Representatives completing `sub` to this space (pre: sub <= this).
  Subspace quotient_basis(const Subspace& sub) const {
    check_ambient(sub);
    if (!contains(sub)) throw std::invalid_argument("Subspace::quotient_basis: not a subspace");
    std::vector<Vec> reps;
    Subspace acc = sub;
    for (std::size_t i = 0; i < dim(); ++i) {
      Vec v = basis_row(i);
      if (!acc.contains(v)) {
        reps.push_back(v);
        acc = acc.sum(span({v}, ambient_, field()));
      }
    }
    return span(reps, ambient_, field());
  }

  /// Kernel of v -> v*M (rows of M live in the target space).
  static Subspace kernel_of(const Matrix& m) {
    std::size_t n = m.rows();
    const Field& f = m.field();
    // Row-reduce [M | I]; rows whose M-part vanished give the kernel.
    Matrix aug(n, m.cols() + n, f);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
      aug.at(i, m.cols() + i) = f.one();
    }
    // Eliminate on the M-columns only.
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < n; ++c) {
      std::size_t sel = r;
      while (sel < n && aug.at(sel, c).is_zero()) ++sel;
      if (sel == n) continue;
      if (sel != r)
        for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug.at(sel, j), aug.at(r, j));
      Scalar inv = aug.at(r, c).inverse();
      for (std::size_t j = 0; j < aug.cols(); ++j) aug.at(r, j) *= inv;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r || aug.at(i, c).is_zero()) continue;
        Scalar fac = aug.at(i, c);
        for (std::size_t j = 0; j < aug.cols(); ++j) aug.at(i, j) -= fac * aug.at(r, j);
      }
      ++r;
    }
    std::vector<Vec> rows;
    for (std::size_t i = r; i < n; ++i) {
      Vec v(n, f.zero());
      for (std::size_t j = 0; j < n; ++j) v[j] = aug.at(i, m.cols() + j);
      rows.push_back(v);
    }
    return span(rows, n, f);
  }

  /// Marks the space graded if every echelon row is parity-homogeneous
  /// w.r.t. the ambient parities; returns success.
  bool grade(const std::vector<std::uint8_t>& ambient_parity) {
    if (ambient_parity.size() != ambient_) throw std::invalid_argument("Subspace::grade: parity size");
    parities_.clear();
    for (std::size_t i = 0; i < dim(); ++i) {
      int par = -1;
      for (std::size_t j = 0; j < ambient_; ++j) {
        if (basis_.at(i, j).is_zero()) continue;
        if (par == -1) par = ambient_parity[j];
        else if (par != ambient_parity[j]) { parities_.clear(); graded_ = false; return false; }
      }
      parities_.push_back(par == -1 ? 0 : static_cast<std::uint8_t>(par));
    }
    graded_ = true;
    return true;
  }

  bool graded() const { return graded_; }
  const std::vector<std::uint8_t>& parities() const { return parities_; }

 private:
  void check_ambient(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient dim mismatch");
  }

  std::size_t ambient_;
  Matrix basis_;
  bool graded_ = false;
  std::vector<std::uint8_t> parities_;
};

/// Kernel of v -> v*M, echelonized.
inline Subspace nullspace(const Matrix& m) { return Subspace::kernel_of(m); }

}  // namespace ncj
