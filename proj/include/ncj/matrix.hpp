#pragma once

#include "ncj/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ncj {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(std::size_t n, const Field& f) { return Vec(n, f.zero()); }

inline Vec unit_vec(std::size_t n, std::size_t i, const Field& f) {
  Vec v(n, f.zero());
  v.at(i) = f.one();
  return v;
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec vec_scale(const Vec& a, const Scalar& c) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline void vec_axpy(Vec& acc, const Scalar& c, const Vec& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

/// Dense row-major matrix over one exact field. Vectors are rows and act
/// on the left: v -> v*M.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const Field& f)
      : rows_(rows), cols_(cols), field_(f), e_(rows * cols, f.zero()) {}

  static Matrix identity(std::size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field& f) {
    Matrix m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const { return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_); }
  void set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::set_row: size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }
  friend Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix r(a);
    for (auto& x : r.e_) x *= c;
    return r;
  }
  /// Composition for right-acting operators: v*(A*B) = (v*A)*B.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
    Matrix r(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b.at(k, j);
          if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  /// Flattened row-major copy (used when treating operators as vectors).
  Vec flatten() const { return e_; }

 private:
  void same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> e_;
};

inline Vec operator*(const Vec& v, const Matrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("Vec*Matrix: size mismatch");
  Vec r(m.cols(), m.field().zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& mij = m.at(i, j);
      if (!mij.is_zero()) r[j] += v[i] * mij;
    }
  }
  return r;
}

/// In-place reduced row echelon form; returns the pivot columns.
/// Zero rows are deleted, so afterwards rank == rows().
inline std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(r, m.cols(), m.field());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  m = out;
  return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

/// Some x with x*M = b, if consistent.
inline std::optional<Vec> solve_left(const Matrix& m, const Vec& b) {
  if (b.size() != m.cols()) throw std::invalid_argument("solve_left: b has wrong length");
  // Solve M^T x^T = b^T by eliminating on the augmented transpose.
  std::size_t n = m.rows();
  Matrix aug(m.cols(), n + 1, m.field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(j, i) = m.at(i, j);
  for (std::size_t j = 0; j < m.cols(); ++j) aug.at(j, n) = b[j];
  std::vector<std::size_t> piv = rref(aug);
  Vec x(n, m.field().zero());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == n) return std::nullopt;  // row (0..0|1): inconsistent
    x[piv[i]] = aug.at(i, n);
  }
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = m.field().one();
  }
  std::vector<std::size_t> piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix r(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

/// Characteristic polynomial coefficients c_0..c_n of x^n + ... via
/// Faddeev-LeVerrier: p(x) = sum c_k x^k with c_n = 1.
inline std::vector<Scalar> char_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: not square");
  std::size_t n = m.rows();
  const Field& f = m.field();
  if (f.characteristic() != 0 && f.characteristic() <= n)
    throw std::domain_error("char_poly: Faddeev-LeVerrier needs char 0 or > n");
  std::vector<Scalar> c(n + 1, f.zero());
  c[n] = f.one();
  Matrix mk = Matrix::identity(n, f);  // M_1 = I
  for (std::size_t k = 1; k <= n; ++k) {
    mk = (k == 1) ? m : m * mk;
    Scalar tr = f.zero();
    for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
    Scalar ck = tr / f.of(-static_cast<long long>(k));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
  }
  return c;
}

}  // namespace ncj
