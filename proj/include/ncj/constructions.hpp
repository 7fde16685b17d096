#pragma once

#include "ncj/superalgebra.hpp"

namespace ncj {

/// lambda (.) mu = 2*lambda*mu - lambda - mu + 1, the double-mutation law.
inline Scalar mutation_compose(const Scalar& lam, const Scalar& mu) {
  const Field f = lam.field();
  return f.of(2) * lam * mu - lam - mu + f.one();
}

/// The mu with lambda (.) mu = 1; undefined at lambda = 1/2.
inline Scalar inverse_mutation(const Scalar& lam) {
  const Field f = lam.field();
  Scalar den = f.of(2) * lam - f.one();
  if (den.is_zero()) throw std::domain_error("inverse_mutation: lambda = 1/2 is not invertible");
  return lam / den;
}

/// x *_lambda y = lambda xy + (1-lambda)(-1)^{xy} yx on structure constants.
inline SuperAlgebra mutate(const SuperAlgebra& a, const Scalar& lam) {
  SuperAlgebra b(a.name() + "^(" + lam.str() + ")", a.field(), a.parity());
  const Scalar one = a.field().one();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Scalar s = (a.parity()[i] & a.parity()[j] & 1) ? -one : one;
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Scalar v = lam * a.c(i, j, k) + (one - lam) * s * a.c(j, i, k);
        if (!v.is_zero()) b.set_c(i, j, k, v);
      }
    }
  return b;
}

inline SuperAlgebra mutate(const SuperAlgebra& a, long long num, long long den = 1) {
  return mutate(a, a.field().of(num, den));
}

inline SuperAlgebra symmetrize(const SuperAlgebra& a) {
  SuperAlgebra b = mutate(a, a.field().of(1, 2));
  b.set_name(a.name() + "^(+)");
  return b;
}

inline SuperAlgebra opposite_algebra(const SuperAlgebra& a) {
  SuperAlgebra b = mutate(a, a.field().zero());
  b.set_name(a.name() + "^op");
  return b;
}

/// Same space with product [x,y] = xy - (-1)^{xy} yx (used as the bracket
/// tensor of the two-product view).
inline SuperAlgebra bracket_algebra(const SuperAlgebra& a) {
  SuperAlgebra b("[" + a.name() + "]", a.field(), a.parity());
  const Scalar one = a.field().one();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Scalar s = (a.parity()[i] & a.parity()[j] & 1) ? -one : one;
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Scalar v = a.c(i, j, k) - s * a.c(j, i, k);
        if (!v.is_zero()) b.set_c(i, j, k, v);
      }
    }
  return b;
}

/// Graded tensor product, (a(x)b)(a'(x)b') = (-1)^{p(a')p(b)} aa' (x) bb'.
/// Basis order is row-major: i(x)j -> i*dim(B) + j.
inline SuperAlgebra graded_tensor(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.field() != b.field()) throw std::invalid_argument("graded_tensor: field mismatch");
  std::size_t na = a.dim(), nb = b.dim();
  std::vector<std::uint8_t> par(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) par[i * nb + j] = a.parity()[i] ^ b.parity()[j];
  SuperAlgebra t(a.name() + "(x)" + b.name(), a.field(), par);
  const Scalar one = a.field().one();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t ip = 0; ip < na; ++ip)
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t jp = 0; jp < nb; ++jp) {
          Scalar sign = (a.parity()[ip] & b.parity()[j] & 1) ? -one : one;
          for (std::size_t k = 0; k < na; ++k) {
            const Scalar& ca = a.c(i, ip, k);
            if (ca.is_zero()) continue;
            for (std::size_t l = 0; l < nb; ++l) {
              const Scalar& cb = b.c(j, jp, l);
              if (!cb.is_zero()) t.add_c(i * nb + j, ip * nb + jp, k * nb + l, sign * ca * cb);
            }
          }
        }
  return t;
}

/// Adjoins an even unit at index 0 (so "1 - e" has stable coordinates).
inline SuperAlgebra unital_hull(const SuperAlgebra& a) {
  std::vector<std::uint8_t> par(a.dim() + 1, 0);
  for (std::size_t i = 0; i < a.dim(); ++i) par[i + 1] = a.parity()[i];
  SuperAlgebra h("hull(" + a.name() + ")", a.field(), par);
  h.set_c(0, 0, 0, a.field().one());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    h.set_c(0, i + 1, i + 1, a.field().one());
    h.set_c(i + 1, 0, i + 1, a.field().one());
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!a.c(i, j, k).is_zero()) h.set_c(i + 1, j + 1, k + 1, a.c(i, j, k));
  }
  return h;
}

}  // namespace ncj
