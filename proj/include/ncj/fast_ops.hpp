#pragma once

// Identity scanning engine. The defining identities are homogeneous of fixed
// degree in the structure constants, so over Q they can be checked exactly on
// an integer-scaled copy of the tensor (multiply by the LCM of denominators);
// over F_p the residues are used directly. Both run on int64 with a static
// overflow bound; anything outside the bound falls back to exact Scalar
// arithmetic through the same templated scan.

#include "ncj/superalgebra.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace ncj::detail {

struct Int64Ring {
  using V = std::int64_t;
  std::uint32_t p = 0;  // 0: plain integers
  V zero() const { return 0; }
  V add(V a, V b) const { return norm(a + b); }
  V sub(V a, V b) const { return norm(a - b); }
  V mul(V a, V b) const { return norm(a * b); }
  V neg(V a) const { return norm(-a); }
  bool is_zero(V a) const { return a == 0; }
  V norm(V a) const {
    if (p == 0) return a;
    a %= static_cast<V>(p);
    return a < 0 ? a + p : a;
  }
};

struct ScalarRing {
  using V = Scalar;
  Field f;
  V zero() const { return f.zero(); }
  V add(const V& a, const V& b) const { return a + b; }
  V sub(const V& a, const V& b) const { return a - b; }
  V mul(const V& a, const V& b) const { return a * b; }
  V neg(const V& a) const { return -a; }
  bool is_zero(const V& a) const { return a.is_zero(); }
};

/// Scan context: tensor plus precomputed basis operators in ring values.
template <class Ring>
struct Ctx {
  Ring ring;
  std::size_t n = 0;
  std::vector<std::uint8_t> par;
  std::vector<typename Ring::V> t;                    // [(i*n+j)*n+k]
  std::vector<std::vector<typename Ring::V>> rop;     // rop[x]: flat n*n
  std::vector<std::vector<typename Ring::V>> lop;     // with Koszul signs

  using V = typename Ring::V;
  using Mat = std::vector<V>;

  const V& c(std::size_t i, std::size_t j, std::size_t k) const { return t[(i * n + j) * n + k]; }

  void build_ops() {
    rop.assign(n, Mat(n * n, ring.zero()));
    lop.assign(n, Mat(n * n, ring.zero()));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          rop[x][i * n + k] = c(i, x, k);
          V v = c(x, i, k);
          lop[x][i * n + k] = (par[x] & par[i] & 1) ? ring.neg(v) : v;
        }
  }

  Mat zero_mat() const { return Mat(n * n, ring.zero()); }

  void mat_mul(const Mat& a, const Mat& b, Mat& out) const {
    for (auto& v : out) v = ring.zero();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const V& aik = a[i * n + k];
        if (ring.is_zero(aik)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const V& bkj = b[k * n + j];
          if (!ring.is_zero(bkj)) out[i * n + j] = ring.add(out[i * n + j], ring.mul(aik, bkj));
        }
      }
  }

  /// out += s * a*b  (s = +-1)
  void mat_mul_acc(const Mat& a, const Mat& b, int s, Mat& out) const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const V& aik = a[i * n + k];
        if (ring.is_zero(aik)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const V& bkj = b[k * n + j];
          if (ring.is_zero(bkj)) continue;
          V term = ring.mul(aik, bkj);
          out[i * n + j] = s > 0 ? ring.add(out[i * n + j], term) : ring.sub(out[i * n + j], term);
        }
      }
  }

  /// out += s * R_v for a coefficient vector v (R is linear in its argument).
  void acc_rop_of_vec(const std::vector<V>& v, int s, Mat& out) const {
    for (std::size_t x = 0; x < n; ++x) {
      if (ring.is_zero(v[x])) continue;
      for (std::size_t e = 0; e < n * n; ++e) {
        if (ring.is_zero(rop[x][e])) continue;
        V term = ring.mul(v[x], rop[x][e]);
        out[e] = s > 0 ? ring.add(out[e], term) : ring.sub(out[e], term);
      }
    }
  }

  void acc_lop_of_vec(const std::vector<V>& v, int s, Mat& out) const {
    // v must be parity-homogeneous (true for products of basis elements).
    for (std::size_t x = 0; x < n; ++x) {
      if (ring.is_zero(v[x])) continue;
      for (std::size_t e = 0; e < n * n; ++e) {
        if (ring.is_zero(lop[x][e])) continue;
        V term = ring.mul(v[x], lop[x][e]);
        out[e] = s > 0 ? ring.add(out[e], term) : ring.sub(out[e], term);
      }
    }
  }

  std::vector<V> mul_basis(std::size_t i, std::size_t j) const {
    std::vector<V> out(n, ring.zero());
    for (std::size_t k = 0; k < n; ++k) out[k] = c(i, j, k);
    return out;
  }

  /// bullet: e_i . e_j = e_i e_j + (-1)^{ij} e_j e_i  (= 2 circle, integral)
  std::vector<V> bullet_basis(std::size_t i, std::size_t j) const {
    std::vector<V> out(n, ring.zero());
    int s = (par[i] & par[j] & 1) ? -1 : 1;
    for (std::size_t k = 0; k < n; ++k)
      out[k] = s > 0 ? ring.add(c(i, j, k), c(j, i, k)) : ring.sub(c(i, j, k), c(j, i, k));
    return out;
  }

  std::vector<V> mul_vec_basis(const std::vector<V>& u, std::size_t j) const {
    std::vector<V> out(n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (ring.is_zero(u[i])) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const V& ck = c(i, j, k);
        if (!ring.is_zero(ck)) out[k] = ring.add(out[k], ring.mul(u[i], ck));
      }
    }
    return out;
  }

  bool is_zero_mat(const Mat& m) const {
    for (const auto& v : m)
      if (!ring.is_zero(v)) return false;
    return true;
  }
};

inline Ctx<ScalarRing> make_scalar_ctx(const SuperAlgebra& a) {
  Ctx<ScalarRing> ctx{ScalarRing{a.field()}, a.dim(), a.parity(), a.tensor(), {}, {}};
  ctx.build_ops();
  return ctx;
}

/// Integer-scaled context. Over Q multiplies every entry by the common
/// denominator LCM; nullopt when the scaling or values exceed safe bounds.
inline std::optional<Ctx<Int64Ring>> make_int_ctx(const SuperAlgebra& a, int extra_degree = 3) {
  const std::int64_t kCap = 1000000;  // per-entry magnitude cap after scaling
  Ctx<Int64Ring> ctx;
  ctx.n = a.dim();
  ctx.par = a.parity();
  if (a.field().is_rational()) {
    ctx.ring.p = 0;
    BigInt lcm = 1;
    for (const auto& s : a.tensor()) {
      BigInt d = s.denominator();
      lcm = boost::multiprecision::lcm(lcm, d);
      if (lcm > kCap) return std::nullopt;
    }
    std::int64_t maxabs = 0;
    ctx.t.reserve(a.tensor().size());
    for (const auto& s : a.tensor()) {
      BigInt v = s.numerator() * (lcm / s.denominator());
      if (v > kCap || v < -kCap) return std::nullopt;
      std::int64_t iv = static_cast<std::int64_t>(v);
      maxabs = std::max(maxabs, iv < 0 ? -iv : iv);
      ctx.t.push_back(iv);
    }
    // worst-case entry in a degree-3 identity term (bullet doubling included):
    // ~8 * n^2 * (2*maxabs)^3
    long double bound = 8.0L * ctx.n * ctx.n;
    for (int d = 0; d < extra_degree; ++d) bound *= 2.0L * static_cast<long double>(std::max<std::int64_t>(maxabs, 2));
    if (bound > 4.0e18L) return std::nullopt;
  } else {
    ctx.ring.p = a.field().modulus();
    if (ctx.ring.p > 1u << 20) return std::nullopt;
    ctx.t.reserve(a.tensor().size());
    for (const auto& s : a.tensor()) ctx.t.push_back(static_cast<std::int64_t>(s.numerator()));
  }
  ctx.build_ops();
  return ctx;
}

// ---------------------------------------------------------------------------
// Identity scans. Each returns the first failing basis tuple in lexicographic
// order (with the symmetry-restricted loops re-expanded so the reported tuple
// is the lexicographically first overall), or nullopt when the identity holds.
// ---------------------------------------------------------------------------

template <class Ring>
std::optional<std::array<std::size_t, 2>> supercomm_scan(const Ctx<Ring>& ctx) {
  for (std::size_t a = 0; a < ctx.n; ++a)
    for (std::size_t b = 0; b < ctx.n; ++b) {
      int s = (ctx.par[a] & ctx.par[b] & 1) ? -1 : 1;
      for (std::size_t k = 0; k < ctx.n; ++k) {
        auto lhs = ctx.c(a, b, k);
        auto rhs = ctx.c(b, a, k);
        auto d = s > 0 ? ctx.ring.sub(lhs, rhs) : ctx.ring.add(lhs, rhs);
        if (!ctx.ring.is_zero(d)) return std::array<std::size_t, 2>{a, b};
      }
    }
  return std::nullopt;
}

/// (flex): [R_a, L_b] = [L_a, R_b], graded operator brackets.
template <class Ring>
std::optional<std::array<std::size_t, 2>> flex_scan(const Ctx<Ring>& ctx) {
  auto res = ctx.zero_mat();
  for (std::size_t a = 0; a < ctx.n; ++a)
    for (std::size_t b = 0; b < ctx.n; ++b) {
      int s = (ctx.par[a] & ctx.par[b] & 1) ? -1 : 1;
      for (auto& v : res) v = ctx.ring.zero();
      ctx.mat_mul_acc(ctx.rop[a], ctx.lop[b], +1, res);
      ctx.mat_mul_acc(ctx.lop[b], ctx.rop[a], -s, res);
      ctx.mat_mul_acc(ctx.lop[a], ctx.rop[b], -1, res);
      ctx.mat_mul_acc(ctx.rop[b], ctx.lop[a], +s, res);
      if (!ctx.is_zero_mat(res)) return std::array<std::size_t, 2>{a, b};
    }
  return std::nullopt;
}

/// Jordan operator identity on homogeneous triples (supercommutativity is a
/// separate scan). Uses the (a,c)-swap symmetry: scan a <= c.
template <class Ring>
std::optional<std::array<std::size_t, 3>> jordan_scan(const Ctx<Ring>& ctx) {
  auto res = ctx.zero_mat();
  auto tmp = ctx.zero_mat();
  for (std::size_t a = 0; a < ctx.n; ++a)
    for (std::size_t b = 0; b < ctx.n; ++b)
      for (std::size_t cc = a; cc < ctx.n; ++cc) {
        int pa = ctx.par[a], pb = ctx.par[b], pc = ctx.par[cc];
        int sabc = ((pa & pb) ^ (pa & pc) ^ (pb & pc)) & 1 ? -1 : 1;
        int sbc = (pb & pc & 1) ? -1 : 1;
        int sab = (pa & pb & 1) ? -1 : 1;
        for (auto& v : res) v = ctx.ring.zero();
        // R_a R_b R_c + (-1)^{a,b,c} R_c R_b R_a
        ctx.mat_mul(ctx.rop[a], ctx.rop[b], tmp);
        ctx.mat_mul_acc(tmp, ctx.rop[cc], +1, res);
        ctx.mat_mul(ctx.rop[cc], ctx.rop[b], tmp);
        ctx.mat_mul_acc(tmp, ctx.rop[a], sabc, res);
        // + (-1)^{bc} R_{(ac)b}
        ctx.acc_rop_of_vec(ctx.mul_vec_basis(ctx.mul_basis(a, cc), b), sbc, res);
        // - R_a R_{bc} - (-1)^{a,b,c} R_c R_{ba} - (-1)^{ab} R_b R_{ac}
        auto rbc = ctx.zero_mat();
        ctx.acc_rop_of_vec(ctx.mul_basis(b, cc), +1, rbc);
        ctx.mat_mul_acc(ctx.rop[a], rbc, -1, res);
        auto rba = ctx.zero_mat();
        ctx.acc_rop_of_vec(ctx.mul_basis(b, a), +1, rba);
        ctx.mat_mul_acc(ctx.rop[cc], rba, -sabc, res);
        auto rac = ctx.zero_mat();
        ctx.acc_rop_of_vec(ctx.mul_basis(a, cc), +1, rac);
        ctx.mat_mul_acc(ctx.rop[b], rac, -sab, res);
        if (!ctx.is_zero_mat(res)) return std::array<std::size_t, 3>{a, b, cc};
      }
  return std::nullopt;
}

/// (noncomm_jord_identity) scaled by 2 (bullet instead of circle):
/// [R_{a.b}, L_c] + (-1)^{a(b+c)}[R_{b.c}, L_a] + (-1)^{c(a+b)}[R_{c.a}, L_b] = 0.
/// Cyclic symmetry: scan triples with a = min(a,b,c).
template <class Ring>
std::optional<std::array<std::size_t, 3>> ncj_scan(const Ctx<Ring>& ctx) {
  auto res = ctx.zero_mat();
  auto rb = ctx.zero_mat();
  auto term = [&](std::size_t i, std::size_t j, std::size_t k, int outer) {
    // outer * [R_{e_i . e_j}, L_k] with bracket sign (-1)^{(p_i+p_j)p_k}
    for (auto& v : rb) v = ctx.ring.zero();
    ctx.acc_rop_of_vec(ctx.bullet_basis(i, j), +1, rb);
    int s = ((ctx.par[i] ^ ctx.par[j]) & ctx.par[k] & 1) ? -1 : 1;
    ctx.mat_mul_acc(rb, ctx.lop[k], outer, res);
    ctx.mat_mul_acc(ctx.lop[k], rb, -s * outer, res);
  };
  for (std::size_t a = 0; a < ctx.n; ++a)
    for (std::size_t b = a; b < ctx.n; ++b)
      for (std::size_t cc = a; cc < ctx.n; ++cc) {
        int pa = ctx.par[a], pb = ctx.par[b], pc = ctx.par[cc];
        for (auto& v : res) v = ctx.ring.zero();
        term(a, b, cc, 1);
        term(b, cc, a, (pa & (pb ^ pc) & 1) ? -1 : 1);
        term(cc, a, b, (pc & (pa ^ pb) & 1) ? -1 : 1);
        if (!ctx.is_zero_mat(res)) return std::array<std::size_t, 3>{a, b, cc};
      }
  return std::nullopt;
}

/// Generic Poisson bracket rule, J-products and a bracket tensor Br:
/// {a b, c} = (-1)^{bc} {a,c} b + a {b,c}.
template <class Ring>
std::optional<std::array<std::size_t, 3>> poisson_scan(const Ctx<Ring>& j, const Ctx<Ring>& br) {
  std::size_t n = j.n;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        int s = (j.par[b] & j.par[c] & 1) ? -1 : 1;
        // lhs: Br(J(a,b), c); rhs1: J(Br(a,c), b); rhs2: J(a, Br(b,c))
        std::vector<typename Ring::V> lhs(n, j.ring.zero()), r1(n, j.ring.zero()), r2(n, j.ring.zero());
        auto ab = j.mul_basis(a, b);
        for (std::size_t i = 0; i < n; ++i) {
          if (j.ring.is_zero(ab[i])) continue;
          for (std::size_t k = 0; k < n; ++k)
            lhs[k] = j.ring.add(lhs[k], j.ring.mul(ab[i], br.c(i, c, k)));
        }
        auto ac = br.mul_basis(a, c);
        for (std::size_t i = 0; i < n; ++i) {
          if (j.ring.is_zero(ac[i])) continue;
          for (std::size_t k = 0; k < n; ++k)
            r1[k] = j.ring.add(r1[k], j.ring.mul(ac[i], j.c(i, b, k)));
        }
        auto bc = br.mul_basis(b, c);
        for (std::size_t i = 0; i < n; ++i) {
          if (j.ring.is_zero(bc[i])) continue;
          for (std::size_t k = 0; k < n; ++k)
            r2[k] = j.ring.add(r2[k], j.ring.mul(j.c(a, i, k), bc[i]));
        }
        for (std::size_t k = 0; k < n; ++k) {
          auto rhs = s > 0 ? j.ring.add(r1[k], r2[k]) : j.ring.sub(r2[k], r1[k]);
          if (!j.ring.is_zero(j.ring.sub(lhs[k], rhs))) return std::array<std::size_t, 3>{a, b, c};
        }
      }
  return std::nullopt;
}

}  // namespace ncj::detail
