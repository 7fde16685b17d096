#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncj {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown when an exact computation would need a square root (or an
/// eigenvalue) that does not exist in the current field.
class FieldExtensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Scalar;

/// Base field descriptor: the rationals, or F_p for an odd prime p.
/// Characteristic 2 is rejected everywhere (the theory divides by 2 freely).
class Field {
 public:
  Field() : p_(0) {}

  static Field rationals() { return Field(0); }

  static Field prime(std::uint32_t p) {
    if (p < 3) throw std::invalid_argument("Field::prime: p must be an odd prime (char 2 rejected)");
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
    return Field(p);
  }

  /// Parses "q" or "p<N>", e.g. "p3".
  static Field parse(std::string_view s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.size() >= 2 && (s[0] == 'p' || s[0] == 'P')) {
      std::uint64_t v = 0;
      for (char c : s.substr(1)) {
        if (c < '0' || c > '9') throw std::invalid_argument("Field::parse: bad field spec '" + std::string(s) + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > 0x7fffffff) throw std::invalid_argument("Field::parse: modulus too large");
      }
      return prime(static_cast<std::uint32_t>(v));
    }
    throw std::invalid_argument("Field::parse: bad field spec '" + std::string(s) + "' (want q or p<N>)");
  }

  bool is_rational() const { return p_ == 0; }
  std::uint32_t modulus() const { return p_; }
  std::uint32_t characteristic() const { return p_; }

  std::string to_string() const { return p_ == 0 ? "q" : "p" + std::to_string(p_); }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

  inline Scalar zero() const;
  inline Scalar one() const;
  inline Scalar of(long long num, long long den = 1) const;
  inline Scalar parse_scalar(std::string_view s) const;
  /// Square root if it exists in the field (perfect squares over Q,
  /// quadratic residues over F_p); nullopt otherwise.
  inline std::optional<Scalar> sqrt(const Scalar& s) const;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Exact field element: a reduced rational, or a residue in [0,p).
/// Arithmetic never rounds; mixing fields throws.
class Scalar {
 public:
  Scalar() : q_(0), p_(0) {}

  static Scalar rational(BigRational v) { return Scalar(std::move(v), 0); }
  static Scalar residue(std::uint32_t r, std::uint32_t p) { return Scalar(BigRational(r % p), p); }

  Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
  bool is_rational_field() const { return p_ == 0; }
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const { return q_.is_zero(); }
  bool is_one() const { return q_ == 1; }

  const BigRational& value() const { return q_; }
  BigInt numerator() const { return boost::multiprecision::numerator(q_); }
  BigInt denominator() const { return boost::multiprecision::denominator(q_); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check(a, b);
    return Scalar::reduced(a.q_ + b.q_, a.p_ ? a.p_ : b.p_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    check(a, b);
    return Scalar::reduced(a.q_ - b.q_, a.p_ ? a.p_ : b.p_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check(a, b);
    return Scalar::reduced(a.q_ * b.q_, a.p_ ? a.p_ : b.p_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    check(a, b);
    if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return Scalar(a.q_ / b.q_, 0);
    std::uint32_t binv = mod_inverse(static_cast<std::uint32_t>(b.numerator()), p);
    return Scalar::reduced(a.q_ * binv, p);
  }
  Scalar operator-() const { return Scalar::reduced(-q_, p_); }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    check(a, b);
    return a.q_ == b.q_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const { return field().one() / *this; }

  /// "n" or "n/d" over Q; decimal residue over F_p.
  std::string str() const {
    if (p_ == 0) {
      std::string s = numerator().str();
      if (denominator() != 1) s += "/" + denominator().str();
      return s;
    }
    return numerator().str();
  }

 private:
  Scalar(BigRational q, std::uint32_t p) : q_(std::move(q)), p_(p) {}

  static Scalar reduced(BigRational v, std::uint32_t p) {
    if (p == 0) return Scalar(std::move(v), 0);
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    BigInt pn(p);
    num %= pn;
    if (num < 0) num += pn;
    if (den != 1) {
      BigInt d = den % pn;
      if (d < 0) d += pn;
      if (d == 0) throw std::domain_error("Scalar: denominator divisible by p");
      std::uint32_t dinv = mod_inverse(static_cast<std::uint32_t>(d), p);
      num = (num * dinv) % pn;
    }
    return Scalar(BigRational(num), p);
  }

  static std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("Scalar: division by zero mod p");
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
      tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
  }

  static void check(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_ && a.p_ != 0 && b.p_ != 0)
      throw std::invalid_argument("Scalar: mixed fields p" + std::to_string(a.p_) + " vs p" + std::to_string(b.p_));
    if ((a.p_ == 0) != (b.p_ == 0)) {
      // Mixing a rational with a residue is only sound if we know which
      // field the expression lives in; forbid it outright.
      throw std::invalid_argument("Scalar: mixed rational/prime-field operands");
    }
  }

  BigRational q_;
  std::uint32_t p_;

  friend class Field;
};

inline Scalar Field::zero() const { return of(0); }
inline Scalar Field::one() const { return of(1); }

inline Scalar Field::of(long long num, long long den) const {
  if (den == 0) throw std::domain_error("Field::of: zero denominator");
  if (den < 0) { den = -den; num = -num; }  // cpp_rational wants den > 0
  BigRational v{BigInt(num), BigInt(den)};
  if (p_ == 0) return Scalar::rational(std::move(v));
  return Scalar::reduced(std::move(v), p_);
}

inline Scalar Field::parse_scalar(std::string_view s) const {
  auto parse_int = [](std::string_view t) -> BigInt {
    if (t.empty()) throw std::invalid_argument("Field::parse_scalar: empty integer");
    bool neg = false;
    std::size_t i = 0;
    if (t[0] == '-' || t[0] == '+') { neg = t[0] == '-'; i = 1; }
    if (i == t.size()) throw std::invalid_argument("Field::parse_scalar: bare sign");
    BigInt v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9')
        throw std::invalid_argument("Field::parse_scalar: bad digit in '" + std::string(t) + "'");
      v = v * 10 + (t[i] - '0');
    }
    return neg ? BigInt(-v) : v;
  };
  auto slash = s.find('/');
  BigInt num, den = 1;
  if (slash == std::string_view::npos) {
    num = parse_int(s);
  } else {
    num = parse_int(s.substr(0, slash));
    den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Field::parse_scalar: zero denominator in '" + std::string(s) + "'");
  }
  if (den < 0) { den = -den; num = -num; }
  BigRational v{num, den};
  if (p_ == 0) return Scalar::rational(std::move(v));
  return Scalar::reduced(std::move(v), p_);
}

inline std::optional<Scalar> Field::sqrt(const Scalar& s) const {
  if ((p_ == 0) != s.is_rational_field() || (p_ != 0 && s.modulus() != p_))
    throw std::invalid_argument("Field::sqrt: scalar from different field");
  if (p_ == 0) {
    if (s.value() < 0) return std::nullopt;
    BigInt n = s.numerator(), d = s.denominator();
    BigInt rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Scalar::rational(BigRational(rn, rd));
  }
  std::uint64_t a = static_cast<std::uint64_t>(s.numerator());
  for (std::uint64_t x = 0; x < p_; ++x)
    if ((x * x) % p_ == a) return Scalar::residue(static_cast<std::uint32_t>(x), p_);
  return std::nullopt;
}

}  // namespace ncj
