#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "projsing/errors.hpp"

namespace projsing {

using Rng = std::mt19937_64;

// Uniform integer in [0, bound) without relying on distribution internals,
// so seeded output is identical across standard libraries.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return x % bound;
}

// ---------------------------------------------------------------- Rational

class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(static_cast<long>(v)) {}
  Rational(long num, long den) : q_(num, den) {
    require(den != 0, "zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  Rational inverse() const {
    require(!is_zero(), "division by zero");
    return Rational(mpq_class(1 / q_));
  }
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    require(!o.is_zero(), "division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }

 private:
  mpq_class q_;
};

// ---------------------------------------------------------------- Fp

// Element of F_p with the modulus carried at runtime.  A modulus of 0 marks an
// untyped integer constant: Eigen builds Scalar(0) and Scalar(1) internally and
// those must combine with typed residues.  Library code only ever creates
// typed nonzero constants (through Field<Fp>), so untyped values stay tiny.
class Fp {
 public:
  Fp() = default;
  Fp(int v) : v_(static_cast<std::uint64_t>(static_cast<std::int64_t>(v))) {}
  Fp(std::int64_t v, std::uint64_t p) : v_(reduce(v, p)), p_(p) {}

  static Fp from_residue(std::uint64_t r, std::uint64_t p) {
    Fp x;
    x.v_ = r;
    x.p_ = p;
    return x;
  }

  bool typed() const { return p_ != 0; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t residue() const { return v_; }  // only meaningful when typed
  std::int64_t raw() const { return static_cast<std::int64_t>(v_); }
  bool is_zero() const { return v_ == 0; }
  std::uint64_t residue_mod(std::uint64_t p) const {
    if (p_ != 0) {
      if (p_ != p) fail(ErrorKind::Validation, "mixing different prime fields");
      return v_;
    }
    return reduce(raw(), p);
  }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  friend Fp operator+(const Fp& a, const Fp& b) {
    const std::uint64_t p = common(a, b);
    if (p == 0) return untyped(checked(a.raw(), b.raw(), '+'));
    std::uint64_t s = a.residue_mod(p) + b.residue_mod(p);
    if (s >= p) s -= p;
    return from_residue(s, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    const std::uint64_t p = common(a, b);
    if (p == 0) return untyped(checked(a.raw(), b.raw(), '-'));
    const std::uint64_t x = a.residue_mod(p), y = b.residue_mod(p);
    return from_residue(x >= y ? x - y : x + (p - y), p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    const std::uint64_t p = common(a, b);
    if (p == 0) return untyped(checked(a.raw(), b.raw(), '*'));
    return from_residue(mulmod(a.residue_mod(p), b.residue_mod(p), p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  friend Fp operator-(const Fp& a) {
    if (a.p_ == 0) return untyped(-a.raw());
    return from_residue(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_);
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    const std::uint64_t p = common(a, b);
    if (p == 0) return a.v_ == b.v_;
    return a.residue_mod(p) == b.residue_mod(p);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    if (p < (1ULL << 32)) return (a * b) % p;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  static std::uint64_t reduce(std::int64_t v, std::uint64_t p) {
    const std::int64_t m = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
  }

 private:
  static Fp untyped(std::int64_t v) {
    Fp x;
    x.v_ = static_cast<std::uint64_t>(v);
    return x;
  }
  static std::uint64_t common(const Fp& a, const Fp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) fail(ErrorKind::Validation, "mixing different prime fields");
    return a.p_ ? a.p_ : b.p_;
  }
  static std::int64_t checked(std::int64_t a, std::int64_t b, char op) {
    std::int64_t r;
    bool overflow = op == '+' ? __builtin_add_overflow(a, b, &r)
                  : op == '-' ? __builtin_sub_overflow(a, b, &r)
                              : __builtin_mul_overflow(a, b, &r);
    ensure(!overflow, "untyped prime-field constant overflowed");
    return r;
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// ---------------------------------------------------------------- helpers

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline Rational inverse(const Rational& x) { return x.inverse(); }
inline Fp inverse(const Fp& x) { return x.inverse(); }

// A typed constant living in the same field as x.
inline Rational like(const Rational&, std::int64_t k) { return Rational(static_cast<long>(k)); }
inline Fp like(const Fp& x, std::int64_t k) { return x.typed() ? Fp(k, x.modulus()) : Fp(static_cast<int>(k)); }

template <class S>
S power(S base, std::uint64_t e) {
  S result = like(base, 1);
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------- fields

// Runtime description of K as accepted by the CLI: "rational" or "Fp:<p>".
struct FieldSpec {
  bool rational = true;
  std::uint64_t p = 0;

  static FieldSpec parse(std::string_view text);
  std::string to_string() const;
};

template <class S>
class Field;

template <>
class Field<Rational> {
 public:
  using Scalar = Rational;
  static constexpr bool is_prime_field = false;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t k) const { return Rational(static_cast<long>(k)); }
  Rational parse(std::string_view text) const { return Rational::parse(text); }
  // Small integers: enough to avoid special positions while keeping heights low.
  Rational random(Rng& rng) const { return Rational(static_cast<long>(uniform_below(rng, 201)) - 100); }
  Rational random_nonzero(Rng& rng) const {
    Rational r;
    do r = random(rng); while (r.is_zero());
    return r;
  }
  FieldSpec spec() const { return FieldSpec{true, 0}; }
  std::uint64_t characteristic() const { return 0; }
};

template <>
class Field<Fp> {
 public:
  using Scalar = Fp;
  static constexpr bool is_prime_field = true;

  explicit Field(std::uint64_t p) : p_(p) {
    require(p > 2 && p < (1ULL << 62) && is_prime(p), "modulus must be an odd prime below 2^62");
  }
  Fp zero() const { return Fp::from_residue(0, p_); }
  Fp one() const { return Fp::from_residue(1, p_); }
  Fp from_int(std::int64_t k) const { return Fp(k, p_); }
  Fp from_residue(std::uint64_t r) const { return Fp::from_residue(r % p_, p_); }
  Fp parse(std::string_view text) const;
  Fp random(Rng& rng) const { return Fp::from_residue(uniform_below(rng, p_), p_); }
  Fp random_nonzero(Rng& rng) const { return Fp::from_residue(1 + uniform_below(rng, p_ - 1), p_); }
  FieldSpec spec() const { return FieldSpec{false, p_}; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t modulus() const { return p_; }

 private:
  std::uint64_t p_;
};

std::string to_string(const Rational& x);
std::string to_string(const Fp& x);
inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << to_string(x); }

// Calls fn(Field<Rational>) or fn(Field<Fp>) according to the runtime spec.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.rational) return fn(Field<Rational>{});
  return fn(Field<Fp>{spec.p});
}

}  // namespace projsing

namespace Eigen {

template <>
struct NumTraits<projsing::Rational> : GenericNumTraits<projsing::Rational> {
  using Real = projsing::Rational;
  using NonInteger = projsing::Rational;
  using Literal = projsing::Rational;
  using Nested = projsing::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 40,
    MulCost = 60
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<projsing::Fp> : GenericNumTraits<projsing::Fp> {
  using Real = projsing::Fp;
  using NonInteger = projsing::Fp;
  using Literal = projsing::Fp;
  using Nested = projsing::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 3,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
