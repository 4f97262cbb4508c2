#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <optional>
#include <utility>
#include <vector>

#include "projsing/linalg.hpp"

namespace projsing {

// Dense univariate polynomial, coefficients from degree 0 upward, no
// trailing zeros.
template <class S>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<S> c) : c_(std::move(c)) { trim(); }

  static Poly constant(const S& c) { return Poly(std::vector<S>{c}); }
  static Poly monomial(const S& c, int k) {
    std::vector<S> v(static_cast<size_t>(k) + 1, like(c, 0));
    v.back() = c;
    return Poly(std::move(v));
  }
  // x - r
  static Poly linear_root(const S& r) { return Poly(std::vector<S>{-r, like(r, 1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const S& lead() const { return c_.back(); }
  S coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(k)] : S(); }
  const std::vector<S>& coefficients() const { return c_; }

  S operator()(const S& x) const {
    S acc = like(x, 0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<S> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<S> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<S> v(a.c_.size() + b.c_.size() - 1, like(a.lead(), 0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (projsing::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(const S& s, const Poly& a) {
    std::vector<S> v(a.c_);
    for (auto& x : v) x = s * x;
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<S> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = like(c_[i], static_cast<std::int64_t>(i)) * c_[i];
    return Poly(std::move(v));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return inverse(lead()) * *this;
  }

 private:
  void trim() {
    while (!c_.empty() && projsing::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<S> c_;
};

template <class S>
std::pair<Poly<S>, Poly<S>> divmod(const Poly<S>& a, const Poly<S>& b) {
  require(!b.is_zero(), "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<S>(), a};
  std::vector<S> r(a.coefficients());
  std::vector<S> q(static_cast<size_t>(a.degree() - b.degree() + 1), like(b.lead(), 0));
  const S inv = inverse(b.lead());
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const S f = r[static_cast<size_t>(k)] * inv;
    q[static_cast<size_t>(k - db)] = f;
    if (is_zero(f)) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k - db + j)] -= f * b.coefficients()[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(db));
  return {Poly<S>(std::move(q)), Poly<S>(std::move(r))};
}

template <class S>
Poly<S> operator%(const Poly<S>& a, const Poly<S>& b) {
  return divmod(a, b).second;
}

template <class S>
Poly<S> operator/(const Poly<S>& a, const Poly<S>& b) {
  return divmod(a, b).first;
}

// Monic gcd; gcd(0, 0) = 0.
template <class S>
Poly<S> gcd(Poly<S> a, Poly<S> b) {
  while (!b.is_zero()) {
    Poly<S> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class S>
Poly<S> pow_mod(Poly<S> base, std::uint64_t e, const Poly<S>& mod) {
  Poly<S> result = Poly<S>::constant(like(mod.lead(), 1)) % mod;
  base = base % mod;
  while (e) {
    if (e & 1) result = (result * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return result;
}

// Removes every factor (x - r); returns the multiplicity.
template <class S>
int divide_out_root(Poly<S>& f, const S& r) {
  int m = 0;
  const Poly<S> lin = Poly<S>::linear_root(r);
  while (!f.is_zero() && f.degree() > 0 && is_zero(f(r))) {
    f = f / lin;
    ++m;
  }
  return m;
}

// ------------------------------------------------------------ roots over F_p

namespace detail {

inline void split_linear(const Poly<Fp>& f, Rng& rng, const Field<Fp>& field, std::vector<Fp>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(-f.coeff(0) / f.coeff(1));
    return;
  }
  const std::uint64_t p = field.modulus();
  while (true) {
    const Poly<Fp> shift(std::vector<Fp>{field.random(rng), field.one()});
    const Poly<Fp> h = pow_mod(shift, (p - 1) / 2, f) - Poly<Fp>::constant(field.one());
    const Poly<Fp> g = gcd(h, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_linear(g, rng, field, out);
      split_linear(f / g, rng, field, out);
      return;
    }
  }
}

}  // namespace detail

// Distinct roots of f in F_p.  Small fields are scanned; otherwise
// gcd(x^p - x, f) is split by Cantor-Zassenhaus.
inline std::vector<Fp> roots_in_field(const Poly<Fp>& f, Rng& rng, const Field<Fp>& field) {
  std::vector<Fp> out;
  if (f.degree() <= 0) return out;
  const std::uint64_t p = field.modulus();
  if (p < 4096) {
    for (std::uint64_t x = 0; x < p; ++x)
      if (f(field.from_residue(x)).is_zero()) out.push_back(field.from_residue(x));
    return out;
  }
  const Poly<Fp> g = f.monic();
  const Poly<Fp> x = Poly<Fp>::monomial(field.one(), 1);
  const Poly<Fp> frob = pow_mod(x, p, g) - x;
  Poly<Fp> lin = gcd(frob, g);
  if (lin.degree() == 0) return out;
  if (is_zero(lin.coeff(0))) {
    out.push_back(field.zero());
    lin = lin / x;
  }
  detail::split_linear(lin, rng, field, out);
  std::sort(out.begin(), out.end(), [](const Fp& a, const Fp& b) { return a.residue() < b.residue(); });
  return out;
}

// ------------------------------------------------------------ determinants

// Gaussian elimination over a field.
template <class S>
S determinant(Matrix<S> m) {
  const Index n = m.rows();
  ensure(n == m.cols(), "determinant of a non-square matrix");
  S det = S(1);
  for (Index c = 0; c < n; ++c) {
    Index piv = -1;
    for (Index r = c; r < n; ++r)
      if (!is_zero(m(r, c))) {
        piv = r;
        break;
      }
    if (piv < 0) return S(0);
    if (piv != c) {
      m.row(piv).swap(m.row(c));
      det = -det;
    }
    det = det * m(c, c);
    const S inv = inverse(m(c, c));
    for (Index r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      const S f = m(r, c) * inv;
      for (Index j = c; j < n; ++j) m(r, j) = m(r, j) - f * m(c, j);
    }
  }
  return det;
}

// Fraction-free (Bareiss) determinant over K[a]; every division is exact.
template <class S>
Poly<S> determinant_bareiss(std::vector<std::vector<Poly<S>>> m) {
  const size_t n = m.size();
  if (n == 0) return Poly<S>();
  int sign = 1;
  Poly<S> prev;
  bool have_prev = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return Poly<S>();
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Poly<S> v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        if (have_prev) {
          auto [q, r] = divmod(v, prev);
          ensure(r.is_zero(), "inexact Bareiss step");
          v = std::move(q);
        }
        m[i][j] = std::move(v);
      }
    prev = m[k][k];
    have_prev = true;
  }
  Poly<S> d = m[n - 1][n - 1];
  return sign > 0 ? d : -d;
}

// ------------------------------------------------------------ bivariate

// G(a, b) = sum_k G[k](a) b^k
template <class S>
using BiPoly = std::vector<Poly<S>>;

template <class S>
int degree_in_a(const BiPoly<S>& g) {
  int d = -1;
  for (const auto& c : g) d = std::max(d, c.degree());
  return d;
}

// Sylvester matrix in b with the formal degrees given by the vector sizes.
template <class S, class T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& f, const std::vector<T>& g, const T& zero) {
  const int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
  const int size = m + n;
  std::vector<std::vector<T>> s(static_cast<size_t>(size), std::vector<T>(static_cast<size_t>(size), zero));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[static_cast<size_t>(i)][static_cast<size_t>(i + m - k)] = f[static_cast<size_t>(k)];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[static_cast<size_t>(n + i)][static_cast<size_t>(i + n - k)] = g[static_cast<size_t>(k)];
  return s;
}

// Newton interpolation through (x_k, y_k).
template <class S>
Poly<S> interpolate(const std::vector<S>& xs, std::vector<S> ys) {
  const size_t n = xs.size();
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  Poly<S> p = Poly<S>::constant(ys[n - 1]);
  for (size_t k = n - 1; k-- > 0;) p = p * Poly<S>(std::vector<S>{-xs[k], like(xs[k], 1)}) + Poly<S>::constant(ys[k]);
  return p;
}

// Res_b(f, g) as a polynomial in a.  Evaluation and interpolation when the
// field has more elements than the degree bound, Bareiss otherwise.
template <class S>
Poly<S> resultant_b(const BiPoly<S>& f, const BiPoly<S>& g, const Field<S>& field, bool force_bareiss = false) {
  require(f.size() >= 2 && g.size() >= 2, "resultant needs positive formal degree in b");
  const int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
  const int bound = m * std::max(0, degree_in_a(g)) + n * std::max(0, degree_in_a(f));
  const std::uint64_t ch = field.characteristic();
  if (!force_bareiss && (ch == 0 || ch > static_cast<std::uint64_t>(bound) + 1)) {
    std::vector<S> xs, ys;
    for (int k = 0; k <= bound; ++k) {
      const S a = field.from_int(k);
      std::vector<S> fv, gv;
      for (const auto& c : f) fv.push_back(c(a));
      for (const auto& c : g) gv.push_back(c(a));
      const auto syl = sylvester<S, S>(fv, gv, field.zero());
      Matrix<S> mat(m + n, m + n);
      for (int i = 0; i < m + n; ++i)
        for (int j = 0; j < m + n; ++j) mat(i, j) = syl[static_cast<size_t>(i)][static_cast<size_t>(j)];
      xs.push_back(a);
      ys.push_back(determinant<S>(mat));
    }
    return interpolate(xs, ys);
  }
  return determinant_bareiss<S>(sylvester<S, Poly<S>>(f, g, Poly<S>()));
}

// ------------------------------------------------------------ rationals

// a/b with |a|, |b| <= sqrt(q/2) and a = u b mod q, if one exists.
inline std::optional<Rational> rational_reconstruct(std::uint64_t u, std::uint64_t q) {
  using I = __int128;
  I r0 = static_cast<I>(q), r1 = static_cast<I>(u);
  I t0 = 0, t1 = 1;
  const double lim = std::sqrt(static_cast<double>(q) / 2.0);
  while (static_cast<double>(r1 < 0 ? -r1 : r1) > lim) {
    const I qt = r0 / r1;
    I tmp = r0 - qt * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - qt * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || static_cast<double>(t1 < 0 ? -t1 : t1) > lim) return std::nullopt;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  mpz_class num(std::to_string(static_cast<long long>(r1)));
  mpz_class den(std::to_string(static_cast<long long>(t1)));
  return Rational(mpq_class(num, den));
}

// Image of an integer-valued rational in F_q (denominator must be a unit).
inline Fp reduce_rational(const Rational& x, const Field<Fp>& f) {
  const mpz_class q(std::to_string(f.modulus()));
  mpz_class num = x.value().get_num() % q, den = x.value().get_den() % q;
  if (num < 0) num += q;
  require(den != 0, "denominator vanishes modulo the working prime");
  return f.from_residue(num.get_ui()) / f.from_residue(den.get_ui());
}

inline Poly<Fp> reduce_poly(const Poly<Rational>& p, const Field<Fp>& f) {
  std::vector<Fp> v;
  for (const auto& c : p.coefficients()) v.push_back(reduce_rational(c, f));
  return Poly<Fp>(std::move(v));
}

// Working primes for modular root finding over Q, all close to 2^61.
inline std::vector<std::uint64_t> working_primes(size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = (1ULL << 61) - 1; out.size() < count; p -= 2)
    if (is_prime(p)) out.push_back(p);
  return out;
}

// Distinct rational roots of f: roots modulo large primes, lifted by
// rational reconstruction and verified exactly.
inline std::vector<Rational> rational_roots(const Poly<Rational>& f, Rng& rng) {
  std::vector<Rational> out;
  if (f.degree() <= 0) return out;
  Poly<Rational> rest = f;
  for (std::uint64_t q : working_primes(3)) {
    if (rest.degree() <= 0) break;
    const Field<Fp> fq(q);
    Poly<Fp> red;
    try {
      red = reduce_poly(rest, fq);
    } catch (const Error&) {
      continue;
    }
    if (red.degree() != rest.degree()) continue;
    for (const Fp& r : roots_in_field(red, rng, fq)) {
      const auto cand = rational_reconstruct(r.residue(), q);
      if (!cand || !is_zero(rest(*cand))) continue;
      if (std::find(out.begin(), out.end(), *cand) == out.end()) out.push_back(*cand);
      divide_out_root(rest, *cand);
    }
  }
  std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return a.value() < b.value(); });
  return out;
}

}  // namespace projsing
