#include "projsing/field.hpp"

#include <charconv>

namespace projsing {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = Fp::mulmod(r, b, m);
    b = Fp::mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  require(valid_integer(num) && valid_integer(den), "not a rational number: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  if (den.front() == '+') den.remove_prefix(1);
  mpz_class n{std::string(num)}, d{std::string(den)};
  require(d != 0, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Fp Fp::inverse() const {
  if (p_ == 0) {
    const std::int64_t r = raw();
    require(r == 1 || r == -1, "inverse of an untyped prime-field constant");
    return *this;
  }
  require(v_ != 0, "division by zero");
  // extended Euclid on (v, p)
  __int128 a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    const __int128 q = a / b;
    __int128 t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  __int128 r = x0 % static_cast<__int128>(p_);
  if (r < 0) r += p_;
  return from_residue(static_cast<std::uint64_t>(r), p_);
}

Fp Fp::pow(std::uint64_t e) const {
  ensure(p_ != 0, "pow on untyped constant");
  return from_residue(powmod(v_, e, p_), p_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // this witness set is deterministic for all 64-bit n
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = Fp::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  text = trim(text);
  if (text == "rational" || text == "Q") return FieldSpec{true, 0};
  if (text.substr(0, 3) == "Fp:") {
    std::string_view digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    require(ec == std::errc() && ptr == digits.data() + digits.size(), "bad prime in field spec '" + std::string(text) + "'");
    require(p > 2 && p < (1ULL << 62) && is_prime(p), "field modulus must be an odd prime below 2^62");
    return FieldSpec{false, p};
  }
  fail(ErrorKind::Validation, "unknown field '" + std::string(text) + "' (expected rational or Fp:<p>)");
}

std::string FieldSpec::to_string() const { return rational ? "rational" : "Fp:" + std::to_string(p); }

Fp Field<Fp>::parse(std::string_view text) const {
  // integers or p/q fractions, reduced mod p
  const Rational q = Rational::parse(text);
  mpz_class num = q.value().get_num() % mpz_class(std::to_string(p_));
  mpz_class den = q.value().get_den() % mpz_class(std::to_string(p_));
  require(den != 0, "denominator divisible by the field characteristic");
  const Fp n(num.get_si(), p_), d(den.get_si(), p_);
  return n / d;
}

std::string to_string(const Rational& x) { return x.to_string(); }
std::string to_string(const Fp& x) {
  return x.typed() ? std::to_string(x.residue()) : std::to_string(x.raw());
}

}  // namespace projsing
