#pragma once

#include <climits>
#include <string>
#include <vector>

#include "projsing/linalg.hpp"

namespace projsing {

// Shape of S = prod_i K[t_i]/(t_i^N): r branches, uniform truncation N.
struct Ambient {
  int branches = 1;
  int truncation = 1;
  Index size() const { return static_cast<Index>(branches) * truncation; }
  Index index(int branch, int exp) const { return static_cast<Index>(branch) * truncation + exp; }
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

// Per-branch order of vanishing; kInfinite when the branch is zero up to N.
struct ValuationVector {
  static constexpr int kInfinite = INT_MAX;
  std::vector<int> entries;

  bool infinite(size_t i) const { return entries[i] == kInfinite; }
  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
      if (i) s += ",";
      s += infinite(i) ? "inf" : std::to_string(entries[i]);
    }
    return s + ")";
  }
  friend bool operator==(const ValuationVector&, const ValuationVector&) = default;
};

template <class S>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(Ambient a) : amb_(a), c_(zero_vector<S>(a.size())) {
    require(a.branches >= 1 && a.truncation >= 1, "series ambient needs r >= 1 and N >= 1");
  }
  TruncatedSeries(Ambient a, Vector<S> coeffs) : amb_(a), c_(std::move(coeffs)) {
    require(c_.size() == a.size(), "coefficient vector does not match ambient");
  }

  // c * t_branch^exp, or zero when exp >= N
  static TruncatedSeries monomial(Ambient a, int branch, int exp, const S& c) {
    TruncatedSeries s(a);
    require(branch >= 0 && branch < a.branches, "branch index out of range");
    if (exp < a.truncation) s.c_(a.index(branch, exp)) = c;
    return s;
  }
  // (c, c, ..., c): the constant c in every branch
  static TruncatedSeries constant(Ambient a, const S& c) {
    TruncatedSeries s(a);
    for (int i = 0; i < a.branches; ++i) s.c_(a.index(i, 0)) = c;
    return s;
  }

  const Ambient& ambient() const { return amb_; }
  int branches() const { return amb_.branches; }
  int truncation() const { return amb_.truncation; }
  const S& coeff(int branch, int exp) const { return c_(amb_.index(branch, exp)); }
  S& coeff(int branch, int exp) { return c_(amb_.index(branch, exp)); }
  const Vector<S>& coefficients() const { return c_; }

  bool is_zero() const {
    for (Index i = 0; i < c_.size(); ++i)
      if (!projsing::is_zero(c_(i))) return false;
    return true;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check(o);
    c_ += o.c_;
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check(o);
    c_ -= o.c_;
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(const TruncatedSeries& a) { return TruncatedSeries(a.amb_, -a.c_); }
  friend TruncatedSeries operator*(const S& k, const TruncatedSeries& a) { return TruncatedSeries(a.amb_, a.c_ * k); }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.amb_ == b.amb_)) return false;
    for (Index i = 0; i < a.c_.size(); ++i)
      if (a.c_(i) != b.c_(i)) return false;
    return true;
  }

  void check(const TruncatedSeries& o) const {
    require(amb_ == o.amb_, "ambient mismatch between series");
  }

 private:
  Ambient amb_;
  Vector<S> c_;
};

template <class S>
TruncatedSeries<S> series_mul(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  a.check(b);
  const Ambient amb = a.ambient();
  TruncatedSeries<S> out(amb);
  for (int i = 0; i < amb.branches; ++i)
    for (int j = 0; j < amb.truncation; ++j) {
      const S& x = a.coeff(i, j);
      if (is_zero(x)) continue;
      for (int k = 0; j + k < amb.truncation; ++k) {
        const S& y = b.coeff(i, k);
        if (!is_zero(y)) out.coeff(i, j + k) += x * y;
      }
    }
  return out;
}

template <class S>
TruncatedSeries<S> operator*(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  return series_mul(a, b);
}

template <class S>
ValuationVector valuation(const TruncatedSeries<S>& a) {
  ValuationVector v;
  for (int i = 0; i < a.branches(); ++i) {
    int val = ValuationVector::kInfinite;
    for (int k = 0; k < a.truncation(); ++k)
      if (!is_zero(a.coeff(i, k))) {
        val = k;
        break;
      }
    v.entries.push_back(val);
  }
  return v;
}

// Inverse of a unit (all constant terms nonzero), branch by branch.
template <class S>
TruncatedSeries<S> series_inverse(const TruncatedSeries<S>& a) {
  const Ambient amb = a.ambient();
  TruncatedSeries<S> out(amb);
  for (int i = 0; i < amb.branches; ++i) {
    require(!is_zero(a.coeff(i, 0)), "series is not a unit");
    const S inv0 = inverse(a.coeff(i, 0));
    out.coeff(i, 0) = inv0;
    for (int k = 1; k < amb.truncation; ++k) {
      S acc = S();
      for (int j = 1; j <= k; ++j)
        if (!is_zero(a.coeff(i, j))) acc += a.coeff(i, j) * out.coeff(i, k - j);
      out.coeff(i, k) = -(acc * inv0);
    }
  }
  return out;
}

template <class S>
TruncatedSeries<S> series_pow(const TruncatedSeries<S>& a, unsigned e, const S& one) {
  TruncatedSeries<S> result = TruncatedSeries<S>::constant(a.ambient(), one);
  TruncatedSeries<S> base = a;
  while (e) {
    if (e & 1) result = series_mul(result, base);
    e >>= 1;
    if (e) base = series_mul(base, base);
  }
  return result;
}

// Same series at a smaller truncation.
template <class S>
TruncatedSeries<S> truncate(const TruncatedSeries<S>& a, int n) {
  require(n >= 1 && n <= a.truncation(), "cannot truncate above the current precision");
  const Ambient amb{a.branches(), n};
  TruncatedSeries<S> out(amb);
  for (int i = 0; i < amb.branches; ++i)
    for (int k = 0; k < n; ++k) out.coeff(i, k) = a.coeff(i, k);
  return out;
}

}  // namespace projsing
