#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "projsing/subspace.hpp"

namespace projsing {

using Exponent = std::vector<int>;

inline int weight(const Exponent& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

inline Exponent unit_vector(int r, int i, int k = 1) {
  Exponent e(static_cast<size_t>(r), 0);
  e[static_cast<size_t>(i)] = k;
  return e;
}

// All alpha in Z_{>=lo}^r with |alpha| == total (lexicographic order).
inline std::vector<Exponent> exponents_of_weight(int r, int total, int lo = 0) {
  std::vector<Exponent> out;
  Exponent cur(static_cast<size_t>(r), lo);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == r - 1) {
      cur[static_cast<size_t>(pos)] = lo + left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<size_t>(pos)] = lo + v;
      rec(pos + 1, left - v);
    }
  };
  const int left = total - lo * r;
  if (left >= 0) rec(0, left);
  return out;
}

// All alpha in Z_{>=lo}^r with |alpha| <= total.
inline std::vector<Exponent> exponents_up_to(int r, int total, int lo = 0) {
  std::vector<Exponent> out;
  for (int w = lo * r; w <= total; ++w) {
    auto layer = exponents_of_weight(r, w, lo);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

enum class GapKind { VectorSpace, AlgebraClosed };

// lambda(alpha) = dim S / (R + <t_i^alpha_i>), memoized.  The memo is guarded
// by a mutex, so concurrent evaluation on one instance is safe.
template <class S>
class GapFunction {
 public:
  GapFunction(SeriesSubspace<S> backend, GapKind kind)
      : backend_(std::make_shared<const SeriesSubspace<S>>(std::move(backend))), kind_(kind) {}
  GapFunction(const GapFunction& o) : backend_(o.backend_), kind_(o.kind_) {
    std::lock_guard<std::mutex> lock(o.mu_);
    memo_ = o.memo_;
  }
  GapFunction& operator=(const GapFunction& o) {
    if (this != &o) {
      std::scoped_lock lock(mu_, o.mu_);
      backend_ = o.backend_;
      kind_ = o.kind_;
      memo_ = o.memo_;
    }
    return *this;
  }

  int operator()(const Exponent& alpha) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(alpha);
      if (it != memo_.end()) return it->second;
    }
    const int v = quotient_dim(*backend_, alpha);
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(alpha, v);
    return v;
  }

  int arity() const { return backend_->ambient().branches; }
  int truncation() const { return backend_->ambient().truncation; }
  GapKind kind() const { return kind_; }
  const SeriesSubspace<S>& backend() const { return *backend_; }

 private:
  std::shared_ptr<const SeriesSubspace<S>> backend_;
  GapKind kind_;
  mutable std::mutex mu_;
  mutable std::map<Exponent, int> memo_;
};

template <class S>
int gap_eval(const GapFunction<S>& lambda, const Exponent& alpha) {
  return lambda(alpha);
}

// Smallest multiplicatively closed subspace containing R' (at the same N).
// New elements are only multiplied by the generators of R'; since 1 lies in
// R' up to rescaling, that closes under all products.
template <class S>
SeriesSubspace<S> close_algebra(const SeriesSubspace<S>& rprime) {
  require(rprime.contains_unit(), "close_algebra needs a unit in R' (no automatic adjunction)");
  const Ambient amb = rprime.ambient();
  const std::vector<TruncatedSeries<S>> gens = rprime.basis_series();
  EchelonBuilder<S> acc(amb.size());
  for (const auto& g : gens) acc.insert(g.coefficients());
  std::vector<TruncatedSeries<S>> frontier = gens;
  while (!frontier.empty()) {
    std::vector<TruncatedSeries<S>> fresh;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        TruncatedSeries<S> h = series_mul(f, g);
        if (acc.insert(h.coefficients())) fresh.push_back(std::move(h));
      }
    frontier = std::move(fresh);
  }
  return SeriesSubspace<S>(amb, acc.matrix());
}

template <class S>
class SemigroupView {
 public:
  explicit SemigroupView(GapFunction<S> source) : source_(std::move(source)) {
    require(source_.kind() == GapKind::AlgebraClosed, "semigroup view needs an algebra-closed gap function");
  }
  const GapFunction<S>& source() const { return source_; }

 private:
  GapFunction<S> source_;
};

// alpha[i] in Sigma  <=>  lambda(alpha) == lambda(alpha + e_i)
template <class S>
bool marked_in_semigroup(const SemigroupView<S>& sigma, const Exponent& alpha, int i) {
  const GapFunction<S>& lam = sigma.source();
  require(i >= 0 && i < lam.arity(), "branch index out of range");
  Exponent up = alpha;
  up[static_cast<size_t>(i)] += 1;
  return lam(alpha) == lam(up);
}

template <class S>
bool is_standard(const GapFunction<S>& lam) {
  const int r = lam.arity();
  for (int i = 0; i < r; ++i)
    if (lam(unit_vector(r, i)) != 0) return false;
  return lam(Exponent(static_cast<size_t>(r), 1)) == r - 1;
}

struct DegreeCertificate {
  int delta = 0;
  int conductor = 0;  // t_i^k lies in R for all k >= conductor
};

// delta = dim S/R, certified from the jet image at truncation N: if
// lambda(c,..,c) equals the full jet codimension then R contains t^c S mod t^N,
// and N >= 2c lifts that to t^c S subset R, so delta = lambda(c,..,c).
template <class S>
DegreeCertificate degree_certificate(const GapFunction<S>& lam) {
  require(lam.kind() == GapKind::AlgebraClosed, "degree needs an algebra-closed gap function");
  const int r = lam.arity(), n = lam.truncation();
  const auto diag = [r](int k) { return Exponent(static_cast<size_t>(r), k); };
  const int total = lam(diag(n));
  int c = 0;
  while (c < n && lam(diag(c)) != total) ++c;
  const int delta = lam(diag(c));
  if (c >= n || n < 2 * c || n < 2 * delta + 2)
    fail(ErrorKind::NotStabilized, "gap function not stabilized at truncation " + std::to_string(n));
  // corner check: lambda(N-1,...,N-1) is fixed by every step e_i
  for (int i = 0; i < r; ++i) {
    Exponent up = diag(n - 1);
    up[static_cast<size_t>(i)] = n;
    ensure(lam(diag(n - 1)) == lam(up), "corner not stable although conductor certified");
  }
  return {delta, c};
}

template <class S>
int degree(const GapFunction<S>& lam) {
  return degree_certificate(lam).delta;
}

// Key Lemma as a checkable property: if lambda <= gamma on |alpha| <= 2 gamma + 2
// then delta <= gamma.  Monotonicity reduces the hypothesis to the top layer.
template <class S>
bool key_lemma_holds(const GapFunction<S>& lam, int gamma) {
  require(gamma >= 0, "gamma must be non-negative");
  const int r = lam.arity();
  const int top = 2 * gamma + 2;
  if (lam.truncation() < top) fail(ErrorKind::NotStabilized, "truncation too small to decide the Key Lemma hypothesis");
  bool hypothesis = true;
  for (const Exponent& a : exponents_of_weight(r, top)) {
    bool fits = true;
    for (int x : a) fits = fits && x <= lam.truncation();
    if (fits && lam(a) > gamma) {
      hypothesis = false;
      break;
    }
  }
  if (!hypothesis) return true;
  return degree(lam) <= gamma;
}

// Builds R' at a requested truncation.
template <class S>
using SpaceBuilder = std::function<SeriesSubspace<S>(int truncation)>;

struct TruncationPolicy {
  int initial = 10;
  int cap = 64;
};

template <class S>
struct ClosedAlgebra {
  SeriesSubspace<S> algebra;
  GapFunction<S> gap;
  DegreeCertificate degree;
};

// Closes R' at growing truncation until the degree is certified.
template <class S>
ClosedAlgebra<S> stabilized_closure(const SpaceBuilder<S>& build, TruncationPolicy policy) {
  int n = std::max(2, policy.initial);
  std::string last;
  while (true) {
    SeriesSubspace<S> alg = close_algebra(build(n));
    GapFunction<S> gap(alg, GapKind::AlgebraClosed);
    try {
      DegreeCertificate cert = degree_certificate(gap);
      return ClosedAlgebra<S>{std::move(alg), std::move(gap), cert};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotStabilized) throw;
      last = e.what();
    }
    if (n >= policy.cap)
      fail(ErrorKind::StabilizationCap,
           "infinite or undecided codimension at truncation cap " + std::to_string(policy.cap) + " (" + last + ")");
    n = std::min(2 * n, policy.cap);
  }
}

}  // namespace projsing
