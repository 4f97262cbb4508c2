#pragma once

#include <concepts>
#include <map>
#include <string>
#include <vector>

#include "projsing/linalg.hpp"
#include "projsing/gap_function.hpp"

namespace projsing {

// (a : b) in P^1, stored as (a : 1) or (1 : 0).
template <class S>
class CurvePoint {
 public:
  CurvePoint(const S& a, const S& b) {
    require(!(is_zero(a) && is_zero(b)), "(0 : 0) is not a point");
    if (is_zero(b)) {
      a_ = like(a, 1);
      b_ = like(a, 0);
    } else {
      a_ = a / b;
      b_ = like(b, 1);
    }
  }
  static CurvePoint affine(const S& a) { return CurvePoint(a, like(a, 1)); }
  static CurvePoint infinity(const S& one) { return CurvePoint(one, one - one); }

  const S& a() const { return a_; }
  const S& b() const { return b_; }
  bool at_infinity() const { return is_zero(b_); }
  std::string to_string() const { return "(" + projsing::to_string(a_) + ":" + projsing::to_string(b_) + ")"; }

  friend bool operator==(const CurvePoint& p, const CurvePoint& q) { return p.a_ == q.a_ && p.b_ == q.b_; }
  friend bool operator!=(const CurvePoint& p, const CurvePoint& q) { return !(p == q); }

 private:
  S a_, b_;
};

// A curve model hands out, for each point P, the (dim W) x N table whose row k
// is the expansion of the k-th basis section in the local parameter at P.
// V^i(P) is spanned by the first i columns of that table.
template <class C>
concept CurveModel = requires(const C& c, const CurvePoint<typename C::Scalar>& p, int n) {
  { c.dim() } -> std::convertible_to<int>;
  { c.degree() } -> std::convertible_to<int>;
  { c.genus() } -> std::convertible_to<int>;
  { c.expansion(p, n) } -> std::same_as<Matrix<typename C::Scalar>>;
};

// X_d in P(V), W = degree-d binary forms with basis x^d, x^{d-1} y, ..., y^d.
// Local parameter t = x/y - a at (a : 1) and t = y/x at (1 : 0).
template <class S>
class RationalNormalCurve {
 public:
  using Scalar = S;
  RationalNormalCurve(int d, Field<S> field) : d_(d), field_(std::move(field)) {
    require(d >= 1, "degree must be positive");
  }
  int degree() const { return d_; }
  int dim() const { return d_ + 1; }
  int genus() const { return 0; }
  const Field<S>& field() const { return field_; }

  Matrix<S> expansion(const CurvePoint<S>& p, int n) const {
    Matrix<S> e = zero_matrix<S>(d_ + 1, n);
    if (p.at_infinity()) {
      for (int j = 0; j <= d_ && j < n; ++j) e(j, j) = field_.one();
      return e;
    }
    // x^{d-j} y^j -> (a + t)^{d-j}; binomials by Pascal so small p is safe
    std::vector<S> row{field_.one()};
    std::vector<std::vector<S>> pascal{row};
    for (int m = 1; m <= d_; ++m) {
      std::vector<S> next(static_cast<size_t>(m) + 1, field_.one());
      for (int k = 1; k < m; ++k) next[static_cast<size_t>(k)] = pascal.back()[static_cast<size_t>(k - 1)] + pascal.back()[static_cast<size_t>(k)];
      pascal.push_back(std::move(next));
    }
    for (int j = 0; j <= d_; ++j) {
      const int m = d_ - j;
      for (int k = 0; k <= m && k < n; ++k)
        e(j, k) = pascal[static_cast<size_t>(m)][static_cast<size_t>(k)] * power(p.a(), static_cast<std::uint64_t>(m - k));
    }
    return e;
  }

  // coordinates of nu_d(P) in the dual basis, up to the chart factor
  Vector<S> veronese(const CurvePoint<S>& p) const { return expansion(p, 1).col(0); }

 private:
  int d_;
  Field<S> field_;
};

// User-supplied model: expansion tables at finitely many points.
template <class S>
class ExpansionCurve {
 public:
  using Scalar = S;
  ExpansionCurve(int dim, int degree, int genus) : dim_(dim), degree_(degree), genus_(genus) {
    require(dim >= 1 && degree >= 1 && genus >= 0, "invalid curve model header");
  }
  void add_point(const CurvePoint<S>& p, Matrix<S> table) {
    require(table.rows() == dim_, "expansion table must have one row per basis section");
    for (const auto& [q, t] : tables_) require(q != p, "point listed twice in the curve model");
    tables_.emplace_back(p, std::move(table));
  }
  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int genus() const { return genus_; }
  const std::vector<std::pair<CurvePoint<S>, Matrix<S>>>& points() const { return tables_; }

  Matrix<S> expansion(const CurvePoint<S>& p, int n) const {
    for (const auto& [q, t] : tables_)
      if (q == p) {
        if (n > t.cols()) fail(ErrorKind::StabilizationCap, "precision " + std::to_string(n) + " exceeds the supplied expansion table");
        return t.leftCols(n);
      }
    fail(ErrorKind::Validation, "no expansion supplied at " + p.to_string());
  }

 private:
  int dim_, degree_, genus_;
  std::vector<std::pair<CurvePoint<S>, Matrix<S>>> tables_;
};

// V^i(P) as the row span of an i x dim matrix.
template <CurveModel C>
Matrix<typename C::Scalar> osc_subspace(const C& x, const CurvePoint<typename C::Scalar>& p, int i) {
  using S = typename C::Scalar;
  require(i >= 0 && i <= x.degree() + 1, "osculating order out of range");
  if (i == 0) return zero_matrix<S>(0, x.dim());
  return x.expansion(p, i).transpose();
}

template <class S>
class Multifiltration {
 public:
  Multifiltration(std::vector<CurvePoint<S>> points) : points_(std::move(points)) {
    for (size_t i = 0; i < points_.size(); ++i)
      for (size_t j = i + 1; j < points_.size(); ++j)
        require(points_[i] != points_[j], "multifiltration points must be distinct");
  }
  const std::vector<CurvePoint<S>>& points() const { return points_; }
  int arity() const { return static_cast<int>(points_.size()); }

  template <CurveModel C>
  Matrix<S> subspace(const C& x, const Exponent& alpha) const {
    require(static_cast<int>(alpha.size()) == arity(), "exponent arity does not match the number of points");
    Matrix<S> m = zero_matrix<S>(0, x.dim());
    for (int i = 0; i < arity(); ++i) m = vstack<S>(m, osc_subspace(x, points_[static_cast<size_t>(i)], alpha[static_cast<size_t>(i)]));
    return m;
  }

  template <CurveModel C>
  int dim(const C& x, const Exponent& alpha) const {
    return static_cast<int>(rank<S>(subspace(x, alpha)));
  }

 private:
  std::vector<CurvePoint<S>> points_;
};

template <CurveModel C>
int multifiltration_dim(const C& x, const Multifiltration<typename C::Scalar>& f, const Exponent& alpha) {
  return f.dim(x, alpha);
}

// Expansion of the section with coordinates `s` (in the basis of W) at P.
template <CurveModel C>
TruncatedSeries<typename C::Scalar> local_expansion(const C& x, const Vector<typename C::Scalar>& s,
                                                    const CurvePoint<typename C::Scalar>& p, int n) {
  using S = typename C::Scalar;
  require(s.size() == x.dim(), "section has the wrong number of coordinates");
  const Matrix<S> e = x.expansion(p, n);
  TruncatedSeries<S> out(Ambient{1, n});
  for (int k = 0; k < n; ++k) {
    S v = S();
    for (int j = 0; j < x.dim(); ++j)
      if (!is_zero(s(j))) v = v + s(j) * e(j, k);
    out.coeff(0, k) = v;
  }
  return out;
}

}  // namespace projsing
