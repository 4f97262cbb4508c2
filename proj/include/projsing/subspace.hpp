#pragma once

#include <optional>
#include <vector>

#include "projsing/series.hpp"

namespace projsing {

// A subspace of S/(t^N) in reduced echelon form.  Coordinates are ordered by
// (branch ascending, exponent ascending), so pivot order is that monomial order.
template <class S>
class SeriesSubspace {
 public:
  explicit SeriesSubspace(Ambient a) : amb_(a), basis_(zero_matrix<S>(0, a.size())) {}
  SeriesSubspace(Ambient a, const Matrix<S>& rows) : amb_(a) {
    require(rows.cols() == a.size(), "rows do not match ambient");
    Echelon<S> e = row_echelon<S>(rows);
    basis_ = std::move(e.rows);
    pivots_ = std::move(e.pivots);
  }

  const Ambient& ambient() const { return amb_; }
  Index dim() const { return basis_.rows(); }
  const Matrix<S>& basis_matrix() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  TruncatedSeries<S> basis(Index i) const { return TruncatedSeries<S>(amb_, basis_.row(i).transpose()); }
  std::vector<TruncatedSeries<S>> basis_series() const {
    std::vector<TruncatedSeries<S>> out;
    for (Index i = 0; i < dim(); ++i) out.push_back(basis(i));
    return out;
  }

  bool contains(const TruncatedSeries<S>& f) const {
    require(f.ambient() == amb_, "ambient mismatch");
    Vector<S> v = f.coefficients();
    for (Index i = 0; i < dim(); ++i) {
      const S c = v(pivots_[static_cast<size_t>(i)]);
      if (!is_zero(c)) v -= basis_.row(i).transpose() * c;
    }
    for (Index j = 0; j < v.size(); ++j)
      if (!is_zero(v(j))) return false;
    return true;
  }

  // True iff every branch has some element with nonzero constant term; over a
  // field with more than r elements this is equivalent to containing a unit.
  bool contains_unit() const {
    for (int i = 0; i < amb_.branches; ++i) {
      bool hit = false;
      for (Index k = 0; k < dim() && !hit; ++k) hit = !is_zero(basis_(k, amb_.index(i, 0)));
      if (!hit) return false;
    }
    return true;
  }

  // Some element has the prescribed valuation: entry i is either an exact
  // order or nullopt meaning "branch i vanishes identically up to N".
  bool contains_valuation(const std::vector<std::optional<int>>& val) const {
    require(static_cast<int>(val.size()) == amb_.branches, "valuation arity mismatch");
    std::vector<Index> forced;
    for (int i = 0; i < amb_.branches; ++i) {
      const int stop = val[i] ? *val[i] : amb_.truncation;
      require(stop <= amb_.truncation, "valuation beyond truncation");
      for (int k = 0; k < stop; ++k) forced.push_back(amb_.index(i, k));
    }
    // U = elements vanishing on `forced`; need the functional at each
    // finite entry to be nonzero on U
    Matrix<S> coeffs = zero_matrix<S>(dim(), static_cast<Index>(forced.size()));
    for (Index r = 0; r < dim(); ++r)
      for (size_t j = 0; j < forced.size(); ++j) coeffs(r, static_cast<Index>(j)) = basis_(r, forced[j]);
    // combinations x with x * coeffs = 0
    const Matrix<S> comb = forced.empty() ? annihilator<S>(Matrix<S>(0, dim()), dim())
                                          : kernel<S>(Matrix<S>(coeffs.transpose()));
    if (comb.rows() == 0) return false;
    const Matrix<S> u = comb * basis_;
    for (int i = 0; i < amb_.branches; ++i) {
      if (!val[i] || *val[i] >= amb_.truncation) continue;
      bool hit = false;
      for (Index r = 0; r < u.rows() && !hit; ++r) hit = !is_zero(u(r, amb_.index(i, *val[i])));
      if (!hit) return false;
    }
    return true;
  }

 private:
  Ambient amb_;
  Matrix<S> basis_;
  std::vector<Index> pivots_;
};

template <class S>
SeriesSubspace<S> span_reduce(Ambient amb, const std::vector<TruncatedSeries<S>>& vectors) {
  Matrix<S> m = zero_matrix<S>(static_cast<Index>(vectors.size()), amb.size());
  for (size_t i = 0; i < vectors.size(); ++i) {
    require(vectors[i].ambient() == amb, "ambient mismatch in span_reduce");
    m.row(static_cast<Index>(i)) = vectors[i].coefficients().transpose();
  }
  return SeriesSubspace<S>(amb, m);
}

template <class S>
SeriesSubspace<S> span_reduce(const std::vector<TruncatedSeries<S>>& vectors) {
  require(!vectors.empty(), "span_reduce without vectors needs an explicit ambient");
  return span_reduce(vectors.front().ambient(), vectors);
}

// |alpha| - dim of the image of R in prod_i K[t_i]/(t_i^alpha_i).
template <class S>
int quotient_dim(const SeriesSubspace<S>& r, const std::vector<int>& alpha) {
  const Ambient amb = r.ambient();
  require(static_cast<int>(alpha.size()) == amb.branches, "exponent vector arity mismatch");
  std::vector<Index> cols;
  int total = 0;
  for (int i = 0; i < amb.branches; ++i) {
    require(alpha[i] >= 0, "negative exponent");
    if (alpha[i] > amb.truncation)
      fail(ErrorKind::NotStabilized, "exponent " + std::to_string(alpha[i]) + " exceeds truncation " +
                                         std::to_string(amb.truncation));
    total += alpha[i];
    for (int k = 0; k < alpha[i]; ++k) cols.push_back(amb.index(i, k));
  }
  if (r.dim() == 0 || cols.empty()) return total;
  if (amb.branches == 1) {
    // prefix of the monomial order: rank = pivots below alpha
    int below = 0;
    for (Index p : r.pivots())
      if (p < alpha[0]) ++below;
    return total - below;
  }
  Matrix<S> sub(r.dim(), static_cast<Index>(cols.size()));
  for (Index i = 0; i < r.dim(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) sub(i, static_cast<Index>(j)) = r.basis_matrix()(i, cols[j]);
  return total - static_cast<int>(rank<S>(sub));
}

}  // namespace projsing
