#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "projsing/field.hpp"

namespace projsing {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

// Subspaces are always carried as the row span of a matrix.

template <class S>
struct Echelon {
  Matrix<S> rows;              // reduced: pivot entries 1, zeros above and below
  std::vector<Index> pivots;   // strictly increasing column indices
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class S>
Matrix<S> zero_matrix(Index rows, Index cols) {
  Matrix<S> m(rows, cols);
  m.setConstant(S());
  return m;
}

template <class S>
Vector<S> zero_vector(Index n) {
  Vector<S> v(n);
  v.setConstant(S());
  return v;
}

// Gauss-Jordan on a copy.  `order` permutes the pivot search over columns;
// by default columns are scanned left to right.
template <class S>
Echelon<S> row_echelon(Matrix<S> m, const std::vector<Index>& order = {}) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> colseq(order);
  if (colseq.empty()) {
    colseq.resize(static_cast<size_t>(cols));
    std::iota(colseq.begin(), colseq.end(), Index{0});
  }
  Index rank = 0;
  std::vector<Index> pivots;
  for (Index c : colseq) {
    if (rank == rows) break;
    Index piv = -1;
    for (Index r = rank; r < rows; ++r)
      if (!is_zero(m(r, c))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank) m.row(piv).swap(m.row(rank));
    const S inv = inverse(m(rank, c));
    for (Index j = 0; j < cols; ++j) m(rank, j) = m(rank, j) * inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == rank || is_zero(m(r, c))) continue;
      const S f = m(r, c);
      for (Index j = 0; j < cols; ++j)
        if (!is_zero(m(rank, j))) m(r, j) = m(r, j) - f * m(rank, j);
    }
    pivots.push_back(c);
    ++rank;
  }
  Echelon<S> e;
  e.rows = m.topRows(rank);
  e.pivots = std::move(pivots);
  if (!order.empty()) {
    // keep rows sorted by pivot column for a canonical result
    std::vector<Index> idx(static_cast<size_t>(rank));
    std::iota(idx.begin(), idx.end(), Index{0});
    std::sort(idx.begin(), idx.end(), [&](Index a, Index b) { return e.pivots[a] < e.pivots[b]; });
    Matrix<S> sorted(rank, cols);
    std::vector<Index> sp;
    for (Index i = 0; i < rank; ++i) {
      sorted.row(i) = e.rows.row(idx[i]);
      sp.push_back(e.pivots[idx[i]]);
    }
    e.rows = std::move(sorted);
    e.pivots = std::move(sp);
  }
  return e;
}

// Forward elimination only; cheaper when just the rank is needed.
template <class S>
Index rank(Matrix<S> m) {
  const Index rows = m.rows(), cols = m.cols();
  Index r0 = 0;
  for (Index c = 0; c < cols && r0 < rows; ++c) {
    Index piv = -1;
    for (Index r = r0; r < rows; ++r)
      if (!is_zero(m(r, c))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != r0) m.row(piv).swap(m.row(r0));
    const S inv = inverse(m(r0, c));
    for (Index r = r0 + 1; r < rows; ++r) {
      if (is_zero(m(r, c))) continue;
      const S f = m(r, c) * inv;
      for (Index j = c; j < cols; ++j)
        if (!is_zero(m(r0, j))) m(r, j) = m(r, j) - f * m(r0, j);
    }
    ++r0;
  }
  return r0;
}

// Rows spanning {x : m x = 0}.
template <class S>
Matrix<S> kernel(const Matrix<S>& m) {
  const Index cols = m.cols();
  const Echelon<S> e = row_echelon<S>(m);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[p] = true;
  Matrix<S> k = zero_matrix<S>(cols - e.rank(), cols);
  Index row = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // free variable f = 1; pivot variables solved from the reduced rows
    k(row, f) = S(1);
    for (Index i = 0; i < e.rank(); ++i) k(row, e.pivots[i]) = -e.rows(i, f);
    ++row;
  }
  return k;
}

// Annihilator of a row span under the coordinate pairing.
template <class S>
Matrix<S> annihilator(const Matrix<S>& rows, Index ambient) {
  if (rows.rows() == 0) {
    Matrix<S> id = zero_matrix<S>(ambient, ambient);
    for (Index i = 0; i < ambient; ++i) id(i, i) = S(1);
    return id;
  }
  return kernel<S>(rows);
}

template <class S>
Matrix<S> vstack(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  Matrix<S> m(a.rows() + b.rows(), a.cols());
  m << a, b;
  return m;
}

template <class S>
Index intersection_dim(const Matrix<S>& a, const Matrix<S>& b) {
  return rank<S>(a) + rank<S>(b) - rank<S>(vstack<S>(a, b));
}

// One solution of a x = b, free variables set to zero; nullopt if inconsistent.
template <class S>
std::optional<Vector<S>> solve_particular(const Matrix<S>& a, const Vector<S>& b) {
  Matrix<S> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const Echelon<S> e = row_echelon<S>(aug);
  Vector<S> x = zero_vector<S>(a.cols());
  for (Index i = 0; i < e.rank(); ++i) {
    if (e.pivots[static_cast<size_t>(i)] == a.cols()) return std::nullopt;
    x(e.pivots[static_cast<size_t>(i)]) = e.rows(i, a.cols());
  }
  return x;
}

// Incrementally built semi-echelon basis; rows kept sorted by pivot.
template <class S>
class EchelonBuilder {
 public:
  explicit EchelonBuilder(Index cols) : cols_(cols) {}

  Index cols() const { return cols_; }
  Index dim() const { return static_cast<Index>(rows_.size()); }

  // Reduces v in place against the basis; returns true when v became zero.
  bool reduce(Vector<S>& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      const Index p = pivots_[i];
      if (is_zero(v(p))) continue;
      const S f = v(p);
      const Vector<S>& row = rows_[i];
      for (Index j = p; j < cols_; ++j)
        if (!is_zero(row(j))) v(j) = v(j) - f * row(j);
    }
    for (Index j = 0; j < cols_; ++j)
      if (!is_zero(v(j))) return false;
    return true;
  }

  // Adds v to the span; returns false if it was already there.
  bool insert(Vector<S> v) {
    if (reduce(v)) return false;
    Index p = 0;
    while (is_zero(v(p))) ++p;
    const S inv = inverse(v(p));
    for (Index j = p; j < cols_; ++j) v(j) = v(j) * inv;
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  Matrix<S> matrix() const {
    Matrix<S> m = zero_matrix<S>(dim(), cols_);
    for (Index i = 0; i < dim(); ++i) m.row(i) = rows_[static_cast<size_t>(i)].transpose();
    return m;
  }

 private:
  Index cols_;
  std::vector<Vector<S>> rows_;
  std::vector<Index> pivots_;
};

}  // namespace projsing
