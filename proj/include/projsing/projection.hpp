#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "projsing/classify.hpp"
#include "projsing/curve.hpp"
#include "projsing/polynomial.hpp"

namespace projsing {

// P(L) with L an l-dimensional subspace of V, and M = L^perp in W.
template <class S>
struct ProjectionCenter {
  Matrix<S> L;  // reduced echelon rows, l x dim V
  Matrix<S> M;  // reduced echelon rows, (n+1) x dim V

  int ell() const { return static_cast<int>(L.rows()); }
  int dim() const { return static_cast<int>(L.cols()); }
  int n() const { return dim() - ell() - 1; }

  static ProjectionCenter from_center(const Matrix<S>& rows) {
    const Echelon<S> e = row_echelon<S>(rows);
    require(e.rank() == rows.rows(), "center rows are linearly dependent");
    require(e.rank() >= 1, "center must have dimension at least 1");
    require(rows.cols() - e.rank() >= 2, "center leaves no room for a curve (n < 1)");
    return {e.rows, row_echelon<S>(kernel<S>(e.rows)).rows};
  }
  static ProjectionCenter from_forms(const Matrix<S>& forms) {
    const Echelon<S> e = row_echelon<S>(forms);
    require(e.rank() == forms.rows(), "forms spanning M are linearly dependent");
    require(e.rank() >= 2 && e.rank() < forms.cols(), "M must have dimension between 2 and dim V - 1");
    return {row_echelon<S>(kernel<S>(e.rows)).rows, e.rows};
  }
};

template <class S>
struct RamificationCluster {
  std::vector<CurvePoint<S>> points;
};

enum class CenterVerdict { BasepointFree, Basepoint, Indeterminate };

template <class S>
struct CenterCheck {
  CenterVerdict verdict = CenterVerdict::BasepointFree;
  std::vector<CurvePoint<S>> basepoints;
  std::string detail;
};

namespace detail {

template <class S>
bool point_less(const CurvePoint<S>& p, const CurvePoint<S>& q) {
  if (p.at_infinity() != q.at_infinity()) return q.at_infinity();
  if constexpr (std::is_same_v<S, Fp>)
    return p.a().residue() < q.a().residue();
  else
    return p.a().value() < q.a().value();
}

// m_i(a) = m_i(a, 1): coefficient of a^u is M(i, d - u).
template <class S>
std::vector<Poly<S>> dehomogenized(const Matrix<S>& m) {
  const int d = static_cast<int>(m.cols()) - 1;
  std::vector<Poly<S>> out;
  for (Index i = 0; i < m.rows(); ++i) {
    std::vector<S> c(static_cast<size_t>(d) + 1);
    for (int u = 0; u <= d; ++u) c[static_cast<size_t>(u)] = m(i, d - u);
    out.emplace_back(std::move(c));
  }
  return out;
}

template <class S>
bool parallel(const std::vector<S>& x, const std::vector<S>& y) {
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (x[i] * y[j] != x[j] * y[i]) return false;
  return true;
}

template <class S>
bool all_zero(const std::vector<S>& x) {
  return std::all_of(x.begin(), x.end(), [](const S& v) { return is_zero(v); });
}

// phi(P) and phi'(P) in the local parameter of the chart.
template <class S>
struct PhiEvaluator {
  Matrix<S> m;
  std::vector<Poly<S>> polys, derivs;

  explicit PhiEvaluator(Matrix<S> forms) : m(std::move(forms)), polys(dehomogenized(m)) {
    for (const auto& p : polys) derivs.push_back(p.derivative());
  }
  std::vector<S> value(const CurvePoint<S>& p) const {
    std::vector<S> v;
    for (Index i = 0; i < m.rows(); ++i) v.push_back(p.at_infinity() ? m(i, 0) : polys[static_cast<size_t>(i)](p.a()));
    return v;
  }
  std::vector<S> slope(const CurvePoint<S>& p) const {
    std::vector<S> v;
    for (Index i = 0; i < m.rows(); ++i) v.push_back(p.at_infinity() ? m(i, 1) : derivs[static_cast<size_t>(i)](p.a()));
    return v;
  }
  bool tangent(const CurvePoint<S>& p) const { return parallel(value(p), slope(p)); }
  bool secant(const CurvePoint<S>& p, const CurvePoint<S>& q) const { return parallel(value(p), value(q)); }
};

template <class S>
std::vector<S> field_roots(const Poly<S>& f, Rng& rng, const Field<S>& field) {
  if constexpr (std::is_same_v<S, Fp>)
    return roots_in_field(f, rng, field);
  else
    return rational_roots(f, rng);
}

// One elimination round: gcd of Res_b(G1, G2) and Res_b(G1, G3) for random
// antisymmetric combinations G = sum r_ij (m_i(a) m_j(b) - m_j(a) m_i(b)) / (a - b).
// Its roots contain the a-coordinate of every affine point on an affine
// secant or tangent meeting P(L).
template <class W>
Poly<W> secant_eliminant(const Matrix<W>& forms, Rng& rng, const Field<W>& field) {
  const Index rows = forms.rows();
  const int d = static_cast<int>(forms.cols()) - 1;
  Matrix<W> coef(rows, d + 1);
  for (Index i = 0; i < rows; ++i)
    for (int u = 0; u <= d; ++u) coef(i, u) = forms(i, d - u);
  std::vector<BiPoly<W>> combos;
  for (int c = 0; c < 3; ++c) {
    Matrix<W> r(rows, rows);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < rows; ++j) r(i, j) = field.random(rng);
    const Matrix<W> cm = coef.transpose() * r * coef;
    std::vector<std::vector<W>> q(static_cast<size_t>(d), std::vector<W>(static_cast<size_t>(d), field.zero()));  // [b^k][a^j]
    for (int u = 0; u <= d; ++u)
      for (int v = 0; v < u; ++v) {
        const W p = cm(u, v) - cm(v, u);
        if (is_zero(p)) continue;
        for (int s = 0; s <= u - v - 1; ++s) {
          auto& cell = q[static_cast<size_t>(u - 1 - s)][static_cast<size_t>(v + s)];
          cell = cell + p;
        }
      }
    BiPoly<W> g;
    for (auto& row : q) g.emplace_back(std::move(row));
    combos.push_back(std::move(g));
  }
  return gcd(resultant_b(combos[0], combos[1], field), resultant_b(combos[0], combos[2], field));
}

template <class S>
Matrix<Fp> reduce_matrix(const Matrix<S>& m, const Field<Fp>& f) {
  Matrix<Fp> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<S, Fp>)
        out(i, j) = m(i, j);
      else
        out(i, j) = reduce_rational(m(i, j), f);
    }
  return out;
}

template <class S>
Fp reduce_scalar(const S& x, const Field<Fp>& f) {
  if constexpr (std::is_same_v<S, Fp>)
    return x;
  else
    return reduce_rational(x, f);
}

}  // namespace detail

// Basepoints of M: common zeros of the forms.  Extension-field zeros make
// the verdict indeterminate.
template <class S>
CenterCheck<S> check_center(const ProjectionCenter<S>& center, const RationalNormalCurve<S>& x, Rng& rng) {
  require(center.dim() == x.dim(), "center lives in a space of the wrong dimension");
  CenterCheck<S> out;
  const Field<S>& field = x.field();
  bool inf = true;
  for (Index i = 0; i < center.M.rows(); ++i) inf = inf && is_zero(center.M(i, 0));
  if (inf) out.basepoints.push_back(CurvePoint<S>::infinity(field.one()));
  Poly<S> g;
  for (const auto& p : detail::dehomogenized(center.M)) g = gcd(g, p);
  Poly<S> rest = g;
  for (const S& r : detail::field_roots(g, rng, field)) {
    out.basepoints.push_back(CurvePoint<S>::affine(r));
    divide_out_root(rest, r);
  }
  std::sort(out.basepoints.begin(), out.basepoints.end(), detail::point_less<S>);
  if (!out.basepoints.empty()) {
    out.verdict = CenterVerdict::Basepoint;
    out.detail = "P(L) meets the curve";
  } else if (rest.degree() > 0) {
    out.verdict = CenterVerdict::Indeterminate;
    out.detail = "P(L) meets the curve only at points defined over an extension of the base field";
  }
  return out;
}

// Points of X on a secant or tangent line meeting P(L), grouped into fibers.
template <class S>
std::vector<RamificationCluster<S>> find_ramification(const ProjectionCenter<S>& center, const RationalNormalCurve<S>& x,
                                                      Rng& rng) {
  require(center.dim() == x.dim(), "center lives in a space of the wrong dimension");
  const Field<S>& field = x.field();
  const detail::PhiEvaluator<S> phi(center.M);
  const CurvePoint<S> inf = CurvePoint<S>::infinity(field.one());
  std::vector<CurvePoint<S>> found;

  // secants through (1:0): phi(b) parallel to phi(inf)
  const std::vector<S> at_inf = phi.value(inf);
  ensure(!detail::all_zero(at_inf), "(1:0) is a basepoint; check_center must run first");
  Poly<S> h;
  for (size_t i = 0; i < at_inf.size(); ++i)
    for (size_t j = i + 1; j < at_inf.size(); ++j)
      h = gcd(h, at_inf[i] * phi.polys[j] - at_inf[j] * phi.polys[i]);
  require(!h.is_zero(), "every point is secant-related to (1:0): projection is not birational");
  {
    Poly<S> rest = h;
    for (const S& r : detail::field_roots(h, rng, field)) {
      found.push_back(CurvePoint<S>::affine(r));
      divide_out_root(rest, r);
    }
    if (rest.degree() > 0)
      fail(ErrorKind::Indeterminate, "a secant through (1:0) meets P(L) at a point defined over an extension field");
    if (!found.empty() || phi.tangent(inf)) found.push_back(inf);
  }

  // affine pairs and tangents
  const bool scan = [&] {
    if constexpr (std::is_same_v<S, Fp>)
      return field.modulus() <= (1ULL << 16);
    else
      return false;
  }();
  std::vector<S> candidates;
  if constexpr (std::is_same_v<S, Fp>) {
    if (scan) {
      std::map<std::vector<std::uint64_t>, std::vector<S>> groups;
      for (std::uint64_t k = 0; k < field.modulus(); ++k) {
        const S a = field.from_residue(k);
        const CurvePoint<S> p = CurvePoint<S>::affine(a);
        std::vector<S> v = phi.value(p);
        if (phi.tangent(p)) candidates.push_back(a);
        size_t lead = 0;
        while (is_zero(v[lead])) ++lead;
        const S inv = inverse(v[lead]);
        std::vector<std::uint64_t> key;
        for (const S& c : v) key.push_back((c * inv).residue_mod(field.modulus()));
        groups[key].push_back(a);
      }
      for (const auto& [key, pts] : groups)
        if (pts.size() > 1) candidates.insert(candidates.end(), pts.begin(), pts.end());
    }
  }

  const auto verified = [&](const S& a) {
    const CurvePoint<S> p = CurvePoint<S>::affine(a);
    if (phi.tangent(p)) return true;
    if (phi.secant(p, inf)) return true;
    for (const S& b : candidates)
      if (b != a && phi.secant(p, CurvePoint<S>::affine(b))) return true;
    return false;
  };

  // completeness: the eliminant must vanish only at verified points
  const std::vector<std::uint64_t> primes = [&] {
    if constexpr (std::is_same_v<S, Fp>)
      return std::vector<std::uint64_t>{field.modulus()};
    else
      return working_primes(3);
  }();
  bool complete = false;
  for (std::uint64_t q : primes) {
    const Field<Fp> fq(q);
    Matrix<Fp> mq;
    try {
      mq = detail::reduce_matrix(center.M, fq);
    } catch (const Error&) {
      continue;
    }
    Poly<Fp> g = detail::secant_eliminant(mq, rng, fq);
    require(!g.is_zero(), "P(L) meets infinitely many secant lines: projection is not birational");
    if constexpr (!std::is_same_v<S, Fp>) {
      // candidates from the roots of g, lifted to Q
      std::vector<S> lifted;
      for (const Fp& r : roots_in_field(g, rng, fq))
        if (auto c = rational_reconstruct(r.residue(), q)) lifted.push_back(*c);
      for (const S& c : lifted)
        if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(c);
    } else if (!scan) {
      for (const Fp& r : roots_in_field(g, rng, fq))
        if (std::find(candidates.begin(), candidates.end(), r) == candidates.end()) candidates.push_back(r);
    }
    for (int round = 0; round < 4 && !complete; ++round) {
      Poly<Fp> rest = g;
      for (const S& a : candidates)
        if (verified(a)) divide_out_root(rest, detail::reduce_scalar(a, fq));
      for (const CurvePoint<S>& p : found)
        if (!p.at_infinity()) divide_out_root(rest, detail::reduce_scalar(p.a(), fq));
      if (rest.degree() <= 0) {
        complete = true;
        break;
      }
      g = gcd(g, detail::secant_eliminant(mq, rng, fq));
    }
    if (complete) break;
  }
  if (!complete) {
    if constexpr (std::is_same_v<S, Fp>)
      fail(ErrorKind::Indeterminate, "secant or tangent lines meet P(L) at points defined over an extension field");
    else
      fail(ErrorKind::Indeterminate, "IrrationalRamification: ramification points are not all rational; rerun over F_p or supply the points");
  }
  for (const S& a : candidates) {
    if (!verified(a)) continue;
    const CurvePoint<S> p = CurvePoint<S>::affine(a);
    if (std::find(found.begin(), found.end(), p) == found.end()) found.push_back(p);
  }

  // fibers: connected components of the secant relation
  std::sort(found.begin(), found.end(), detail::point_less<S>);
  std::vector<size_t> parent(found.size());
  std::iota(parent.begin(), parent.end(), size_t{0});
  const auto root = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < found.size(); ++i)
    for (size_t j = i + 1; j < found.size(); ++j)
      if (phi.secant(found[i], found[j])) parent[root(j)] = root(i);
  std::vector<RamificationCluster<S>> clusters;
  std::map<size_t, size_t> slot;
  for (size_t i = 0; i < found.size(); ++i) {
    const size_t r = root(i);
    if (!slot.count(r)) {
      slot[r] = clusters.size();
      clusters.emplace_back();
    }
    clusters[slot[r]].points.push_back(found[i]);
  }
  return clusters;
}

// ------------------------------------------------------------ analysis

struct AnalysisOptions {
  TruncationPolicy policy{10, 64};
  bool force = false;  // analyze even when 2 l < d - 2 rho_g fails
  std::uint64_t seed = 0;
};

template <class S>
struct ClusterReport {
  std::vector<CurvePoint<S>> points;
  std::vector<std::pair<Exponent, int>> lambda;  // lambda' on |alpha| <= 2 delta + 2
  int delta = 0;
  std::optional<SingularityType> type;  // empty when delta > 3
  std::optional<SingularityType> vs_row;
  int dual_checks = 0;
  bool standard = false;
};

struct Hypotheses {
  bool ell_at_most_3 = false;
  bool two_ell_below_d = false;  // 2 l < d - 2 rho_g
  bool n_above_2 = false;
  bool basepoint_free = false;
  bool birational = false;
};

template <class S>
struct ProjectionReport {
  int d = 0, n = 0, ell = 0, genus = 0;
  Hypotheses hypotheses;
  std::vector<ClusterReport<S>> clusters;
  int delta_total = 0;
};

struct BoundVerdict {
  bool pass = false;
  bool hypotheses_hold = false;
  int delta_total = 0;
  int ell = 0;
  std::optional<int> castelnuovo;  // d - n when rho_g = 0
  std::string detail;
};

template <class S>
Hypotheses hypotheses_for(const ProjectionCenter<S>& c, int d, int genus) {
  Hypotheses h;
  h.ell_at_most_3 = c.ell() <= 3;
  h.two_ell_below_d = 2 * c.ell() < d - 2 * genus;
  h.n_above_2 = c.n() > 2;
  return h;
}

namespace detail {

template <class S, CurveModel C>
SeriesSubspace<S> cluster_space(const ProjectionCenter<S>& center, const C& x, const std::vector<CurvePoint<S>>& pts,
                                const Vector<S>& s, int n) {
  const int r = static_cast<int>(pts.size());
  const Ambient amb{r, n};
  std::vector<TruncatedSeries<S>> rows(static_cast<size_t>(center.M.rows()), TruncatedSeries<S>(amb));
  for (int i = 0; i < r; ++i) {
    const CurvePoint<S>& p = pts[static_cast<size_t>(i)];
    const TruncatedSeries<S> inv = series_inverse(local_expansion(x, s, p, n));
    for (Index k = 0; k < center.M.rows(); ++k) {
      const Vector<S> m = center.M.row(k).transpose();
      const TruncatedSeries<S> q = series_mul(local_expansion(x, m, p, n), inv);
      for (int e = 0; e < n; ++e) rows[static_cast<size_t>(k)].coeff(i, e) = q.coeff(0, e);
    }
  }
  return span_reduce(amb, rows);
}

template <class S, CurveModel C>
Vector<S> choose_section(const ProjectionCenter<S>& center, const C& x, const std::vector<CurvePoint<S>>& pts,
                         const Field<S>& field, Rng& rng) {
  std::vector<Vector<S>> at;
  for (const auto& p : pts) at.push_back(x.expansion(p, 1).col(0));
  const auto nonvanishing = [&](const Vector<S>& s) {
    for (const auto& v : at)
      if (is_zero(s.dot(v))) return false;
    return true;
  };
  for (Index k = 0; k < center.M.rows(); ++k)
    if (nonvanishing(center.M.row(k).transpose())) return center.M.row(k).transpose();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vector<S> s = zero_vector<S>(center.dim());
    for (Index k = 0; k < center.M.rows(); ++k) s += field.random(rng) * center.M.row(k).transpose();
    if (nonvanishing(s)) return s;
  }
  fail(ErrorKind::Indeterminate, "no section of M found that is nonvanishing on the whole cluster");
}

}  // namespace detail

// lambda' of one cluster computed on the flag side: dim(L cap F^alpha).
template <class S, CurveModel C>
int flag_side_lambda(const ProjectionCenter<S>& center, const C& x, const Multifiltration<S>& f, const Exponent& alpha) {
  const Matrix<S> fa = f.subspace(x, alpha);
  return center.ell() + static_cast<int>(rank<S>(fa)) - static_cast<int>(rank<S>(vstack<S>(center.L, fa)));
}

template <class S, CurveModel C>
ClusterReport<S> analyze_cluster(const ProjectionCenter<S>& center, const C& x, const std::vector<CurvePoint<S>>& pts,
                                 const Field<S>& field, const AnalysisOptions& opt, Rng& rng) {
  require(!pts.empty(), "empty cluster");
  const Multifiltration<S> filt(pts);
  const int r = filt.arity();
  // manual clusters: every point off P(L), every pair secant-related
  std::vector<Vector<S>> nu;
  for (const auto& p : pts) {
    nu.push_back(center.M * x.expansion(p, 1).col(0));
    bool zero = true;
    for (Index i = 0; i < nu.back().size(); ++i) zero = zero && is_zero(nu.back()(i));
    require(!zero, "cluster point " + p.to_string() + " lies on P(L)");
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      Matrix<S> two(2, nu[0].size());
      two.row(0) = nu[static_cast<size_t>(i)].transpose();
      two.row(1) = nu[static_cast<size_t>(j)].transpose();
      require(rank<S>(two) < 2, "cluster points " + pts[static_cast<size_t>(i)].to_string() + " and " +
                                    pts[static_cast<size_t>(j)].to_string() + " do not map to the same point");
    }

  const Vector<S> s = detail::choose_section(center, x, pts, field, rng);
  const int top = x.degree() + 1 - 2 * x.genus();
  const int n_vs = std::max(top + 1, 8);
  const SeriesSubspace<S> rp = detail::cluster_space(center, x, pts, s, n_vs);
  const GapFunction<S> lam(rp, GapKind::VectorSpace);

  ClusterReport<S> rep;
  rep.points = pts;
  for (const Exponent& a : exponents_up_to(r, top)) {
    const int series_side = lam(a);
    const int flag_side = flag_side_lambda(center, x, filt, a);
    ensure(series_side == flag_side, "dual-path mismatch at alpha " + ValuationVector{a}.to_string());
    ++rep.dual_checks;
  }
  rep.standard = is_standard(lam);

  TruncationPolicy pol = opt.policy;
  pol.initial = std::max(2, std::min(2 * center.ell() + 4, pol.cap));
  const SpaceBuilder<S> build = [&](int n) { return detail::cluster_space(center, x, pts, s, n); };
  const ClosedAlgebra<S> closed = stabilized_closure<S>(build, pol);
  rep.delta = closed.degree.delta;

  for (const Exponent& a : exponents_up_to(r, std::min(top, 2 * rep.delta + 2))) rep.lambda.emplace_back(a, lam(a));

  if (rep.delta == 0) {
    rep.type = SingularityType(TypeId::Smooth);
  } else if (rep.delta <= 3) {
    SingularityType row = classify_vector_space(lam);
    rep.vs_row = row;
    const SingularityType ring = classify_ring(closed.gap);
    if (row.ambiguous()) {
      const auto [lo, hi] = row.members();
      ensure(ring == lo || ring == hi, "closure type is not a member of the ambiguous row");
      rep.type = ring;
    } else {
      ensure(row == ring, "vector-space row " + row.label() + " disagrees with closure type " + ring.label());
      rep.type = row;
    }
  }
  return rep;
}

template <class S, CurveModel C>
ProjectionReport<S> analyze_at_points(const ProjectionCenter<S>& center, const C& x,
                                      const std::vector<std::vector<CurvePoint<S>>>& clusters, const Field<S>& field,
                                      const AnalysisOptions& opt) {
  require(center.dim() == x.dim(), "center lives in a space of the wrong dimension");
  for (size_t i = 0; i < clusters.size(); ++i)
    for (size_t j = i + 1; j < clusters.size(); ++j)
      for (const auto& p : clusters[i])
        for (const auto& q : clusters[j]) require(p != q, "clusters must be disjoint");
  ProjectionReport<S> rep;
  rep.d = x.degree();
  rep.n = center.n();
  rep.ell = center.ell();
  rep.genus = x.genus();
  rep.hypotheses = hypotheses_for(center, rep.d, rep.genus);
  rep.hypotheses.basepoint_free = true;  // checked point by point below
  rep.hypotheses.birational = true;
  Rng rng(opt.seed);
  for (const auto& pts : clusters) {
    ClusterReport<S> c = analyze_cluster(center, x, pts, field, opt, rng);
    rep.delta_total += c.delta;
    rep.clusters.push_back(std::move(c));
  }
  return rep;
}

template <class S>
ProjectionReport<S> analyze(const ProjectionCenter<S>& center, const RationalNormalCurve<S>& x, const AnalysisOptions& opt) {
  const Hypotheses h = hypotheses_for(center, x.degree(), x.genus());
  if (!h.two_ell_below_d && !opt.force)
    fail(ErrorKind::Hypothesis, "hypothesis 2l < d - 2rho_g violated (l = " + std::to_string(center.ell()) +
                                    ", d = " + std::to_string(x.degree()) + "); finiteness of secant incidences is not guaranteed");
  Rng rng(opt.seed);
  const CenterCheck<S> cc = check_center(center, x, rng);
  if (cc.verdict == CenterVerdict::Basepoint)
    fail(ErrorKind::Hypothesis, "P(L) meets the curve at " + cc.basepoints.front().to_string() + ": M is not basepoint free");
  if (cc.verdict == CenterVerdict::Indeterminate) fail(ErrorKind::Indeterminate, cc.detail);
  std::vector<std::vector<CurvePoint<S>>> pts;
  for (auto& c : find_ramification(center, x, rng)) pts.push_back(std::move(c.points));
  ProjectionReport<S> rep = analyze_at_points(center, x, pts, x.field(), opt);
  rep.hypotheses = h;
  rep.hypotheses.basepoint_free = true;
  rep.hypotheses.birational = true;  // finitely many incidences, certified by a nonzero eliminant
  return rep;
}

template <class S>
BoundVerdict verify_genus_bound(const ProjectionReport<S>& rep) {
  BoundVerdict v;
  v.delta_total = rep.delta_total;
  v.ell = rep.ell;
  v.hypotheses_hold = rep.hypotheses.two_ell_below_d && rep.hypotheses.basepoint_free && rep.hypotheses.birational;
  bool ok = rep.delta_total <= rep.ell;
  if (rep.genus == 0) {
    v.castelnuovo = rep.d - rep.n;
    ok = ok && rep.delta_total <= rep.d - rep.n;
  }
  v.pass = ok;
  if (!v.hypotheses_hold)
    v.detail = "hypothesis 2l < d - 2rho_g fails; the bound is not asserted";
  else
    v.detail = ok ? "sum of delta within the bound" : "sum of delta exceeds the bound";
  return v;
}

}  // namespace projsing
