#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "projsing/projection.hpp"

using namespace projsing;
using th::fp;
using th::qq;

namespace {

// forms as {coefficient, power of y}
template <class S>
Matrix<S> forms(int d, const std::vector<std::vector<std::pair<int, int>>>& rows, const Field<S>& f) {
  Matrix<S> m = zero_matrix<S>(static_cast<Index>(rows.size()), d + 1);
  for (size_t i = 0; i < rows.size(); ++i)
    for (auto [c, j] : rows[i]) m(static_cast<Index>(i), j) = m(static_cast<Index>(i), j) + f.from_int(c);
  return m;
}

template <class S>
Matrix<S> monomials(int d, const std::vector<int>& ypowers, const Field<S>& f) {
  std::vector<std::vector<std::pair<int, int>>> rows;
  for (int j : ypowers) rows.push_back({{1, j}});
  return forms(d, rows, f);
}

// Example family: x^d and x^{d-k} y^k for k = d-n+1..d, singular at (1:0)
template <class S>
Matrix<S> sharp_family(int d, int n, const Field<S>& f) {
  std::vector<int> ys{0};
  for (int k = d - n + 1; k <= d; ++k) ys.push_back(k);
  return monomials(d, ys, f);
}

AnalysisOptions opts(bool force = false) {
  AnalysisOptions o;
  o.force = force;
  o.seed = 1;
  return o;
}

template <class S>
bool is_basepoint_brute(const ProjectionCenter<S>& c, const RationalNormalCurve<S>& x, const CurvePoint<S>& p) {
  const Vector<S> v = c.M * x.veronese(p);
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

Matrix<Fp> random_rows(int rows, int cols, Rng& rng, const Field<Fp>& f) {
  Matrix<Fp> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = f.random(rng);
  return m;
}

// sum_i lambda_i(alpha_i) <= lambda_R(alpha) <= lambda'(alpha)
void sandwich(const ProjectionCenter<Fp>& c, const RationalNormalCurve<Fp>& x, const std::vector<CurvePoint<Fp>>& pts,
              const Field<Fp>& f, Rng& rng) {
  const int n = 16, r = static_cast<int>(pts.size());
  const Vector<Fp> s = detail::choose_section(c, x, pts, f, rng);
  const auto rp = detail::cluster_space(c, x, pts, s, n);
  const auto alg = close_algebra(rp);
  const GapFunction<Fp> lp(rp, GapKind::VectorSpace), lr(alg, GapKind::AlgebraClosed);
  std::vector<GapFunction<Fp>> branch;
  for (int i = 0; i < r; ++i) {
    std::vector<TruncatedSeries<Fp>> proj;
    for (const auto& b : alg.basis_series()) {
      TruncatedSeries<Fp> t(Ambient{1, n});
      for (int e = 0; e < n; ++e) t.coeff(0, e) = b.coeff(i, e);
      proj.push_back(t);
    }
    branch.emplace_back(close_algebra(span_reduce(Ambient{1, n}, proj)), GapKind::AlgebraClosed);
  }
  for (const Exponent& a : exponents_up_to(r, 8)) {
    int lo = 0;
    for (int i = 0; i < r; ++i) lo += branch[static_cast<size_t>(i)]({a[static_cast<size_t>(i)]});
    CHECK(lo <= lr(a));
    CHECK(lr(a) <= lp(a));
  }
}

}  // namespace

TEST_CASE("center construction") {
  const auto c = ProjectionCenter<Fp>::from_forms(monomials(5, {0, 3, 4, 5}, fp()));
  CHECK(c.ell() == 2);
  CHECK(c.n() == 3);
  CHECK(c.dim() == 6);
  const auto back = ProjectionCenter<Fp>::from_center(c.L);
  CHECK(back.M == c.M);
  CHECK_THROWS_AS(ProjectionCenter<Fp>::from_forms(monomials(5, {0, 0, 4}, fp())), Error);
  CHECK_THROWS_AS(ProjectionCenter<Fp>::from_center(monomials(3, {0, 1, 2}, fp())), Error);
}

TEST_CASE("check_center examples") {
  Rng rng(2);
  const RationalNormalCurve<Fp> x5(5, fp());
  // M = {x^5, x^2y^3, xy^4, y^5}
  const auto quintic = ProjectionCenter<Fp>::from_forms(monomials(5, {0, 3, 4, 5}, fp()));
  CHECK(check_center(quintic, x5, rng).verdict == CenterVerdict::BasepointFree);
  // L containing nu(3:1)
  Matrix<Fp> l(2, 6);
  l.row(0) = x5.veronese(CurvePoint<Fp>::affine(fp().from_int(3))).transpose();
  l.row(1) = random_rows(1, 6, rng, fp()).row(0);
  const auto hit = check_center(ProjectionCenter<Fp>::from_center(l), x5, rng);
  CHECK(hit.verdict == CenterVerdict::Basepoint);
  REQUIRE(hit.basepoints.size() >= 1);
  CHECK(std::find(hit.basepoints.begin(), hit.basepoints.end(), CurvePoint<Fp>::affine(fp().from_int(3))) !=
        hit.basepoints.end());
  // M = {x^4 y, ..., y^5} vanishes at (1:0)
  const auto atinf = check_center(ProjectionCenter<Fp>::from_forms(monomials(5, {1, 2, 3, 4, 5}, fp())), x5, rng);
  CHECK(atinf.verdict == CenterVerdict::Basepoint);
  CHECK(atinf.basepoints.back().at_infinity());
  // over Q: M = {x^2 + y^2} * {x^2, xy, y^2} has only non-rational zeros
  const RationalNormalCurve<Rational> q4(4, qq());
  const auto irr = ProjectionCenter<Rational>::from_forms(forms<Rational>(4, {{{1, 0}, {1, 2}}, {{1, 1}, {1, 3}}, {{1, 2}, {1, 4}}}, qq()));
  CHECK(check_center(irr, q4, rng).verdict == CenterVerdict::Indeterminate);
}

TEST_CASE("check_center agrees with exhaustive scan") {
  Rng rng(11);
  const Field<Fp> f(10007);
  const RationalNormalCurve<Fp> x(8, f);
  int free = 0;
  for (int it = 0; it < 100; ++it) {
    const int ell = 1 + static_cast<int>(uniform_below(rng, 3));
    Matrix<Fp> l = random_rows(ell, 9, rng, f);
    if (it % 10 == 0) l.row(0) = x.veronese(CurvePoint<Fp>::affine(f.random(rng))).transpose();
    if (it % 10 == 5) l.row(0) = x.veronese(CurvePoint<Fp>::infinity(f.one())).transpose();
    const auto c = ProjectionCenter<Fp>::from_center(l);
    const auto verdict = check_center(c, x, rng);
    std::vector<CurvePoint<Fp>> brute;
    for (std::uint64_t a = 0; a < f.modulus(); ++a)
      if (is_basepoint_brute(c, x, CurvePoint<Fp>::affine(f.from_residue(a)))) brute.push_back(CurvePoint<Fp>::affine(f.from_residue(a)));
    if (is_basepoint_brute(c, x, CurvePoint<Fp>::infinity(f.one()))) brute.push_back(CurvePoint<Fp>::infinity(f.one()));
    CHECK(verdict.basepoints == brute);
    free += verdict.verdict == CenterVerdict::BasepointFree ? 1 : 0;
  }
  CHECK(free >= 75);
}

TEST_CASE("find_ramification agrees with exhaustive pair scan over a small field") {
  Rng rng(21);
  const Field<Fp> f(101);
  int checked = 0;
  for (int it = 0; it < 40; ++it) {
    const int d = 5 + static_cast<int>(uniform_below(rng, 3));
    const RationalNormalCurve<Fp> x(d, f);
    const auto c = ProjectionCenter<Fp>::from_center(random_rows(2, d + 1, rng, f));
    if (check_center(c, x, rng).verdict != CenterVerdict::BasepointFree) continue;
    std::vector<RamificationCluster<Fp>> clusters;
    try {
      clusters = find_ramification(c, x, rng);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Indeterminate);
      continue;
    }
    // oracle over all points and pairs
    std::vector<CurvePoint<Fp>> pts;
    for (std::uint64_t a = 0; a < f.modulus(); ++a) pts.push_back(CurvePoint<Fp>::affine(f.from_residue(a)));
    pts.push_back(CurvePoint<Fp>::infinity(f.one()));
    std::set<size_t> hit;
    const auto incident = [&](const Matrix<Fp>& span) {
      return rank<Fp>(vstack<Fp>(c.L, span)) < c.ell() + rank<Fp>(span);
    };
    for (size_t i = 0; i < pts.size(); ++i) {
      if (incident(osc_subspace(x, pts[i], 2))) hit.insert(i);
      for (size_t j = i + 1; j < pts.size(); ++j)
        if (incident(vstack<Fp>(osc_subspace(x, pts[i], 1), osc_subspace(x, pts[j], 1)))) {
          hit.insert(i);
          hit.insert(j);
        }
    }
    std::vector<CurvePoint<Fp>> found;
    for (const auto& cl : clusters) found.insert(found.end(), cl.points.begin(), cl.points.end());
    std::vector<CurvePoint<Fp>> expected;
    for (size_t i : hit) expected.push_back(pts[i]);
    CHECK(found.size() == expected.size());
    for (const auto& p : expected) CHECK(std::find(found.begin(), found.end(), p) != found.end());
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("quintic examples") {
  const RationalNormalCurve<Fp> x5(5, fp());
  for (const auto& m : {monomials(5, {0, 3, 4, 5}, fp()),
                        forms<Fp>(5, {{{1, 0}, {1, 2}}, {{1, 3}}, {{1, 4}}, {{1, 5}}}, fp())}) {
    const auto rep = analyze(ProjectionCenter<Fp>::from_forms(m), x5, opts());
    REQUIRE(rep.clusters.size() == 1);
    CHECK(rep.clusters[0].points == std::vector<CurvePoint<Fp>>{CurvePoint<Fp>::infinity(fp().one())});
    CHECK(rep.clusters[0].delta == 2);
    REQUIRE(rep.clusters[0].type.has_value());
    CHECK(rep.clusters[0].type->label() == "2.1.a");
    CHECK(rep.delta_total == 2);
    CHECK(verify_genus_bound(rep).pass);
  }
  // x^5 + c x y^4 - y^5, x^2y^3, x^3y^2, x^4y
  for (int c : {1, 2, 5, 17, 1000, -3}) {
    const auto m = forms<Fp>(5, {{{1, 0}, {c, 4}, {-1, 5}}, {{1, 3}}, {{1, 2}}, {{1, 1}}}, fp());
    const auto rep = analyze(ProjectionCenter<Fp>::from_forms(m), x5, opts());
    REQUIRE(rep.clusters.size() == 1);
    CHECK(rep.clusters[0].points.size() == 2);
    REQUIRE(rep.clusters[0].type.has_value());
    CHECK(rep.clusters[0].type->label() == "2.2.b");
    CHECK(rep.clusters[0].delta == 2);
  }
  // the same over Q
  const RationalNormalCurve<Rational> q5(5, qq());
  const auto mq = forms<Rational>(5, {{{1, 0}, {3, 4}, {-1, 5}}, {{1, 3}}, {{1, 2}}, {{1, 1}}}, qq());
  const auto rq = analyze(ProjectionCenter<Rational>::from_forms(mq), q5, opts());
  REQUIRE(rq.clusters.size() == 1);
  CHECK(rq.clusters[0].type->label() == "2.2.b");
}

TEST_CASE("sharp family reaches d - n") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{5, 3}, {6, 4}, {7, 4}, {8, 5}}) {
    const RationalNormalCurve<Fp> x(d, fp());
    const auto rep = analyze(ProjectionCenter<Fp>::from_forms(sharp_family(d, n, fp())), x, opts());
    REQUIRE(rep.clusters.size() == 1);
    CHECK(rep.clusters[0].points.front().at_infinity());
    CHECK(rep.delta_total == d - n);
    const auto v = verify_genus_bound(rep);
    CHECK(v.pass);
    CHECK(v.castelnuovo == d - n);
  }
  const RationalNormalCurve<Rational> q(7, qq());
  const auto rq = analyze(ProjectionCenter<Rational>::from_forms(sharp_family(7, 4, qq())), q, opts());
  CHECK(rq.delta_total == 3);
}

TEST_CASE("hypothesis gate and the d = 2n family") {
  const RationalNormalCurve<Fp> x5(5, fp());
  const auto tight = ProjectionCenter<Fp>::from_forms(monomials(5, {0, 4, 5}, fp()));  // l = 3
  try {
    analyze(tight, x5, opts());
    FAIL("expected a hypothesis error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Hypothesis);
  }
  for (int n : {3, 4}) {
    const int d = 2 * n;
    const RationalNormalCurve<Fp> x(d, fp());
    const auto c = ProjectionCenter<Fp>::from_forms(sharp_family(d, n, fp()));
    CHECK_FALSE(hypotheses_for(c, d, 0).two_ell_below_d);
    const std::vector<std::vector<CurvePoint<Fp>>> cl{{CurvePoint<Fp>::infinity(fp().one())}};
    const auto rep = analyze_at_points(c, x, cl, fp(), opts(true));
    CHECK(rep.clusters[0].delta == n + 1);
    CHECK_FALSE(rep.clusters[0].type.has_value());
    const auto v = verify_genus_bound(rep);
    CHECK_FALSE(v.hypotheses_hold);
  }
}

TEST_CASE("manual clusters are validated") {
  const RationalNormalCurve<Fp> x5(5, fp());
  const auto c = ProjectionCenter<Fp>::from_forms(monomials(5, {0, 3, 4, 5}, fp()));
  const CurvePoint<Fp> inf = CurvePoint<Fp>::infinity(fp().one()), one = CurvePoint<Fp>::affine(fp().one());
  CHECK_THROWS_AS(analyze_at_points(c, x5, {{inf, one}}, fp(), opts()), Error);
  const auto smooth = analyze_at_points(c, x5, {{one}}, fp(), opts());
  CHECK(smooth.clusters[0].delta == 0);
  CHECK(smooth.clusters[0].type->smooth());
}

TEST_CASE("random centers: dual path, standardness, bound, sandwich") {
  Rng rng(31);
  const Field<Fp> f(10007);
  int clusters = 0;
  for (int it = 0; it < 40; ++it) {
    const int d = 5 + static_cast<int>(uniform_below(rng, 5));
    const int ell = 1 + static_cast<int>(uniform_below(rng, 3));
    if (2 * ell >= d) continue;
    const RationalNormalCurve<Fp> x(d, f);
    // force one tangent incidence so clusters exist
    Matrix<Fp> l = random_rows(ell, d + 1, rng, f);
    const auto p = CurvePoint<Fp>::affine(f.random(rng));
    const Matrix<Fp> t = osc_subspace(x, p, 2);
    l.row(0) = t.row(0) * f.random(rng) + t.row(1) * f.random(rng);
    const auto c = ProjectionCenter<Fp>::from_center(l);
    ProjectionReport<Fp> rep;
    try {
      rep = analyze(c, x, opts());
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Indeterminate);
      continue;
    }
    CHECK(rep.delta_total <= ell);
    for (const auto& cl : rep.clusters) {
      ++clusters;
      CHECK(cl.dual_checks > 0);
      CHECK(cl.standard);
      sandwich(c, x, cl.points, f, rng);
    }
  }
  CHECK(clusters >= 20);
}
