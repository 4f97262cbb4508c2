#include "doctest.h"
#include "helpers.hpp"
#include "projsing/schubert.hpp"

using namespace projsing;
using th::fp;

namespace {

using Pt = CurvePoint<Fp>;

std::vector<Pt> random_points(int r, Rng& rng, const Field<Fp>& f) {
  std::vector<Pt> out;
  while (static_cast<int>(out.size()) < r) {
    const Pt p = uniform_below(rng, 6) == 0 ? Pt::infinity(f.one()) : Pt::affine(f.random(rng));
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

SingularityType ty(const char* s) { return SingularityType::parse(s); }

}  // namespace

TEST_CASE("closed conditions and partitions: examples") {
  const auto c = closed_conditions(ty("3.2.e"));
  REQUIRE(c.size() == 2);
  CHECK(c[0].alpha == Exponent{2, 1});
  CHECK(c[0].k == 2);
  CHECK(c[1].alpha == Exponent{4, 2});
  CHECK(c[1].k == 3);
  CHECK(schubert_pivots(c, 5, 3) == std::vector<int>{2, 3, 6});
  CHECK(schubert_partition(schubert_pivots(c, 5, 3), 5).parts == std::vector<int>{5, 5, 3});
  // cusp: one line, the tangent
  const auto cusp = closed_conditions(ty("1.1"));
  REQUIRE(cusp.size() == 1);
  CHECK(cusp[0].alpha == Exponent{2});
  CHECK(recipe_path(c, 2) == std::vector<Exponent>{{1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}, {4, 2}});
  CHECK(recipe_row(ty("3.1.d")).result == recipe_row(ty("2.1.b")).result);
}

TEST_CASE("partition sizes match table codimensions") {
  for (int n : {4, 5, 6})
    for (const auto& t : enumerate_types()) {
      CAPTURE(t.label());
      const int ell = 3;
      const auto p = schubert_partition(schubert_pivots(closed_conditions(t), n, ell), n);
      CHECK(p.size() - t.branches() == table_codim(t, n));
      CHECK(static_cast<int>(p.parts.size()) <= ell);
      for (size_t i = 1; i < p.parts.size(); ++i) CHECK(p.parts[i - 1] >= p.parts[i]);
      CHECK(p.parts.front() <= n + 1);
    }
  CHECK(table_codim(ty("2.3"), 5) == 7);
  CHECK(table_codim(ty("1.2"), 6) == 4);
  CHECK(table_codim(ty("3.2.e"), 5) == 11);
  CHECK(table_codim(ty("2.2.a"), 5) == 7);
}

TEST_CASE("configuration codimension") {
  const auto nodes = configuration_codim({ty("1.2"), ty("1.2")}, 5, 3);
  CHECK(nodes.codim == 2);
  CHECK(nodes.family_dim == 6);
  CHECK(configuration_codim({ty("2.2.b")}, 5, 3).codim == 4);
  CHECK_THROWS_AS(configuration_codim({ty("1.1"), ty("1.1"), ty("1.1"), ty("1.2")}, 8, 5), Error);
  // quintic strata dimensions run from 8 (smooth) down to 3
  int lo = 8;
  for (const auto& t : enumerate_types())
    if (t.delta() <= 2) lo = std::min(lo, configuration_codim({t}, 5, 3).family_dim);
  for (const auto& a : enumerate_types())
    for (const auto& b : enumerate_types())
      if (a.delta() == 1 && b.delta() == 1) lo = std::min(lo, configuration_codim({a, b}, 5, 3).family_dim);
  CHECK(lo == 3);
  CHECK(configuration_codim({}, 5, 3).family_dim == 8);
}

TEST_CASE("stratum_spec validation") {
  const RationalNormalCurve<Fp> x8(8, fp());
  Rng rng(1);
  const auto spec = stratum_spec(ty("2.3"), random_points(3, rng, fp()), x8, 5);
  CHECK(spec.codim == 7);
  CHECK(spec.partition.size() == 10);
  CHECK_THROWS_AS(stratum_spec(ty("2.3"), random_points(2, rng, fp()), x8, 5), Error);
  CHECK_THROWS_AS(stratum_spec(ty("2.1.b|3.1.d"), random_points(1, rng, fp()), x8, 5), Error);
  const RationalNormalCurve<Fp> x5(5, fp());
  CHECK_THROWS_AS(stratum_spec(ty("3.1.a"), random_points(1, rng, fp()), x5, 3), Error);
}

TEST_CASE("round trip: every type at (8,5), small types at (5,3)") {
  Rng rng(7);
  int draws = 0, samples = 0;
  for (auto [d, n] : std::vector<std::pair<int, int>>{{8, 5}, {5, 3}}) {
    const RationalNormalCurve<Fp> x(d, fp());
    for (const auto& t : enumerate_types()) {
      if (t.delta() > d - n) continue;
      CAPTURE(t.label());
      for (int k = 0; k < 3; ++k) {
        const auto spec = stratum_spec(t, random_points(t.branches(), rng, fp()), x, n);
        const auto s = sample_stratum<Fp>({spec}, x, rng);
        draws += s.attempts;
        ++samples;
        CHECK(s.report.clusters.size() == 1);
        CHECK(s.report.clusters[0].type == t);
      }
    }
  }
  CHECK(draws - samples <= samples / 10);
}

TEST_CASE("cell samples meet the flag in the expected dimensions") {
  Rng rng(8);
  const RationalNormalCurve<Fp> x(8, fp());
  for (const auto& t : enumerate_types()) {
    if (is_hidden_type(t)) continue;
    const auto spec = stratum_spec(t, random_points(t.branches(), rng, fp()), x, 5);
    const auto s = sample_center<Fp>({spec}, x, fp(), rng);
    const Matrix<Fp>& flag = s.flags.front();
    for (int a = 1; a <= x.dim(); ++a) {
      int expected = 0;
      for (int p : spec.pivots) expected += p <= a ? 1 : 0;
      CHECK(intersection_dim<Fp>(s.center.L, flag.topRows(a)) == expected);
    }
  }
}

TEST_CASE("joint configurations: node plus cusp, two nodes") {
  Rng rng(9);
  const RationalNormalCurve<Fp> x8(8, fp());
  const auto pts = random_points(3, rng, fp());
  const auto node = stratum_spec(ty("1.2"), {pts[0], pts[1]}, x8, 5);
  const auto cusp = stratum_spec(ty("1.1"), {pts[2]}, x8, 5);
  const auto s = sample_stratum<Fp>({node, cusp}, x8, rng);
  CHECK(s.report.clusters.size() == 2);
  CHECK(s.report.delta_total == 2);
  const RationalNormalCurve<Fp> x5(5, fp());
  const auto q = random_points(4, rng, fp());
  const auto two = sample_stratum<Fp>({stratum_spec(ty("1.2"), {q[0], q[1]}, x5, 3), stratum_spec(ty("1.2"), {q[2], q[3]}, x5, 3)}, x5, rng);
  CHECK(two.report.delta_total == 2);
  CHECK_THROWS_AS(sample_center<Fp>({stratum_spec(ty("2.2.b"), {q[0], q[1]}, x5, 3), stratum_spec(ty("1.2"), {q[2], q[3]}, x5, 3)},
                                    x5, fp(), rng),
                  Error);
}

TEST_CASE("same seed, same sample") {
  const RationalNormalCurve<Fp> x(8, fp());
  Rng a(5), b(5);
  const auto pa = random_points(2, a, fp());
  const auto pb = random_points(2, b, fp());
  const auto sa = sample_center<Fp>({stratum_spec(ty("3.2.e"), pa, x, 5)}, x, fp(), a);
  const auto sb = sample_center<Fp>({stratum_spec(ty("3.2.e"), pb, x, 5)}, x, fp(), b);
  CHECK(sa.center.L == sb.center.L);
}
