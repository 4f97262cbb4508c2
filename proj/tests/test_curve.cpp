#include "doctest.h"
#include "helpers.hpp"
#include "projsing/curve.hpp"
#include "projsing/polynomial.hpp"

using namespace projsing;
using th::fp;

namespace {

using Pt = CurvePoint<Fp>;
Pt aff(int a) { return Pt::affine(fp().from_int(a)); }
Pt inf() { return Pt::infinity(fp().one()); }

Vector<Fp> vec(std::initializer_list<int> c) {
  Vector<Fp> v(static_cast<Index>(c.size()));
  Index i = 0;
  for (int x : c) v(i++) = fp().from_int(x);
  return v;
}

bool row_in_span(const Matrix<Fp>& span, const Vector<Fp>& v) {
  Matrix<Fp> one(1, v.size());
  one.row(0) = v.transpose();
  return rank<Fp>(vstack<Fp>(span, one)) == rank<Fp>(span);
}

}  // namespace

TEST_CASE("osculating subspaces: examples") {
  const RationalNormalCurve<Fp> x(3, fp());
  const auto v2 = osc_subspace(x, aff(0), 2);
  CHECK(v2.rows() == 2);
  CHECK(rank<Fp>(v2) == 2);
  CHECK(row_in_span(v2, vec({0, 0, 0, 1})));
  CHECK(row_in_span(v2, vec({0, 0, 1, 0})));
  CHECK_FALSE(row_in_span(v2, vec({0, 1, 0, 0})));
  CHECK(osc_subspace(x, aff(0), 0).rows() == 0);
  CHECK(row_in_span(osc_subspace(x, inf(), 1), vec({1, 0, 0, 0})));
  // nu(1:1) = (1,1,1,1)
  CHECK(row_in_span(osc_subspace(x, aff(1), 1), vec({1, 1, 1, 1})));
  CHECK_THROWS_AS(osc_subspace(x, aff(0), 5), Error);
}

TEST_CASE("multifiltration dimensions") {
  const RationalNormalCurve<Fp> x3(3, fp()), x5(5, fp());
  const Multifiltration<Fp> two({aff(0), inf()});
  CHECK(two.dim(x3, {2, 2}) == 4);
  CHECK(two.dim(x5, {3, 3}) == 6);
  CHECK(two.dim(x5, {0, 0}) == 0);
  CHECK(two.dim(x5, {4, 4}) == 6);
  CHECK_THROWS_AS(Multifiltration<Fp>({aff(2), aff(2)}), Error);
  const Multifiltration<Fp> three({aff(1), aff(2), aff(7)});
  CHECK(three.dim(x5, {2, 2, 2}) == 6);
  CHECK(three.dim(x5, {3, 3, 1}) == 6);
  CHECK(three.dim(x5, {1, 1, 1}) == 3);
}

TEST_CASE("local expansions") {
  const RationalNormalCurve<Fp> x(5, fp());
  // x^2 y^3 at (1:0) is t^3
  const auto a = local_expansion(x, vec({0, 0, 0, 1, 0, 0}), inf(), 6);
  CHECK(valuation(a).entries[0] == 3);
  CHECK(a.coeff(0, 3) == fp().one());
  // x^5 + x^3 y^2 at (1:0) is 1 + t^2
  const auto b = local_expansion(x, vec({1, 0, 1, 0, 0, 0}), inf(), 6);
  CHECK(b.coeff(0, 0) == fp().one());
  CHECK(is_zero(b.coeff(0, 1)));
  CHECK(b.coeff(0, 2) == fp().one());
  // (x - 2y)^2 y^3 at (2:1) is t^2
  const auto c = local_expansion(x, vec({0, 0, 0, 1, -4, 4}), aff(2), 6);
  CHECK(valuation(c).entries[0] == 2);
  CHECK(c.coeff(0, 2) == fp().one());
}

TEST_CASE("property: nesting and full rank of osculating flags") {
  Rng rng(5);
  for (int it = 0; it < 30; ++it) {
    const int d = 2 + static_cast<int>(uniform_below(rng, 7));
    const RationalNormalCurve<Fp> x(d, fp());
    const Pt p = uniform_below(rng, 5) == 0 ? inf() : Pt::affine(fp().random(rng));
    for (int i = 0; i <= d; ++i) {
      const auto vi = osc_subspace(x, p, i), vn = osc_subspace(x, p, i + 1);
      CHECK(rank<Fp>(vi) == i);
      CHECK(rank<Fp>(vstack<Fp>(vi, vn)) == i + 1);
    }
  }
}

TEST_CASE("property: vanishing order equals root multiplicity") {
  Rng rng(6);
  for (int it = 0; it < 60; ++it) {
    const int d = 2 + static_cast<int>(uniform_below(rng, 6));
    const RationalNormalCurve<Fp> x(d, fp());
    const Fp a = fp().random(rng);
    // s = (u - a)^m * random, u = x / y
    const int m = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(d) + 1));
    Poly<Fp> f = Poly<Fp>::constant(fp().one());
    for (int k = 0; k < m; ++k) f = f * Poly<Fp>::linear_root(a);
    std::vector<Fp> tail;
    for (int k = 0; k <= d - m; ++k) tail.push_back(fp().random(rng));
    f = f * Poly<Fp>(tail);
    if (f.is_zero()) continue;
    Vector<Fp> s = zero_vector<Fp>(d + 1);
    for (int u = 0; u <= d; ++u) s(d - u) = f.coeff(u);
    Poly<Fp> g = f;
    const int mult = divide_out_root(g, a);
    const auto ser = local_expansion(x, s, Pt::affine(a), d + 2);
    CHECK(valuation(ser).entries[0] == mult);
    // ord >= i  iff  s annihilates V^i(P)
    for (int i = 0; i <= d + 1; ++i) {
      const auto vi = osc_subspace(x, Pt::affine(a), i);
      bool annihilates = true;
      for (Index r = 0; r < vi.rows(); ++r) annihilates = annihilates && is_zero(vi.row(r).dot(s.transpose()));
      CHECK(annihilates == (mult >= i));
    }
  }
}
