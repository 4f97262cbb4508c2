#include "doctest.h"
#include "helpers.hpp"
#include "projsing/polynomial.hpp"

using namespace projsing;
using th::fp;
using th::qq;

namespace {

Poly<Fp> pf(std::initializer_list<int> c) {
  std::vector<Fp> v;
  for (int x : c) v.push_back(fp().from_int(x));
  return Poly<Fp>(v);
}

Poly<Rational> pq(std::initializer_list<const char*> c) {
  std::vector<Rational> v;
  for (const char* x : c) v.push_back(Rational::parse(x));
  return Poly<Rational>(v);
}

}  // namespace

TEST_CASE("poly arithmetic and gcd") {
  const auto a = pf({-1, 0, 1});  // x^2 - 1
  const auto b = pf({1, 1});      // x + 1
  CHECK(a / b == pf({-1, 1}));
  CHECK((a % b).is_zero());
  CHECK(gcd(a * pf({2, 1}), pf({-1, 1}) * pf({3, 1})) == pf({-1, 1}));
  CHECK(gcd(Poly<Fp>(), a) == a.monic());
  CHECK(a.derivative() == pf({0, 2}));
  Poly<Fp> f = pf({1, -2, 1}) * pf({5, 1});
  CHECK(divide_out_root(f, fp().one()) == 2);
  CHECK(f == pf({5, 1}));
}

TEST_CASE("roots over F_p against brute force") {
  Rng rng(3);
  for (std::uint64_t p : {7ULL, 101ULL, 10007ULL, 1000003ULL}) {
    const Field<Fp> f(p);
    for (int it = 0; it < 10; ++it) {
      std::vector<Fp> c;
      const int deg = 1 + static_cast<int>(uniform_below(rng, 6));
      for (int k = 0; k <= deg; ++k) c.push_back(f.random(rng));
      c.back() = f.one();
      // plant two roots
      Poly<Fp> poly = Poly<Fp>(c) * Poly<Fp>::linear_root(f.from_int(3)) * Poly<Fp>::linear_root(f.from_int(5));
      const auto roots = roots_in_field(poly, rng, f);
      for (const auto& r : roots) CHECK(is_zero(poly(r)));
      CHECK(std::find(roots.begin(), roots.end(), f.from_int(3)) != roots.end());
      CHECK(std::find(roots.begin(), roots.end(), f.from_int(5)) != roots.end());
      if (p <= 10007) {
        size_t brute = 0;
        for (std::uint64_t x = 0; x < p; ++x) brute += is_zero(poly(f.from_residue(x))) ? 1 : 0;
        CHECK(roots.size() == brute);
      }
    }
  }
}

TEST_CASE("rational roots") {
  Rng rng(1);
  // (2x - 3)(x + 5/7)(x^2 + 1)
  const auto f = pq({"-3", "2"}) * pq({"5/7", "1"}) * pq({"1", "0", "1"});
  const auto r = rational_roots(f, rng);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Rational::parse("-5/7"));
  CHECK(r[1] == Rational::parse("3/2"));
  CHECK(rational_roots(pq({"-2", "0", "1"}), rng).empty());
  CHECK(rational_reconstruct(fp().from_int(-3).residue() , 10007).value_or(Rational(0L)) == Rational::parse("-3"));
}

TEST_CASE("resultant: evaluation agrees with Bareiss") {
  Rng rng(9);
  const Field<Fp> f(10007);
  for (int it = 0; it < 20; ++it) {
    BiPoly<Fp> g, h;
    const int m = 2 + static_cast<int>(uniform_below(rng, 3)), n = 2 + static_cast<int>(uniform_below(rng, 3));
    for (int k = 0; k <= m; ++k) g.push_back(Poly<Fp>({f.random(rng), f.random(rng), f.random(rng)}));
    for (int k = 0; k <= n; ++k) h.push_back(Poly<Fp>({f.random(rng), f.random(rng)}));
    CHECK(resultant_b(g, h, f) == resultant_b(g, h, f, true));
  }
  // Res_b(b - a, b - 2) = 2 - a up to sign
  BiPoly<Rational> u{pq({"0", "-1"}), pq({"1"})}, v{pq({"-2"}), pq({"1"})};
  const auto res = resultant_b(u, v, qq());
  CHECK(res.degree() == 1);
  CHECK(is_zero(res(Rational::parse("2"))));
}

TEST_CASE("determinant") {
  Matrix<Rational> m(3, 3);
  const char* e[] = {"2", "0", "1", "1", "3", "2", "1", "1", "2"};
  for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = Rational::parse(e[i]);
  CHECK(determinant<Rational>(m) == Rational::parse("6"));
}
