#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "projsing/fuzz.hpp"

using namespace projsing;
using th::algebra;
using th::fp;
using th::space;

namespace {

// gaps of the numerical semigroup generated by gens (gcd 1 assumed)
int semigroup_gaps(const std::vector<int>& gens) {
  std::set<int> in{0};
  const int limit = 200;
  for (int k = 1; k < limit; ++k)
    for (int g : gens)
      if (k >= g && in.count(k - g)) {
        in.insert(k);
        break;
      }
  int gaps = 0;
  for (int k = 1; k < limit / 2; ++k) gaps += in.count(k) ? 0 : 1;
  return gaps;
}

int gcd_all(const std::vector<int>& v) {
  int g = 0;
  for (int x : v) g = std::gcd(g, x);
  return g;
}

std::string mono(int branch, int e) { return "t" + std::to_string(branch + 1) + "^" + std::to_string(e); }

}  // namespace

TEST_CASE("gap_eval examples") {
  CHECK(gap_eval(algebra({"1", "t1^2", "t1^3"}, {1, 12}), {4}) == 1);
  CHECK(gap_eval(algebra({"1", "t1^2", "t1^5"}, {1, 12}), {4}) == 2);
  const auto tac = algebra({"1", "t1 + t2", "t1^2"}, {2, 12});
  CHECK(gap_eval(tac, {2, 2}) == 2);
  CHECK(gap_eval(tac, {1, 0}) == 0);
  CHECK(gap_eval(tac, {1, 1}) == 1);
}

TEST_CASE("close_algebra examples") {
  const auto r = space({"1", "t1^2", "t1^4 + t1^5", "t1^6", "t1^7"}, {1, 12});
  const auto alg = close_algebra(r);
  // t^2 * t^2 brings t^4, hence t^5; the gaps are 1 and 3
  CHECK(quotient_dim(alg, {12}) == 2);
  CHECK(alg.dim() == 10);
  CHECK_THROWS_AS(close_algebra(space({"t1^2", "t1^3"}, {1, 8})), Error);
  // already closed input is returned unchanged
  const auto cusp = close_algebra(space({"1", "t1^2", "t1^3"}, {1, 10}));
  CHECK(close_algebra(cusp).basis_matrix() == cusp.basis_matrix());
}

TEST_CASE("semigroup marking and standardness") {
  const SemigroupView<Fp> sig(algebra({"1", "t1^2", "t1^3"}, {1, 10}));
  CHECK(marked_in_semigroup(sig, {0}, 0));
  CHECK_FALSE(marked_in_semigroup(sig, {1}, 0));
  CHECK(marked_in_semigroup(sig, {2}, 0));
  CHECK(marked_in_semigroup(sig, {3}, 0));
  CHECK(is_standard(algebra({"1", "t1^2", "t1^3"}, {1, 10})));
  CHECK(is_standard(algebra({"1", "t1 + t2"}, {2, 8})));
  // K x K (separated constants) is not standard
  const Ambient amb{2, 6};
  const auto split = span_reduce(amb, std::vector{TruncatedSeries<Fp>::constant(amb, fp().one()),
                                                  TruncatedSeries<Fp>::monomial(amb, 0, 0, fp().one())});
  CHECK_FALSE(is_standard(GapFunction<Fp>(close_algebra(split), GapKind::AlgebraClosed)));
}

TEST_CASE("degree examples") {
  CHECK(degree(algebra({"1", "t1^2", "t1^3"}, {1, 12})) == 1);
  CHECK(degree(algebra({"1", "t1^2", "t1^7"}, {1, 16})) == 3);
  CHECK(degree(algebra({"1", "t1", "t2", "t3"}, {3, 10})) == 2);
  CHECK(degree(algebra({"1", "t1 + t2", "t1 + t3"}, {3, 10})) == 3);
  CHECK(degree(algebra({"1", "t1"}, {1, 6})) == 0);
  try {
    (void)degree(algebra({"1", "t1^2", "t1^7"}, {1, 6}));
    FAIL("expected NotStabilized");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStabilized);
  }
  const TruncationPolicy pol{4, 64};
  const SpaceBuilder<Fp> b = [](int n) { return space({"1", "t1^2", "t1^7"}, {1, n}); };
  CHECK(stabilized_closure<Fp>(b, pol).degree.delta == 3);
  const SpaceBuilder<Fp> inf = [](int n) { return space({"1", "t1^2"}, {1, n}); };
  try {
    (void)stabilized_closure<Fp>(inf, pol);
    FAIL("expected StabilizationCap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::StabilizationCap);
  }
}

TEST_CASE("degree of monomial algebras matches the semigroup gap count") {
  Rng rng(21);
  int tested = 0;
  while (tested < 120) {
    const int r = 1 + static_cast<int>(uniform_below(rng, 3));
    std::vector<std::string> gens{"1"};
    int expected = r - 1;
    bool ok = true;
    for (int i = 0; i < r; ++i) {
      std::vector<int> exps;
      const int k = 1 + static_cast<int>(uniform_below(rng, 3));
      for (int j = 0; j < k; ++j) exps.push_back(2 + static_cast<int>(uniform_below(rng, 6)));
      if (uniform_below(rng, 2) == 0) exps.push_back(exps.front() + 1);
      if (gcd_all(exps) != 1) {
        ok = false;
        break;
      }
      for (int e : exps) gens.push_back(mono(i, e));
      expected += semigroup_gaps(exps);
    }
    if (!ok || expected > 12) continue;
    const SpaceBuilder<Fp> b = [gens, r](int n) { return space(gens, {r, n}); };
    CHECK(stabilized_closure<Fp>(b, TruncationPolicy{8, 64}).degree.delta == expected);
    ++tested;
  }
}

TEST_CASE("example: two branches, gamma 3, alpha (5,4)") {
  // hypothesis lambda <= 3 on |alpha| <= 8 forces lambda(5,4) <= 3
  Rng rng(22);
  int hits = 0;
  for (int it = 0; it < 300 && hits < 20; ++it) {
    const auto build = random_unit_space<Fp>(2, rng, fp(), it % 2 == 0, 64);
    const GapFunction<Fp> lam(close_algebra(build(24)), GapKind::AlgebraClosed);
    bool hyp = true;
    for (const auto& a : exponents_up_to(2, 8)) hyp = hyp && lam(a) <= 3;
    if (!hyp) continue;
    ++hits;
    CHECK(lam({5, 4}) <= 3);
    CHECK(key_lemma_holds(lam, 3));
  }
  CHECK(hits >= 5);
}

TEST_CASE("Key Lemma fuzz on random subalgebras") {
  Rng rng(23);
  const auto rep = fuzz_key_lemma<Fp>(150, 3, 6, rng, fp(), TruncationPolicy{10, 64});
  CHECK(rep.samples == 150);
  CHECK(rep.failures.empty());
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.delta_histogram.size() >= 4);
}

TEST_CASE("gap function properties: monotone, unit steps, upward propagation") {
  Rng rng(24);
  for (int it = 0; it < 40; ++it) {
    const int r = 1 + it % 3;
    const auto build = random_unit_space<Fp>(r, rng, fp(), it % 2 == 1, 64);
    const GapFunction<Fp> lam(close_algebra(build(12)), GapKind::AlgebraClosed);
    CHECK(is_standard(lam));
    for (const auto& a : exponents_up_to(r, r == 3 ? 7 : 10)) {
      bool fits = true;
      for (int x : a) fits = fits && x < 11;
      if (!fits) continue;
      for (int i = 0; i < r; ++i) {
        Exponent up = a;
        up[static_cast<size_t>(i)] += 1;
        const int d = lam(up) - lam(a);
        CHECK((d == 0 || d == 1));
        // once a step in branch i is a gap it stays a gap when other coordinates grow
        if (d == 1)
          for (int j = 0; j < r; ++j) {
            if (j == i) continue;
            Exponent a2 = a, up2 = up;
            a2[static_cast<size_t>(j)] += 1;
            up2[static_cast<size_t>(j)] += 1;
            CHECK(lam(up2) - lam(a2) == 1);
          }
      }
    }
  }
}

TEST_CASE("gap bound from small neighbours (alpha with some unit coordinates)") {
  // standard lambda, gamma >= r-1, alpha with l ones and |alpha| > 2 gamma + 2 - l:
  // lambda <= gamma below alpha implies lambda(alpha) <= gamma
  Rng rng(25);
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    const int r = 2 + it % 2;
    const auto build = random_unit_space<Fp>(r, rng, fp(), it % 3 == 0, 64);
    const GapFunction<Fp> lam(close_algebra(build(14)), GapKind::AlgebraClosed);
    for (int gamma = r - 1; gamma <= 4; ++gamma)
      for (const auto& a : exponents_up_to(r, 2 * gamma + 3, 1)) {
        const int ones = static_cast<int>(std::count(a.begin(), a.end(), 1));
        if (weight(a) <= 2 * gamma + 2 - ones) continue;
        bool below = true;
        for (int i = 0; i < r && below; ++i) {
          if (a[static_cast<size_t>(i)] == 0) continue;
          Exponent b = a;
          b[static_cast<size_t>(i)] -= 1;
          below = lam(b) <= gamma;
        }
        if (!below) continue;
        ++checked;
        CHECK(lam(a) <= gamma);
      }
  }
  CHECK(checked > 100);
}
