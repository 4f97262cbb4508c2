#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "projsing/gap_function.hpp"

namespace projsing {

// Random unit-containing R' = span{1, g_1, ..., g_k}.  Generators are drawn
// once at precision `max_truncation` and truncated on demand, so the
// builder describes one fixed subspace of S at every precision.
template <class S>
SpaceBuilder<S> random_unit_space(int r, Rng& rng, const Field<S>& field, bool monomial, int max_truncation = 64) {
  const Ambient big{r, max_truncation};
  std::vector<TruncatedSeries<S>> gens{TruncatedSeries<S>::constant(big, field.one())};
  const int k = 1 + static_cast<int>(uniform_below(rng, 3));
  for (int g = 0; g < k; ++g) {
    TruncatedSeries<S> s(big);
    bool any = false;
    for (int i = 0; i < r; ++i) {
      if (r > 1 && uniform_below(rng, 4) == 0) continue;  // vanishing branch
      const int v = (monomial ? 2 : 1) + static_cast<int>(uniform_below(rng, monomial ? 6 : 4));
      s.coeff(i, v) = monomial ? field.one() : field.random_nonzero(rng);
      if (!monomial)
        for (int e = v + 1; e < max_truncation; ++e)
          if (uniform_below(rng, 3) == 0) s.coeff(i, e) = field.random(rng);
      any = true;
    }
    if (any) gens.push_back(std::move(s));
  }
  if (monomial) {
    // make every branch eventually full: t_i^a and t_i^{a+1} for some a
    for (int i = 0; i < r; ++i) {
      const int a = 2 + static_cast<int>(uniform_below(rng, 5));
      gens.push_back(TruncatedSeries<S>::monomial(big, i, a, field.one()));
      gens.push_back(TruncatedSeries<S>::monomial(big, i, a + 1, field.one()));
    }
  }
  return [gens, r](int n) {
    require(n <= gens.front().truncation(), "requested precision exceeds generated precision");
    std::vector<TruncatedSeries<S>> cut;
    for (const auto& g : gens) cut.push_back(truncate(g, n));
    return span_reduce(Ambient{r, n}, cut);
  };
}

struct KeyLemmaFuzzReport {
  int samples = 0;
  int rejected = 0;  // delta above the requested bound or never stabilized
  int checks = 0;
  std::map<int, int> delta_histogram;
  std::vector<std::string> failures;
};

// Key Lemma for gamma in {0, ..., delta + 1}, plus "delta is attained on
// |alpha| <= 2 delta" for every sample.
template <class S>
KeyLemmaFuzzReport fuzz_key_lemma(int samples, int max_branches, int max_delta, Rng& rng, const Field<S>& field,
                                  TruncationPolicy policy) {
  KeyLemmaFuzzReport rep;
  int attempts = 0;
  while (rep.samples < samples) {
    require(++attempts <= 50 * samples + 100, "fuzzer could not produce enough admissible samples");
    const int r = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_branches)));
    const bool monomial = uniform_below(rng, 2) == 0;
    const SpaceBuilder<S> build = random_unit_space<S>(r, rng, field, monomial, 64);
    int delta;
    try {
      delta = stabilized_closure<S>(build, policy).degree.delta;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::StabilizationCap) throw;
      ++rep.rejected;
      continue;
    }
    if (delta > max_delta) {
      ++rep.rejected;
      continue;
    }
    ++rep.samples;
    ++rep.delta_histogram[delta];
    const int n = std::max({2 * delta + 4, 4 * delta + 2, 2 * policy.initial});
    const GapFunction<S> lam(close_algebra(build(n)), GapKind::AlgebraClosed);
    for (int gamma = 0; gamma <= delta + 1; ++gamma) {
      ++rep.checks;
      if (!key_lemma_holds(lam, gamma))
        rep.failures.push_back("r=" + std::to_string(r) + " delta=" + std::to_string(delta) +
                               " gamma=" + std::to_string(gamma));
    }
    int best = 0;
    for (const Exponent& a : exponents_up_to(r, 2 * delta)) best = std::max(best, lam(a));
    ++rep.checks;
    if (best != delta)
      rep.failures.push_back("delta " + std::to_string(delta) + " not attained on |alpha| <= 2 delta (r=" +
                             std::to_string(r) + ")");
  }
  return rep;
}

}  // namespace projsing
