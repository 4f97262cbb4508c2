#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "projsing/expression.hpp"
#include "projsing/gap_function.hpp"
#include "projsing/singularity_type.hpp"

namespace projsing {

// Values of lambda on the window {alpha in N^r : |alpha| <= max(2 delta, r)},
// canonical under permuting branches: the lexicographically least value
// sequence over all r! relabelings.
struct Fingerprint {
  int arity = 0;
  int delta = 0;
  std::vector<int> values;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline std::vector<Exponent> fingerprint_window(int r, int delta) {
  return exponents_up_to(r, std::max(2 * delta, r), 1);
}

template <class Eval>
Fingerprint canonical_fingerprint(int r, int delta, Eval&& eval) {
  const std::vector<Exponent> window = fingerprint_window(r, delta);
  std::vector<int> perm(static_cast<size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<int>> best;
  do {
    std::vector<int> vals;
    vals.reserve(window.size());
    for (const Exponent& a : window) {
      Exponent b(a.size());
      for (int i = 0; i < r; ++i) b[static_cast<size_t>(perm[static_cast<size_t>(i)])] = a[static_cast<size_t>(i)];
      vals.push_back(eval(b));
    }
    if (!best || vals < *best) best = std::move(vals);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Fingerprint{r, delta, std::move(*best)};
}

// lambda(alpha) from the highlighted positions of a table entry.
inline int table_value(const TypeInfo& t, const Exponent& alpha) {
  int v = 0;
  for (const GapCondition& h : t.highlights) {
    bool below = true;
    for (size_t i = 0; i < alpha.size(); ++i) below = below && h.alpha[i] <= alpha[i];
    if (below) v = std::max(v, h.value);
  }
  return v;
}

inline Fingerprint table_fingerprint(const TypeInfo& t) {
  return canonical_fingerprint(t.branches, t.delta, [&](const Exponent& a) { return table_value(t, a); });
}

template <class S>
Fingerprint fingerprint(const GapFunction<S>& lam, int delta) {
  return canonical_fingerprint(lam.arity(), delta, [&](const Exponent& a) { return lam(a); });
}

inline std::vector<SingularityType> enumerate_types() {
  std::vector<SingularityType> out;
  for (const TypeInfo& t : type_table()) out.emplace_back(t.id);
  return out;
}

template <class S>
SingularityType classify_ring(const GapFunction<S>& lam) {
  require(lam.kind() == GapKind::AlgebraClosed, "classify_ring needs an algebra-closed gap function");
  require(is_standard(lam), "classify_ring needs a standard gap function");
  const int delta = degree(lam);
  if (delta == 0) return SingularityType(TypeId::Smooth);
  require(delta <= 3, "delta = " + std::to_string(delta) + " is outside the classified range");
  const Fingerprint fp = fingerprint(lam, delta);
  for (const TypeInfo& t : type_table()) {
    if (t.delta != delta || t.branches != lam.arity()) continue;
    if (table_fingerprint(t) == fp) return SingularityType(t.id);
  }
  fail(ErrorKind::Internal, "standard gap function with delta <= 3 matches no table entry");
}

// lambda'(sigma(alpha)) == value for some relabeling sigma of the branches
template <class S>
bool vs_row_matches(const GapFunction<S>& lam, const VsRow& row) {
  const int r = lam.arity();
  std::vector<int> perm(static_cast<size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const GapCondition& c : row.conditions) {
      Exponent b(static_cast<size_t>(r));
      for (int i = 0; i < r; ++i) b[static_cast<size_t>(perm[static_cast<size_t>(i)])] = c.alpha[static_cast<size_t>(i)];
      if (lam(b) != c.value) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

template <class S>
SingularityType classify_vector_space(const GapFunction<S>& lam) {
  require(lam.kind() == GapKind::VectorSpace, "classify_vector_space needs a vector-space gap function");
  require(lam.backend().contains_unit(), "R' must contain a unit");
  const int r = lam.arity();
  require(r <= 4, "at most four branches are classified");
  require(is_standard(lam), "lambda' is not standard");
  std::vector<SingularityType> hits;
  for (const VsRow& row : vs_table())
    if (row.branches == r && vs_row_matches(lam, row)) hits.push_back(row.result);
  // a delta = 3 row refines the delta = 2 row it shares conditions with
  // (2.1.a vs 3.1.c, 2.2.b vs 3.2.b): the deeper row wins
  if (!hits.empty()) {
    const auto depth = [](const SingularityType& t) { return t.delta_range().first; };
    const int top = depth(*std::max_element(hits.begin(), hits.end(),
                                            [&](const auto& a, const auto& b) { return depth(a) < depth(b); }));
    std::erase_if(hits, [&](const SingularityType& t) { return depth(t) != top; });
    ensure(hits.size() == 1, "several rows of the vector-space table match");
    return hits.front();
  }
  if (r == 1 && lam(Exponent{2}) == 0) return SingularityType(TypeId::Smooth);
  fail(ErrorKind::Validation, "no row of the vector-space table matches (delta > 3 or malformed input)");
}

template <class S>
SingularityType resolve_ambiguity(const SeriesSubspace<S>& rprime) {
  const SeriesSubspace<S> alg = close_algebra(rprime);
  return classify_ring(GapFunction<S>(alg, GapKind::AlgebraClosed));
}

template <class S>
struct LocalModel {
  SingularityType type;
  Ambient ambient;
  std::vector<std::string> names;
  std::vector<TruncatedSeries<S>> generators;
  std::vector<std::string> relations;
  std::vector<std::vector<std::optional<int>>> semigroup;

  // span of the unit and the generators: the R' whose closure is the model ring
  SeriesSubspace<S> generating_space(const S& one) const {
    std::vector<TruncatedSeries<S>> v{TruncatedSeries<S>::constant(ambient, one)};
    v.insert(v.end(), generators.begin(), generators.end());
    return span_reduce(ambient, v);
  }
};

template <class S>
struct SeriesPolicy {
  const Field<S>& field;
  Ambient ambient;
  std::map<std::string, TruncatedSeries<S>> vars;

  TruncatedSeries<S> number(const std::string& t) const { return TruncatedSeries<S>::constant(ambient, field.parse(t)); }
  TruncatedSeries<S> variable(const std::string& name) const {
    auto it = vars.find(name);
    require(it != vars.end(), "unknown variable '" + name + "'");
    return it->second;
  }
  TruncatedSeries<S> add(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) const { return a + b; }
  TruncatedSeries<S> sub(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) const { return a - b; }
  TruncatedSeries<S> mul(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) const { return series_mul(a, b); }
  TruncatedSeries<S> div(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) const {
    return series_mul(a, series_inverse(b));
  }
  TruncatedSeries<S> neg(const TruncatedSeries<S>& a) const { return -a; }
  TruncatedSeries<S> pow(const TruncatedSeries<S>& a, unsigned e) const { return series_pow(a, e, field.one()); }
};

// Series in t1..tr for an expression, at the given ambient.
template <class S>
TruncatedSeries<S> series_from_expression(const std::string& text, Ambient amb, const Field<S>& field,
                                          const std::map<std::string, TruncatedSeries<S>>& extra = {}) {
  SeriesPolicy<S> pol{field, amb, extra};
  for (int i = 0; i < amb.branches; ++i)
    pol.vars.emplace("t" + std::to_string(i + 1), TruncatedSeries<S>::monomial(amb, i, 1, field.one()));
  return evaluate<TruncatedSeries<S>>(*parse_expression(text), pol);
}

template <class S>
LocalModel<S> local_model(SingularityType type, const Field<S>& field, int truncation) {
  require(type.concrete(), "local models exist only for concrete types, not " + type.label());
  const TypeInfo& info = type_info(type.id());
  LocalModel<S> m{type, Ambient{info.branches, truncation}, {}, {}, {}, {}};
  for (const auto& [name, expr] : info.generators) {
    m.names.push_back(name);
    m.generators.push_back(series_from_expression(expr, m.ambient, field));
  }
  m.relations.assign(info.relations.begin(), info.relations.end());
  for (const std::string& s : info.semigroup) m.semigroup.push_back(parse_semigroup_element(s));
  return m;
}

// Each relation evaluated on the generators; all must vanish.
template <class S>
std::vector<TruncatedSeries<S>> relation_values(const LocalModel<S>& m, const Field<S>& field) {
  std::map<std::string, TruncatedSeries<S>> bind;
  for (size_t i = 0; i < m.names.size(); ++i) bind.emplace(m.names[i], m.generators[i]);
  std::vector<TruncatedSeries<S>> out;
  for (const std::string& rel : m.relations) {
    SeriesPolicy<S> pol{field, m.ambient, bind};
    out.push_back(evaluate<TruncatedSeries<S>>(*parse_expression(rel), pol));
  }
  return out;
}

}  // namespace projsing
