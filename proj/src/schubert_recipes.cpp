#include "projsing/schubert.hpp"

namespace projsing {

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

bool is_hidden_type(SingularityType type) { return type.id() == TypeId::T3_1d || type.id() == TypeId::T3_2f; }

const VsRow& recipe_row(SingularityType type) {
  for (const VsRow& row : vs_table()) {
    if (row.result == type) return row;
    if (row.result.ambiguous()) {
      const auto [a, b] = row.result.members();
      if (a == type || b == type) return row;
    }
  }
  fail(ErrorKind::Validation, "no vector-space row for " + type.label());
}

namespace {

bool leq(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// (a, ka) forces (b, kb): growing F^alpha keeps the intersection, and
// shrinking it by c dimensions loses at most c.
bool implies(const ClosedCondition& a, const ClosedCondition& b) {
  if (leq(a.alpha, b.alpha) && a.k >= b.k) return true;
  if (leq(b.alpha, a.alpha) && a.k - (weight(a.alpha) - weight(b.alpha)) >= b.k) return true;
  return false;
}

}  // namespace

std::vector<ClosedCondition> closed_conditions(SingularityType type) {
  const VsRow& row = recipe_row(type);
  std::vector<ClosedCondition> all;
  for (const auto& c : row.conditions)
    if (c.value > 0) all.push_back({c.alpha, c.value});
  std::vector<ClosedCondition> out;
  for (size_t i = 0; i < all.size(); ++i) {
    bool implied = false;
    for (size_t j = 0; j < all.size() && !implied; ++j)
      if (j != i && implies(all[j], all[i]) && !(implies(all[i], all[j]) && j > i)) implied = true;
    if (!implied) out.push_back(all[i]);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return weight(a.alpha) < weight(b.alpha); });
  for (size_t i = 1; i < out.size(); ++i)
    ensure(leq(out[i - 1].alpha, out[i].alpha), "closed conditions of " + type.label() + " are not nested");
  return out;
}

std::vector<int> schubert_pivots(const std::vector<ClosedCondition>& conds, int n, int ell) {
  std::vector<int> a;
  for (int i = 1; i <= ell; ++i) {
    int best = n + 1 + i;
    for (const auto& c : conds)
      if (c.k >= i) best = std::min(best, weight(c.alpha) - (c.k - i));
    a.push_back(best);
  }
  for (size_t i = 1; i < a.size(); ++i) ensure(a[i - 1] < a[i], "Schubert pivots must increase");
  return a;
}

Partition schubert_partition(const std::vector<int>& pivots, int n) {
  Partition p;
  for (size_t i = 0; i < pivots.size(); ++i) {
    const int part = n + 2 + static_cast<int>(i) - pivots[i];
    if (part > 0) p.parts.push_back(part);
  }
  return p;
}

int table_codim(SingularityType type, int n) {
  const TypeInfo& t = type_info(type.id());
  return t.codim_n * n + t.codim_const;
}

std::vector<Exponent> recipe_path(const std::vector<ClosedCondition>& conds, int r) {
  std::vector<Exponent> path;
  Exponent cur(static_cast<size_t>(r), 0);
  for (const auto& c : conds) {
    while (cur != c.alpha) {
      for (int i = 0; i < r; ++i)
        if (cur[static_cast<size_t>(i)] < c.alpha[static_cast<size_t>(i)]) {
          ++cur[static_cast<size_t>(i)];
          path.push_back(cur);
        }
    }
  }
  return path;
}

ConfigurationCodim configuration_codim(const std::vector<SingularityType>& types, int d, int n) {
  const int ell = d - n;
  require(n >= 1 && ell >= 1, "need 1 <= n < d");
  int delta = 0;
  ConfigurationCodim out;
  for (const auto& t : types) {
    require(t.concrete() && !t.smooth(), "configuration types must be concrete singularities");
    delta += t.delta();
    out.codim += table_codim(t, n);
  }
  if (delta > ell)
    fail(ErrorKind::Hypothesis, "configuration is infeasible: sum of delta " + std::to_string(delta) + " > l = " + std::to_string(ell));
  out.family_dim = ell * (n + 1) - out.codim;
  return out;
}

}  // namespace projsing
