#pragma once

#include <map>
#include <string>
#include <vector>

#include "projsing/projection.hpp"

namespace projsing {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, zeros dropped
  int size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  std::string to_string() const;
};

// dim(L cap F^alpha) >= k
struct ClosedCondition {
  Exponent alpha;
  int k;
};

// The vector-space row that governs `type` (ambiguous pairs share a row).
const VsRow& recipe_row(SingularityType type);
// Closed conditions of that row with implied ones removed, nested by alpha.
std::vector<ClosedCondition> closed_conditions(SingularityType type);
// Schubert pivots a_1 < ... < a_l (1-based, in a flag of length n + l + 1).
std::vector<int> schubert_pivots(const std::vector<ClosedCondition>& conds, int n, int ell);
Partition schubert_partition(const std::vector<int>& pivots, int n);
// Table codimension of the stratum, codim_n * n + codim_const.
int table_codim(SingularityType type, int n);
// Lattice path 0 -> last condition through every condition, steps round-robin.
std::vector<Exponent> recipe_path(const std::vector<ClosedCondition>& conds, int r);
// Types whose general stratum point needs a dedicated sampler.
bool is_hidden_type(SingularityType type);

struct ConfigurationCodim {
  int codim = 0;       // sum of table codimensions
  int family_dim = 0;  // dim G(l, V) - sum (|partition_i| - r_i)
};

ConfigurationCodim configuration_codim(const std::vector<SingularityType>& types, int d, int n);

template <class S>
struct SchubertSpec {
  SingularityType type;
  std::vector<CurvePoint<S>> points;
  int d = 0, n = 0, ell = 0;
  std::vector<ClosedCondition> conditions;
  std::vector<int> pivots;
  Partition partition;
  int codim = 0;               // table codimension, |partition| - r
  std::vector<Exponent> path;  // exponents of the constrained flag
  Matrix<S> adapted;           // row k spans F^{path[k]} with rows 0..k-1
  int rows_used() const {      // rows of L this cluster constrains
    int k = 0;
    for (const auto& c : conditions) k = std::max(k, c.k);
    return k;
  }
};

template <CurveModel C>
SchubertSpec<typename C::Scalar> stratum_spec(SingularityType type, const std::vector<CurvePoint<typename C::Scalar>>& points,
                                              const C& x, int n) {
  using S = typename C::Scalar;
  require(type.concrete(), "stratum_spec needs a concrete singularity type");
  require(!type.smooth(), "the smooth type has no stratum");
  const int d = x.degree();
  const int ell = x.dim() - n - 1;
  require(static_cast<int>(points.size()) == type.branches(),
          type.label() + " needs " + std::to_string(type.branches()) + " points");
  if (n <= 2) fail(ErrorKind::Hypothesis, "stratum construction needs n > 2");
  if (ell > 3 || ell < 1) fail(ErrorKind::Hypothesis, "stratum construction needs 1 <= l <= 3");
  if (2 * ell >= d - 2 * x.genus()) fail(ErrorKind::Hypothesis, "stratum construction needs 2l < d - 2rho_g");
  if (type.delta() > ell)
    fail(ErrorKind::Hypothesis, type.label() + " has delta " + std::to_string(type.delta()) + " > l = " + std::to_string(ell));
  (void)Multifiltration<S>(points);  // distinctness

  SchubertSpec<S> spec;
  spec.type = type;
  spec.points = points;
  spec.d = d;
  spec.n = n;
  spec.ell = ell;
  spec.conditions = closed_conditions(type);
  spec.pivots = schubert_pivots(spec.conditions, n, ell);
  spec.partition = schubert_partition(spec.pivots, n);
  spec.codim = table_codim(type, n);
  ensure(spec.partition.size() - type.branches() == spec.codim,
         "partition of " + type.label() + " does not match the table codimension");
  spec.path = recipe_path(spec.conditions, type.branches());
  spec.adapted = zero_matrix<S>(static_cast<Index>(spec.path.size()), x.dim());
  Exponent prev(points.size(), 0);
  for (size_t k = 0; k < spec.path.size(); ++k) {
    size_t i = 0;
    while (spec.path[k][i] == prev[i]) ++i;
    const int m = spec.path[k][i];
    spec.adapted.row(static_cast<Index>(k)) = x.expansion(points[i], m).col(m - 1).transpose();
    prev = spec.path[k];
  }
  ensure(rank<S>(spec.adapted) == spec.adapted.rows(), "osculating data of the recipe is not in general position");
  return spec;
}

namespace detail {

// v_1..v_N: the recipe flag completed by random vectors.
template <class S>
Matrix<S> complete_flag(const Matrix<S>& head, Index dim, const Field<S>& field, Rng& rng) {
  Matrix<S> full = head;
  while (full.rows() < dim) {
    Matrix<S> v(1, dim);
    for (Index j = 0; j < dim; ++j) v(0, j) = field.random(rng);
    Matrix<S> next = vstack<S>(full, v);
    if (rank<S>(next) == next.rows()) full = std::move(next);
  }
  return full;
}

// Rows w_i = v_{a_i} + sum over non-pivot b < a_i of random multiples of v_b.
template <class S>
Matrix<S> cell_rows(const Matrix<S>& flag, const std::vector<int>& pivots, int count, const Field<S>& field, Rng& rng) {
  Matrix<S> w = zero_matrix<S>(count, flag.cols());
  for (int i = 0; i < count; ++i) {
    const int a = pivots[static_cast<size_t>(i)];
    w.row(i) = flag.row(a - 1);
    for (int b = 1; b < a; ++b)
      if (std::find(pivots.begin(), pivots.end(), b) == pivots.end()) w.row(i) += field.random(rng) * flag.row(b - 1);
  }
  return w;
}

template <class S>
TruncatedSeries<S> random_unit_jet(Ambient amb, const Field<S>& field, Rng& rng) {
  TruncatedSeries<S> s(amb);
  for (int b = 0; b < amb.branches; ++b) {
    s.coeff(b, 0) = field.random_nonzero(rng);
    for (int e = 1; e < amb.truncation; ++e) s.coeff(b, e) = field.random(rng);
  }
  return s;
}

// Sections with the given jets at `points` (truncation amb.truncation), plus
// every section whose jets all vanish.
template <class S, CurveModel C>
Matrix<S> lift_jets(const C& x, const std::vector<CurvePoint<S>>& points, const std::vector<TruncatedSeries<S>>& jets) {
  const Ambient amb = jets.front().ambient();
  Matrix<S> functionals(0, x.dim());
  for (const auto& p : points) functionals = vstack<S>(functionals, Matrix<S>(x.expansion(p, amb.truncation).transpose()));
  Matrix<S> out = kernel<S>(functionals);
  for (const auto& j : jets) {
    const auto sol = solve_particular<S>(functionals, j.coefficients());
    ensure(sol.has_value(), "jet conditions are inconsistent");
    Matrix<S> row(1, x.dim());
    row.row(0) = sol->transpose();
    out = vstack<S>(out, row);
  }
  return out;
}

// (2,7)-cusp: R' = <1, t^2 + b3 t^3 + b4 t^4 + b5 t^5, t^4 + 2 b3 t^5> mod t^6.
// Node with third order contact: R' = <1, (t1 + p t1^2, q t2 + r t2^2),
// (t1^2, q^2 t2^2)> mod (t1^3, t2^3).
template <class S, CurveModel C>
Matrix<S> hidden_forms(const SchubertSpec<S>& spec, const C& x, const Field<S>& field, Rng& rng) {
  std::vector<TruncatedSeries<S>> gens;
  Ambient amb{1, 6};
  if (spec.type.id() == TypeId::T3_1d) {
    const S b3 = field.random(rng), b4 = field.random(rng), b5 = field.random(rng);
    TruncatedSeries<S> g2(amb), g4(amb);
    g2.coeff(0, 2) = field.one();
    g2.coeff(0, 3) = b3;
    g2.coeff(0, 4) = b4;
    g2.coeff(0, 5) = b5;
    g4.coeff(0, 4) = field.one();
    g4.coeff(0, 5) = field.from_int(2) * b3;
    gens = {TruncatedSeries<S>::constant(amb, field.one()), g2, g4};
  } else {
    amb = Ambient{2, 3};
    const S p = field.random(rng), q = field.random_nonzero(rng), r = field.random(rng);
    TruncatedSeries<S> gx(amb), gy(amb);
    gx.coeff(0, 1) = field.one();
    gx.coeff(0, 2) = p;
    gx.coeff(1, 1) = q;
    gx.coeff(1, 2) = r;
    gy.coeff(0, 2) = field.one();
    gy.coeff(1, 2) = q * q;
    gens = {TruncatedSeries<S>::constant(amb, field.one()), gx, gy};
  }
  const TruncatedSeries<S> s = random_unit_jet(amb, field, rng);
  for (auto& g : gens) g = series_mul(s, g);
  return lift_jets(x, spec.points, gens);
}

}  // namespace detail

template <class S>
struct SampledCenter {
  ProjectionCenter<S> center;
  std::vector<Matrix<S>> flags;  // full adapted flag per cluster (empty for hidden types)
};

// One draw from the open cell of the intersection of the clusters' Schubert
// varieties.  No boundary check; see sample_stratum.
template <class S, CurveModel C>
SampledCenter<S> sample_center(const std::vector<SchubertSpec<S>>& specs, const C& x, const Field<S>& field, Rng& rng) {
  require(!specs.empty(), "no clusters requested");
  const int ell = specs.front().ell;
  int used = 0, delta = 0;
  for (const auto& s : specs) {
    require(s.ell == ell && s.d == x.degree(), "cluster specs disagree on (d, n)");
    used += s.rows_used();
    delta += s.type.delta();
    for (const auto& t : specs)
      if (&t != &s)
        for (const auto& p : s.points)
          require(std::find(t.points.begin(), t.points.end(), p) == t.points.end(), "cluster points must be distinct");
  }
  if (delta > ell)
    fail(ErrorKind::Hypothesis, "sum of delta " + std::to_string(delta) + " exceeds l = " + std::to_string(ell));
  int hidden = 0;
  for (const auto& s : specs) hidden += is_hidden_type(s.type) ? 1 : 0;
  if (hidden) {
    require(specs.size() == 1, "hidden types occupy the whole center");
    return {ProjectionCenter<S>::from_forms(detail::hidden_forms(specs.front(), x, field, rng)), {}};
  }
  ensure(used <= ell, "cluster rows exceed l");
  SampledCenter<S> out;
  Matrix<S> rows(0, x.dim());
  for (const auto& s : specs) {
    out.flags.push_back(detail::complete_flag<S>(s.adapted, x.dim(), field, rng));
    rows = vstack<S>(rows, detail::cell_rows<S>(out.flags.back(), s.pivots, s.rows_used(), field, rng));
  }
  while (rows.rows() < ell) {
    Matrix<S> v(1, x.dim());
    for (Index j = 0; j < x.dim(); ++j) v(0, j) = field.random(rng);
    rows = vstack<S>(rows, v);
  }
  if (rank<S>(rows) < ell) fail(ErrorKind::Indeterminate, "sampled rows are dependent");
  out.center = ProjectionCenter<S>::from_center(rows);
  for (const auto& s : specs) {
    const Multifiltration<S> f(s.points);
    for (const auto& c : s.conditions)
      ensure(flag_side_lambda(out.center, x, f, c.alpha) >= c.k, "sampled center misses a closed condition");
  }
  return out;
}

struct SampleOptions {
  int max_attempts = 20;
  AnalysisOptions analysis;
};

template <class S>
struct StratumSample {
  ProjectionCenter<S> center;
  ProjectionReport<S> report;
  int attempts = 0;  // draws including the accepted one
};

// Draws until analyze sees exactly the requested clusters and types.
template <class S>
StratumSample<S> sample_stratum(const std::vector<SchubertSpec<S>>& specs, const RationalNormalCurve<S>& x, Rng& rng,
                                const SampleOptions& opt = {}) {
  std::string last;
  for (int attempt = 1; attempt <= opt.max_attempts; ++attempt) {
    SampledCenter<S> draw;
    ProjectionReport<S> rep;
    try {
      draw = sample_center(specs, x, x.field(), rng);
      rep = analyze(draw.center, x, opt.analysis);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Hypothesis && attempt == 1 && std::string(e.what()).find("exceeds") != std::string::npos) throw;
      last = e.what();
      continue;
    }
    bool ok = rep.clusters.size() == specs.size();
    for (const auto& s : specs) {
      bool matched = false;
      for (const auto& c : rep.clusters) {
        if (c.points.size() != s.points.size()) continue;
        bool same = true;
        for (const auto& p : s.points) same = same && std::find(c.points.begin(), c.points.end(), p) != c.points.end();
        if (same) matched = c.type.has_value() && *c.type == s.type;
      }
      ok = ok && matched;
    }
    if (ok) return {draw.center, rep, attempt};
    last = "analysis did not reproduce the requested configuration";
  }
  fail(ErrorKind::Indeterminate, "sampler landed on the boundary " + std::to_string(opt.max_attempts) + " times (" + last + ")");
}

}  // namespace projsing
