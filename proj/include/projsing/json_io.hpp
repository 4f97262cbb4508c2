#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "projsing/expression.hpp"
#include "projsing/projection.hpp"

namespace projsing {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

std::string error_kind_name(ErrorKind k);
Json type_json(SingularityType t);
// Rejects keys outside `allowed`.
void check_keys(const Json& obj, const std::vector<std::string>& allowed, const std::string& where);

// Rationals as "p/q" strings, prime-field elements as integers in [0, p).
template <class S>
Json scalar_json(const S& x) {
  if constexpr (std::is_same_v<S, Fp>)
    return x.residue();
  else
    return to_string(x);
}

template <class S>
S scalar_from_json(const Json& j, const Field<S>& field) {
  if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return field.parse(std::to_string(j.get<std::uint64_t>()));
  require(j.is_string(), "scalar must be an integer or a \"p/q\" string");
  return field.parse(j.get<std::string>());
}

template <class S>
Json point_json(const CurvePoint<S>& p) {
  return Json::array({scalar_json(p.a()), scalar_json(p.b())});
}

template <class S>
CurvePoint<S> point_from_json(const Json& j, const Field<S>& field) {
  require(j.is_array() && j.size() == 2, "point must be [a, b] for (a : b)");
  return CurvePoint<S>(scalar_from_json(j[0], field), scalar_from_json(j[1], field));
}

template <class S>
Json matrix_json(const Matrix<S>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(scalar_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class S>
Matrix<S> matrix_from_json(const Json& j, const Field<S>& field, Index cols, const std::string& what) {
  require(j.is_array() && !j.empty(), what + " must be a non-empty array of rows");
  Matrix<S> m(static_cast<Index>(j.size()), cols);
  for (size_t i = 0; i < j.size(); ++i) {
    require(j[i].is_array() && static_cast<Index>(j[i].size()) == cols,
            what + " rows must have " + std::to_string(cols) + " entries");
    for (Index k = 0; k < cols; ++k) m(static_cast<Index>(i), k) = scalar_from_json(j[i][static_cast<size_t>(k)], field);
  }
  return m;
}

// Binary forms in x, y; coordinates in the basis x^d, x^{d-1} y, ..., y^d.
template <class S>
struct FormPolicy {
  using Terms = std::map<std::pair<int, int>, S>;  // (deg x, deg y) -> coefficient
  const Field<S>& field;

  static Terms clean(Terms t) {
    for (auto it = t.begin(); it != t.end();) it = is_zero(it->second) ? t.erase(it) : std::next(it);
    return t;
  }
  Terms number(const std::string& s) const { return clean({{{0, 0}, field.parse(s)}}); }
  Terms variable(const std::string& v) const {
    if (v == "x") return {{{1, 0}, field.one()}};
    if (v == "y") return {{{0, 1}, field.one()}};
    fail(ErrorKind::Validation, "binary forms use the variables x and y, not '" + v + "'");
  }
  Terms add(Terms a, const Terms& b) const {
    for (const auto& [k, c] : b) a[k] = a.count(k) ? a[k] + c : c;
    return clean(std::move(a));
  }
  Terms neg(Terms a) const {
    for (auto& [k, c] : a) c = -c;
    return a;
  }
  Terms sub(Terms a, const Terms& b) const { return add(std::move(a), neg(b)); }
  Terms mul(const Terms& a, const Terms& b) const {
    Terms out;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) {
        const std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
        out[k] = out.count(k) ? out[k] + ca * cb : ca * cb;
      }
    return clean(std::move(out));
  }
  Terms div(const Terms& a, const Terms& b) const {
    require(b.size() == 1 && b.begin()->first == std::make_pair(0, 0), "forms may only be divided by constants");
    const S inv = inverse(b.begin()->second);
    Terms out = a;
    for (auto& [k, c] : out) c = c * inv;
    return out;
  }
  Terms pow(const Terms& a, unsigned e) const {
    Terms out{{{0, 0}, field.one()}};
    for (unsigned i = 0; i < e; ++i) out = mul(out, a);
    return out;
  }
};

template <class S>
Vector<S> form_from_expression(const std::string& text, int d, const Field<S>& field) {
  FormPolicy<S> pol{field};
  const auto terms = evaluate<typename FormPolicy<S>::Terms>(*parse_expression(text), pol);
  Vector<S> v(d + 1);
  for (int j = 0; j <= d; ++j) v(j) = field.zero();
  for (const auto& [k, c] : terms) {
    require(k.first + k.second == d, "form '" + text + "' is not homogeneous of degree " + std::to_string(d));
    v(k.second) = c;
  }
  return v;
}

template <class S>
std::string form_to_string(const Vector<S>& v) {
  const int d = static_cast<int>(v.size()) - 1;
  std::string out;
  for (int j = 0; j <= d; ++j) {
    if (is_zero(v(j))) continue;
    std::string mono;
    if (d - j > 0) mono += "x" + (d - j > 1 ? "^" + std::to_string(d - j) : "");
    if (j > 0) mono += (mono.empty() ? "" : "*") + std::string("y") + (j > 1 ? "^" + std::to_string(j) : "");
    const std::string c = to_string(v(j));
    if (!out.empty()) out += " + ";
    if (mono.empty())
      out += c;
    else if (c == "1")
      out += mono;
    else
      out += "(" + c + ")*" + mono;
  }
  return out.empty() ? "0" : out;
}

template <class S>
Json cluster_json(const ClusterReport<S>& c) {
  Json j;
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(point_json(p));
  j["points"] = std::move(pts);
  j["branches"] = c.points.size();
  j["delta"] = c.delta;
  j["type"] = c.type ? Json(c.type->label()) : Json("unclassified");
  j["description"] = c.type ? Json(c.type->description()) : Json(nullptr);
  j["vs_row"] = c.vs_row ? Json(c.vs_row->label()) : Json(nullptr);
  j["standard"] = c.standard;
  j["dual_path_checks"] = c.dual_checks;
  Json lam = Json::array();
  for (const auto& [a, v] : c.lambda) lam.push_back(Json{{"alpha", a}, {"value", v}});
  j["lambda"] = std::move(lam);
  return j;
}

inline Json bound_json(const BoundVerdict& v) {
  Json j;
  j["pass"] = v.pass;
  j["hypotheses_hold"] = v.hypotheses_hold;
  j["delta_total"] = v.delta_total;
  j["ell"] = v.ell;
  j["d_minus_n"] = v.castelnuovo ? Json(*v.castelnuovo) : Json(nullptr);
  j["detail"] = v.detail;
  return j;
}

template <class S>
Json report_json(const ProjectionReport<S>& r) {
  Json j;
  j["d"] = r.d;
  j["n"] = r.n;
  j["ell"] = r.ell;
  j["genus"] = r.genus;
  j["hypotheses"] = Json{{"ell_at_most_3", r.hypotheses.ell_at_most_3},
                         {"two_ell_below_d", r.hypotheses.two_ell_below_d},
                         {"n_above_2", r.hypotheses.n_above_2},
                         {"basepoint_free", r.hypotheses.basepoint_free},
                         {"birational", r.hypotheses.birational}};
  Json cl = Json::array();
  for (const auto& c : r.clusters) cl.push_back(cluster_json(c));
  j["clusters"] = std::move(cl);
  j["delta_total"] = r.delta_total;
  j["arithmetic_genus"] = r.genus + r.delta_total;
  j["bound"] = bound_json(verify_genus_bound(r));
  return j;
}

}  // namespace projsing
