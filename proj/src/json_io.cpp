#include "projsing/json_io.hpp"

#include <algorithm>

namespace projsing {

std::string error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Hypothesis: return "hypothesis";
    case ErrorKind::Indeterminate: return "indeterminate";
    case ErrorKind::StabilizationCap: return "stabilization_cap";
    case ErrorKind::NotStabilized: return "not_stabilized";
    case ErrorKind::Internal: return "internal";
  }
  return "internal";
}

Json type_json(SingularityType t) {
  const TypeInfo& info = type_info(t.id());
  Json j;
  j["label"] = t.label();
  j["description"] = t.description();
  j["delta"] = info.delta;
  j["branches"] = info.branches;
  std::string codim = std::to_string(info.codim_n) + "n";
  if (info.codim_n == 1) codim = "n";
  if (info.codim_const) codim += (info.codim_const < 0 ? "-" : "+") + std::to_string(std::abs(info.codim_const));
  j["codimension"] = codim;
  Json gens = Json::object();
  for (const auto& [name, expr] : info.generators) gens[name] = expr;
  j["generators"] = std::move(gens);
  j["relations"] = info.relations;
  j["semigroup"] = info.semigroup;
  return j;
}

void check_keys(const Json& obj, const std::vector<std::string>& allowed, const std::string& where) {
  require(obj.is_object(), where + " must be a JSON object");
  for (const auto& [key, value] : obj.items())
    require(std::find(allowed.begin(), allowed.end(), key) != allowed.end(), "unknown field '" + key + "' in " + where);
}

}  // namespace projsing
