#include "projsing/singularity_type.hpp"

namespace projsing {

SingularityType SingularityType::parse(std::string_view label) {
  if (label == "smooth" || label == "Smooth") return SingularityType(TypeId::Smooth);
  if (label == "2.1.b|3.1.d") return SingularityType(TypeId::Ambiguous_2_1b_3_1d);
  if (label == "2.2.a|3.2.f") return SingularityType(TypeId::Ambiguous_2_2a_3_2f);
  if (label == "3.3.d") return SingularityType(TypeId::T3_4);
  for (const TypeInfo& t : type_table())
    if (label == t.label) return SingularityType(t.id);
  fail(ErrorKind::Validation, "unknown singularity type '" + std::string(label) + "'");
}

bool SingularityType::concrete() const { return !ambiguous() && !smooth(); }

std::string SingularityType::label() const {
  switch (id_) {
    case TypeId::Smooth: return "smooth";
    case TypeId::Ambiguous_2_1b_3_1d: return "2.1.b|3.1.d";
    case TypeId::Ambiguous_2_2a_3_2f: return "2.2.a|3.2.f";
    default: return type_info(id_).label;
  }
}

std::string SingularityType::description() const {
  switch (id_) {
    case TypeId::Smooth: return "smooth point";
    case TypeId::Ambiguous_2_1b_3_1d: return "rhamphoid cusp or (2,7)-cusp";
    case TypeId::Ambiguous_2_2a_3_2f: return "tacnode or node with third order contact";
    default: return type_info(id_).description;
  }
}

int SingularityType::delta() const {
  require(!ambiguous(), "ambiguous pair " + label() + " has no single delta");
  if (smooth()) return 0;
  return type_info(id_).delta;
}

std::pair<int, int> SingularityType::delta_range() const {
  if (ambiguous()) return {2, 3};
  const int d = delta();
  return {d, d};
}

int SingularityType::branches() const {
  switch (id_) {
    case TypeId::Smooth: return 1;
    case TypeId::Ambiguous_2_1b_3_1d: return 1;
    case TypeId::Ambiguous_2_2a_3_2f: return 2;
    default: return type_info(id_).branches;
  }
}

std::pair<SingularityType, SingularityType> SingularityType::members() const {
  if (id_ == TypeId::Ambiguous_2_1b_3_1d) return {SingularityType(TypeId::T2_1b), SingularityType(TypeId::T3_1d)};
  if (id_ == TypeId::Ambiguous_2_2a_3_2f) return {SingularityType(TypeId::T2_2a), SingularityType(TypeId::T3_2f)};
  return {*this, *this};
}

std::vector<std::optional<int>> parse_semigroup_element(std::string_view text) {
  require(text.size() >= 2 && text.front() == '(' && text.back() == ')', "bad semigroup element");
  std::vector<std::optional<int>> out;
  std::string_view body = text.substr(1, text.size() - 2);
  while (true) {
    const auto comma = body.find(',');
    const std::string_view part = body.substr(0, comma);
    if (part == "inf")
      out.push_back(std::nullopt);
    else
      out.push_back(std::stoi(std::string(part)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace projsing
