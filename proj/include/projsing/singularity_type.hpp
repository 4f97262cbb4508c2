#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "projsing/gap_function.hpp"

namespace projsing {

enum class TypeId {
  T1_1, T1_2,
  T2_1a, T2_1b, T2_2a, T2_2b, T2_3,
  T3_1a, T3_1b, T3_1c, T3_1d,
  T3_2a, T3_2b, T3_2c, T3_2d, T3_2e, T3_2f,
  T3_3a, T3_3b, T3_3c, T3_4,
  Ambiguous_2_1b_3_1d,
  Ambiguous_2_2a_3_2f,
  Smooth
};

class SingularityType {
 public:
  SingularityType() : id_(TypeId::Smooth) {}
  explicit SingularityType(TypeId id) : id_(id) {}

  // Accepts the case IDs ("2.2.b"), "smooth", the pair labels
  // ("2.1.b|3.1.d") and "3.3.d" as an alias for the quadruple point.
  static SingularityType parse(std::string_view label);

  TypeId id() const { return id_; }
  std::string label() const;
  std::string description() const;
  bool concrete() const;
  bool ambiguous() const { return id_ == TypeId::Ambiguous_2_1b_3_1d || id_ == TypeId::Ambiguous_2_2a_3_2f; }
  bool smooth() const { return id_ == TypeId::Smooth; }
  int delta() const;                       // errors for ambiguous pairs
  std::pair<int, int> delta_range() const; // (2,3) for ambiguous pairs
  int branches() const;
  // the two members of an ambiguous pair
  std::pair<SingularityType, SingularityType> members() const;

  friend bool operator==(const SingularityType& a, const SingularityType& b) { return a.id_ == b.id_; }
  friend bool operator!=(const SingularityType& a, const SingularityType& b) { return a.id_ != b.id_; }
  friend bool operator<(const SingularityType& a, const SingularityType& b) { return a.id_ < b.id_; }

 private:
  TypeId id_;
};

// lambda(alpha) == value, as used by the highlight lists and the
// vector-space conditions.
struct GapCondition {
  Exponent alpha;
  int value;
};

struct TypeInfo {
  TypeId id;
  const char* label;
  int delta;
  int branches;
  const char* description;
  std::vector<GapCondition> highlights;  // positions where lambda jumps in every direction
  std::vector<std::pair<std::string, std::string>> generators;  // name, expression in t1..t4
  std::vector<std::string> relations;
  std::vector<std::string> semigroup;  // marked elements, "inf" for a vanishing branch
  int codim_n, codim_const;            // stratum codimension codim_n * n + codim_const
};

// The 21 concrete types, in table order.
const std::vector<TypeInfo>& type_table();
const TypeInfo& type_info(TypeId id);

struct VsRow {
  SingularityType result;
  int branches;
  std::vector<GapCondition> conditions;
};

// Conditions on lambda' of a unit-containing space, one row per outcome.
const std::vector<VsRow>& vs_table();

// "(2,inf)" -> {2, nullopt}
std::vector<std::optional<int>> parse_semigroup_element(std::string_view text);

}  // namespace projsing
