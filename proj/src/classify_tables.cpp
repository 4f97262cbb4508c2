#include "projsing/singularity_type.hpp"

namespace projsing {

namespace {

using G = std::pair<std::string, std::string>;

std::vector<TypeInfo> build_types() {
  std::vector<TypeInfo> t;
  // delta = 1
  t.push_back({TypeId::T1_1, "1.1", 1, 1, "cusp",
               {{{1}, 0}, {{2}, 1}},
               {G{"x", "t1^2"}, G{"y", "t1^3"}},
               {"x^3 - y^2"},
               {"(2)", "(3)"}, 1, -1});
  t.push_back({TypeId::T1_2, "1.2", 1, 2, "node",
               {{{1, 1}, 1}},
               {G{"x", "t1"}, G{"y", "t2"}},
               {"x*y"},
               {"(inf,1)", "(1,inf)"}, 1, -2});
  // delta = 2
  t.push_back({TypeId::T2_1a, "2.1.a", 2, 1, "(3,4,5)-cusp",
               {{{1}, 0}, {{2}, 1}, {{3}, 2}},
               {G{"x1", "t1^3"}, G{"x2", "t1^4"}, G{"x3", "t1^5"}},
               {"x1*x3 - x2^2", "x1^3 - x2*x3", "x1^2*x2 - x3^2"},
               {"(3)", "(4)", "(5)"}, 2, -1});
  t.push_back({TypeId::T2_1b, "2.1.b", 2, 1, "rhamphoid cusp",
               {{{1}, 0}, {{2}, 1}, {{4}, 2}},
               {G{"x", "t1^2"}, G{"y", "t1^5"}},
               {"x^5 - y^2"},
               {"(2)", "(4)", "(5)"}, 2, -2});
  t.push_back({TypeId::T2_2a, "2.2.a", 2, 2, "tacnode",
               {{{1, 1}, 1}, {{2, 2}, 2}},
               {G{"x", "t1 + t2"}, G{"y", "t2^2"}},
               {"y*(x^2 - y)"},
               {"(inf,2)", "(inf,3)", "(2,inf)", "(3,inf)", "(1,1)"}, 2, -3});
  t.push_back({TypeId::T2_2b, "2.2.b", 2, 2, "cusp with smooth branch",
               {{{1, 1}, 1}, {{2, 1}, 2}},
               {G{"x", "t2"}, G{"y", "t1^2"}, G{"z", "t1^3"}},
               {"x*y", "x*z", "y^3 - z^2"},
               {"(2,inf)", "(3,inf)", "(inf,1)"}, 2, -2});
  t.push_back({TypeId::T2_3, "2.3", 2, 3, "ordinary triple point",
               {{{1, 1, 1}, 2}},
               {G{"x", "t1"}, G{"y", "t2"}, G{"z", "t3"}},
               {"x*y", "x*z", "y*z"},
               {"(1,inf,inf)", "(inf,1,inf)", "(inf,inf,1)"}, 2, -3});
  // delta = 3, one branch
  t.push_back({TypeId::T3_1a, "3.1.a", 3, 1, "(4,5,6,7)-cusp",
               {{{1}, 0}, {{2}, 1}, {{3}, 2}, {{4}, 3}},
               {G{"x1", "t1^4"}, G{"x2", "t1^5"}, G{"x3", "t1^6"}, G{"x4", "t1^7"}},
               {"x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2", "x1^2*x3 - x4^2", "x1^2*x2 - x3*x4",
                "x1^3 - x2*x4"},
               {"(4)", "(5)", "(6)", "(7)"}, 3, -1});
  t.push_back({TypeId::T3_1b, "3.1.b", 3, 1, "(3,5,7)-cusp",
               {{{1}, 0}, {{2}, 1}, {{3}, 2}, {{5}, 3}},
               {G{"x1", "t1^3"}, G{"x2", "t1^5"}, G{"x3", "t1^7"}},
               {"x1*x3 - x2^2", "x1^3*x2 - x3^2", "x2*x3 - x1^4"},
               {"(3)", "(5)", "(7)"}, 3, -2});
  t.push_back({TypeId::T3_1c, "3.1.c", 3, 1, "(3,4)-cusp",
               {{{1}, 0}, {{2}, 1}, {{3}, 2}, {{6}, 3}},
               {G{"x", "t1^3"}, G{"y", "t1^4"}},
               {"x^4 - y^3"},
               {"(3)", "(4)"}, 3, -3});
  t.push_back({TypeId::T3_1d, "3.1.d", 3, 1, "(2,7)-cusp",
               {{{1}, 0}, {{2}, 1}, {{4}, 2}, {{6}, 3}},
               {G{"x", "t1^2"}, G{"y", "t1^7"}},
               {"x^7 - y^2"},
               {"(2)", "(7)"}, 2, -2});
  // delta = 3, two branches
  t.push_back({TypeId::T3_2a, "3.2.a", 3, 2, "(3,4,5)-cusp with smooth branch",
               {{{1, 1}, 1}, {{2, 1}, 2}, {{3, 1}, 3}},
               {G{"x1", "t1^3"}, G{"x2", "t1^4"}, G{"x3", "t1^5"}, G{"y", "t2"}},
               {"x1*y", "x2*y", "x3*y", "x1*x3 - x2^2", "x1^3 - x2*x3", "x1^2*x2 - x3^2"},
               {"(3,inf)", "(4,inf)", "(5,inf)", "(inf,1)"}, 3, -2});
  t.push_back({TypeId::T3_2b, "3.2.b", 3, 2, "rhamphoid cusp with smooth branch",
               {{{1, 1}, 1}, {{2, 1}, 2}, {{4, 1}, 3}},
               {G{"x1", "t1^2"}, G{"x2", "t1^5"}, G{"y", "t2"}},
               {"x1*y", "x2*y", "x1^5 - x2^2"},
               {"(2,inf)", "(5,inf)", "(inf,1)"}, 3, -3});
  t.push_back({TypeId::T3_2c, "3.2.c", 3, 2, "two independent cusps",
               {{{1, 1}, 1}, {{2, 1}, 2}, {{1, 2}, 2}, {{2, 2}, 3}},
               {G{"x1", "t1^2"}, G{"x2", "t1^3"}, G{"y1", "t2^2"}, G{"y2", "t2^3"}},
               {"x1*y1", "x1*y2", "x2*y1", "x2*y2", "x1^3 - x2^2", "y1^3 - y2^2"},
               {"(2,inf)", "(3,inf)", "(inf,2)", "(inf,3)"}, 3, -2});
  t.push_back({TypeId::T3_2d, "3.2.d", 3, 2, "cusp with collinear smooth branch",
               {{{1, 1}, 1}, {{2, 1}, 2}, {{3, 2}, 3}},
               {G{"x", "t1^2 + t2"}, G{"y", "t1^3"}, G{"z", "t2^2"}},
               {"y*z", "z*(x^2 - z)", "x^3 - y^2 - x*z"},
               {"(3,inf)", "(4,inf)", "(5,inf)", "(inf,2)", "(inf,3)", "(2,1)"}, 3, -3});
  t.push_back({TypeId::T3_2e, "3.2.e", 3, 2, "cusp with coplanar smooth branch",
               {{{1, 1}, 1}, {{2, 1}, 2}, {{4, 2}, 3}},
               {G{"x", "t1^3 + t2"}, G{"y", "t1^2"}},
               {"y*(x^2 - y^3)"},
               {"(2,inf)", "(5,inf)", "(inf,2)", "(inf,3)", "(3,1)"}, 3, -4});
  t.push_back({TypeId::T3_2f, "3.2.f", 3, 2, "node with third order contact",
               {{{1, 1}, 1}, {{2, 2}, 2}, {{3, 3}, 3}},
               {G{"x", "t1 + t2"}, G{"y", "t1^3"}},
               {"y*(x^3 - y)"},
               {"(3,inf)", "(4,inf)", "(5,inf)", "(inf,3)", "(inf,4)", "(inf,5)", "(1,1)"}, 2, -3});
  // delta = 3, three or four branches
  t.push_back({TypeId::T3_3a, "3.3.a", 3, 3, "cusp with two smooth branches",
               {{{1, 1, 1}, 2}, {{1, 1, 2}, 3}},
               {G{"x1", "t1"}, G{"x2", "t2"}, G{"y", "t3^2"}, G{"z", "t3^3"}},
               {"x1*x2", "x1*y", "x1*z", "x2*y", "x2*z", "y^3 - z^2"},
               {"(1,inf,inf)", "(inf,1,inf)", "(inf,inf,2)", "(inf,inf,3)"}, 3, -3});
  t.push_back({TypeId::T3_3b, "3.3.b", 3, 3, "tacnode with extra smooth branch",
               {{{1, 1, 1}, 2}, {{1, 2, 2}, 3}},
               {G{"x", "t1"}, G{"y", "t2^2"}, G{"z", "t2 + t3"}},
               {"x*y", "x*z", "y*(z^2 - y)"},
               {"(1,inf,inf)", "(inf,2,inf)", "(inf,3,inf)", "(inf,inf,2)", "(inf,inf,3)", "(1,1,1)"}, 3, -4});
  t.push_back({TypeId::T3_3c, "3.3.c", 3, 3, "planar triple point",
               {{{1, 1, 1}, 2}, {{2, 2, 2}, 3}},
               {G{"x", "t1 + t2"}, G{"y", "t1 + t3"}},
               {"x*y*(x - y)"},
               {"(2,inf,inf)", "(inf,2,inf)", "(inf,inf,2)", "(3,inf,inf)", "(inf,3,inf)", "(inf,inf,3)",
                "(1,1,2)", "(1,2,1)", "(2,1,1)"},
               3, -5});
  t.push_back({TypeId::T3_4, "3.4", 3, 4, "ordinary quadruple point",
               {{{1, 1, 1, 1}, 3}},
               {G{"x", "t1"}, G{"y", "t2"}, G{"z", "t3"}, G{"w", "t4"}},
               {"x*y", "x*z", "x*w", "y*z", "y*w", "z*w"},
               {"(1,inf,inf,inf)", "(inf,1,inf,inf)", "(inf,inf,1,inf)", "(inf,inf,inf,1)"}, 3, -4});
  return t;
}

std::vector<VsRow> build_vs() {
  using T = SingularityType;
  return {
      {T(TypeId::T1_1), 1, {{{2}, 1}, {{4}, 1}}},
      {T(TypeId::T1_2), 2, {{{1, 1}, 1}, {{2, 2}, 1}}},
      {T(TypeId::T2_1a), 1, {{{3}, 2}, {{5}, 2}}},
      {T(TypeId::Ambiguous_2_1b_3_1d), 1, {{{2}, 1}, {{3}, 1}, {{4}, 2}}},
      {T(TypeId::Ambiguous_2_2a_3_2f), 2, {{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 2}}},
      {T(TypeId::T2_2b), 2, {{{2, 1}, 2}, {{4, 2}, 2}}},
      {T(TypeId::T2_3), 3, {{{1, 1, 1}, 2}, {{2, 2, 2}, 2}}},
      {T(TypeId::T3_1a), 1, {{{4}, 3}}},
      {T(TypeId::T3_1b), 1, {{{3}, 2}, {{4}, 2}, {{5}, 3}}},
      {T(TypeId::T3_1c), 1, {{{3}, 2}, {{5}, 2}, {{6}, 3}}},
      {T(TypeId::T3_2a), 2, {{{3, 1}, 3}}},
      {T(TypeId::T3_2b), 2, {{{2, 1}, 2}, {{3, 2}, 2}, {{4, 1}, 3}}},
      {T(TypeId::T3_2c), 2, {{{2, 2}, 3}}},
      {T(TypeId::T3_2d), 2, {{{2, 1}, 2}, {{2, 2}, 2}, {{3, 1}, 2}, {{3, 2}, 3}}},
      {T(TypeId::T3_2e), 2, {{{2, 1}, 2}, {{3, 2}, 2}, {{4, 1}, 2}, {{4, 2}, 3}}},
      {T(TypeId::T3_3a), 3, {{{1, 1, 2}, 3}}},
      {T(TypeId::T3_3b), 3, {{{1, 1, 1}, 2}, {{1, 1, 2}, 2}, {{1, 2, 1}, 2}, {{2, 1, 1}, 2}, {{1, 2, 2}, 3}}},
      {T(TypeId::T3_3c), 3, {{{1, 1, 1}, 2}, {{1, 2, 2}, 2}, {{2, 1, 2}, 2}, {{2, 2, 1}, 2}, {{2, 2, 2}, 3}}},
      {T(TypeId::T3_4), 4, {{{1, 1, 1, 1}, 3}}},
  };
}

}  // namespace

const std::vector<TypeInfo>& type_table() {
  static const std::vector<TypeInfo> table = build_types();
  return table;
}

const TypeInfo& type_info(TypeId id) {
  for (const TypeInfo& t : type_table())
    if (t.id == id) return t;
  fail(ErrorKind::Validation, "no table entry for this type");
}

const std::vector<VsRow>& vs_table() {
  static const std::vector<VsRow> table = build_vs();
  return table;
}

}  // namespace projsing
