#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "projsing/errors.hpp"

namespace projsing {

// Tiny arithmetic expression language used for local-model generators,
// relation strings and binary forms: + - * / ^, parentheses, integer
// literals, identifiers; juxtaposition multiplies ("y(x^2-y)", "3x^2y").
struct Expr {
  enum class Op { Num, Var, Add, Sub, Mul, Div, Pow, Neg };
  Op op = Op::Num;
  std::string text;  // numeral or variable name
  unsigned exponent = 0;
  std::shared_ptr<const Expr> lhs, rhs;
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expression(std::string_view source);
std::set<std::string> free_variables(const Expr& e);

// Policy supplies: V number(const std::string&), V variable(const std::string&),
// V add(V,V), V sub(V,V), V mul(V,V), V div(V,V), V neg(V), V pow(V,unsigned).
template <class V, class Policy>
V evaluate(const Expr& e, Policy& pol) {
  switch (e.op) {
    case Expr::Op::Num: return pol.number(e.text);
    case Expr::Op::Var: return pol.variable(e.text);
    case Expr::Op::Add: return pol.add(evaluate<V>(*e.lhs, pol), evaluate<V>(*e.rhs, pol));
    case Expr::Op::Sub: return pol.sub(evaluate<V>(*e.lhs, pol), evaluate<V>(*e.rhs, pol));
    case Expr::Op::Mul: return pol.mul(evaluate<V>(*e.lhs, pol), evaluate<V>(*e.rhs, pol));
    case Expr::Op::Div: return pol.div(evaluate<V>(*e.lhs, pol), evaluate<V>(*e.rhs, pol));
    case Expr::Op::Neg: return pol.neg(evaluate<V>(*e.lhs, pol));
    case Expr::Op::Pow: return pol.pow(evaluate<V>(*e.lhs, pol), e.exponent);
  }
  fail(ErrorKind::Internal, "unknown expression node");
}

}  // namespace projsing
