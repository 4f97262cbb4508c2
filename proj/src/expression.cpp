#include "projsing/expression.hpp"

#include <cctype>

namespace projsing {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::Validation, "expression '" + std::string(s_) + "': " + msg + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
  static ExprPtr node(Expr::Op op, ExprPtr a, ExprPtr b = nullptr) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
  }

  ExprPtr sum() {
    ExprPtr e;
    if (peek('-')) {
      ++pos_;
      e = node(Expr::Op::Neg, product());
    } else {
      if (peek('+')) ++pos_;
      e = product();
    }
    while (true) {
      if (peek('+')) {
        ++pos_;
        e = node(Expr::Op::Add, e, product());
      } else if (peek('-')) {
        ++pos_;
        e = node(Expr::Op::Sub, e, product());
      } else {
        return e;
      }
    }
  }

  ExprPtr product() {
    ExprPtr e = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        e = node(Expr::Op::Mul, e, power());
      } else if (peek('/')) {
        ++pos_;
        e = node(Expr::Op::Div, e, power());
      } else if (starts_primary()) {
        e = node(Expr::Op::Mul, e, power());
      } else {
        return e;
      }
    }
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("exponent must be a non-negative integer");
      auto e = std::make_shared<Expr>();
      e->op = Expr::Op::Pow;
      e->lhs = base;
      e->exponent = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      return e;
    }
    return base;
  }

  ExprPtr primary() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = sum();
      if (!peek(')')) error("missing ')'");
      ++pos_;
      return e;
    }
    auto e = std::make_shared<Expr>();
    const size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      e->op = Expr::Op::Num;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      // identifiers: a letter followed by digits/underscores ("x1", "t_2");
      // a second letter starts a new factor, so "xy" is x*y
      ++pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      e->op = Expr::Op::Var;
    } else {
      error("unexpected '" + std::string(1, c) + "'");
    }
    e->text = std::string(s_.substr(start, pos_ - start));
    if (e->op == Expr::Op::Var) {
      std::string name;
      for (char ch : e->text)
        if (ch != '_') name += ch;
      e->text = name;
    }
    return e;
  }

  std::string_view s_;
  size_t pos_ = 0;
};

void collect(const Expr& e, std::set<std::string>& out) {
  if (e.op == Expr::Op::Var) out.insert(e.text);
  if (e.lhs) collect(*e.lhs, out);
  if (e.rhs) collect(*e.rhs, out);
}

}  // namespace

ExprPtr parse_expression(std::string_view source) { return Parser(source).parse(); }

std::set<std::string> free_variables(const Expr& e) {
  std::set<std::string> out;
  collect(e, out);
  return out;
}

}  // namespace projsing
