#include "cfpop/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace cfpop {

namespace {

[[noreturn]] void fail(const std::string& text, size_t pos, const std::string& what) {
  throw std::invalid_argument("expression '" + text + "': " + what + " at position " +
                              std::to_string(pos));
}

}  // namespace

class ExprParser {
 public:
  ExprParser(const std::string& text, std::string_view allowed, Expr& out)
      : text_(text), allowed_(allowed), out_(out) {}

  void run() {
    out_.root_ = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail(text_, pos_, "unexpected trailing input");
  }

 private:
  using Op = Expr::Op;

  const std::string& text_;
  std::string_view allowed_;
  Expr& out_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int add_node(Op op, int a = -1, int b = -1, int c = -1, double value = 0.0) {
    out_.nodes_.push_back({op, a, b, c, value});
    return static_cast<int>(out_.nodes_.size()) - 1;
  }

  int parse_sum() {
    int lhs = parse_product();
    for (;;) {
      if (eat('+')) {
        lhs = add_node(Op::add, lhs, parse_product());
      } else if (eat('-')) {
        lhs = add_node(Op::sub, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  int parse_product() {
    int lhs = parse_unary();
    for (;;) {
      if (eat('*')) {
        lhs = add_node(Op::mul, lhs, parse_unary());
      } else if (eat('/')) {
        lhs = add_node(Op::div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  int parse_unary() {
    if (eat('-')) return add_node(Op::neg, parse_unary());
    return parse_primary();
  }

  int parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail(text_, pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      int inner = parse_sum();
      if (!eat(')')) fail(text_, pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    fail(text_, pos_, std::string("unexpected character '") + c + "'");
  }

  int parse_number() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (end == begin) fail(text_, pos_, "bad number");
    pos_ += static_cast<size_t>(end - begin);
    return add_node(Op::constant, -1, -1, -1, value);
  }

  int parse_name() {
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    if (name == "exp" || name == "pow" || name == "ind") {
      if (!eat('(')) fail(text_, pos_, "expected '(' after " + name);
      int a = parse_sum();
      if (name == "exp") {
        if (!eat(')')) fail(text_, pos_, "expected ')'");
        return add_node(Op::exp, a);
      }
      if (!eat(',')) fail(text_, pos_, "expected ',' in " + name);
      int b = parse_sum();
      if (name == "pow") {
        if (!eat(')')) fail(text_, pos_, "expected ')'");
        return add_node(Op::pow, a, b);
      }
      if (!eat(',')) fail(text_, pos_, "expected second ',' in ind");
      int c = parse_sum();
      if (!eat(')')) fail(text_, pos_, "expected ')'");
      return add_node(Op::ind, a, b, c);
    }
    if (name.size() == 1 && (name[0] == 'x' || name[0] == 'y' || name[0] == 't')) {
      if (allowed_.find(name[0]) == std::string_view::npos)
        fail(text_, start, "variable '" + name + "' not allowed here");
      if (name[0] == 'x') {
        out_.used_ |= 1u;
        return add_node(Op::var_x);
      }
      if (name[0] == 'y') {
        out_.used_ |= 2u;
        return add_node(Op::var_y);
      }
      out_.used_ |= 4u;
      return add_node(Op::var_t);
    }
    fail(text_, start, "unknown name '" + name + "'");
  }
};

Expr Expr::parse(const std::string& text, std::string_view allowed_vars) {
  Expr e;
  e.text_ = text;
  ExprParser(text, allowed_vars, e).run();
  return e;
}

double Expr::eval(double x, double y, double t) const {
  return eval_at(root_, x, y, t);
}

double Expr::eval_at(int i, double x, double y, double t) const {
  const Node& n = nodes_[static_cast<size_t>(i)];
  switch (n.op) {
    case Op::constant: return n.value;
    case Op::var_x: return x;
    case Op::var_y: return y;
    case Op::var_t: return t;
    case Op::add: return eval_at(n.a, x, y, t) + eval_at(n.b, x, y, t);
    case Op::sub: return eval_at(n.a, x, y, t) - eval_at(n.b, x, y, t);
    case Op::mul: return eval_at(n.a, x, y, t) * eval_at(n.b, x, y, t);
    case Op::div: return eval_at(n.a, x, y, t) / eval_at(n.b, x, y, t);
    case Op::neg: return -eval_at(n.a, x, y, t);
    case Op::exp: return std::exp(eval_at(n.a, x, y, t));
    case Op::pow: return std::pow(eval_at(n.a, x, y, t), eval_at(n.b, x, y, t));
    case Op::ind: {
      const double v = eval_at(n.a, x, y, t);
      return (v >= eval_at(n.b, x, y, t) && v < eval_at(n.c, x, y, t)) ? 1.0 : 0.0;
    }
  }
  return 0.0;
}

bool Expr::uses(char var) const {
  switch (var) {
    case 'x': return (used_ & 1u) != 0;
    case 'y': return (used_ & 2u) != 0;
    case 't': return (used_ & 4u) != 0;
    default: return false;
  }
}

}  // namespace cfpop
