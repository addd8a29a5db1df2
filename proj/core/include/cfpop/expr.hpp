#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cfpop {

// Arithmetic expression in the variables x, y, t with +, -, *, /, unary
// minus, parentheses, exp(a), pow(a, b) and the half-open indicator
// ind(a, lo, hi) = 1 when lo <= a < hi. Parsed once into a flat node list
// and evaluated without allocation.
class Expr {
 public:
  // allowed_vars restricts which variable names may appear, e.g. "xt".
  static Expr parse(const std::string& text, std::string_view allowed_vars);

  double eval(double x, double y, double t) const;
  bool uses(char var) const;
  const std::string& text() const { return text_; }

 private:
  enum class Op { constant, var_x, var_y, var_t, add, sub, mul, div, neg, exp, pow, ind };
  struct Node {
    Op op;
    int a = -1, b = -1, c = -1;
    double value = 0.0;
  };

  double eval_at(int i, double x, double y, double t) const;

  std::vector<Node> nodes_;
  int root_ = -1;
  unsigned used_ = 0;  // bit 0: x, bit 1: y, bit 2: t
  std::string text_;

  friend class ExprParser;
};

}  // namespace cfpop
