#pragma once

// Scalar expressions in one variable:
//   numbers, the variable, named parameters (substituted at parse time), pi,
//   + - * / ^ with the usual precedence (^ binds right and tighter than unary minus),
//   sin cos sinh cosh exp sqrt of one argument and pow(a, b).

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rotsurf/jet.hpp"

namespace rotsurf {

class Expression {
 public:
  using Params = std::map<std::string, double, std::less<>>;

  /// Throws ParseError on malformed input or an unbound identifier.
  static Expression parse(std::string_view text, std::string_view variable = "s",
                          const Params& params = {});

  Jet2 eval(const Jet2& x) const;
  long double eval(long double x) const;
  double eval(double x) const { return static_cast<double>(eval(static_cast<long double>(x))); }

  /// Whether a '/' operator occurs anywhere in the expression.
  bool has_division() const { return has_division_; }
  /// Whether the expression is free of the variable.
  bool is_constant() const;
  const std::string& text() const { return text_; }

  enum class Op { Const, Var, Neg, Add, Sub, Mul, Div, Pow, Sin, Cos, Sinh, Cosh, Exp, Sqrt };
  struct Node {
    Op op = Op::Const;
    double value = 0.0;
    int lhs = -1;
    int rhs = -1;
  };

 private:
  template <class T>
  T eval_node(int i, const T& x) const;

  std::shared_ptr<const std::vector<Node>> nodes_;
  int root_ = -1;
  bool has_division_ = false;
  std::string text_;
};

}  // namespace rotsurf
