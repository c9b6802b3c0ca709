#include "rotsurf/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "rotsurf/error.hpp"

namespace rotsurf {

namespace {

using Op = Expression::Op;
using Node = Expression::Node;

class Parser {
 public:
  Parser(std::string_view text, std::string_view variable, const Expression::Params& params)
      : text_(text), variable_(variable), params_(params) {}

  int parse_all() {
    const int root = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

  std::vector<Node> nodes;
  bool has_division = false;

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int add(Op op, int lhs = -1, int rhs = -1, double value = 0.0) {
    nodes.push_back({op, value, lhs, rhs});
    return static_cast<int>(nodes.size()) - 1;
  }

  int expr() {
    int lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = add(Op::Add, lhs, term());
      } else if (accept('-')) {
        lhs = add(Op::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  int term() {
    int lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = add(Op::Mul, lhs, unary());
      } else if (accept('/')) {
        has_division = true;
        lhs = add(Op::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  int unary() {
    if (accept('-')) return add(Op::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  int power() {
    const int base = primary();
    if (accept('^')) return add(Op::Pow, base, unary());
    return base;
  }

  int primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (accept('(')) {
      const int inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail(std::string("unexpected '") + c + "'");
  }

  int number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return add(Op::Const, -1, -1, v);
  }

  int identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view id = text_.substr(start, pos_ - start);

    static constexpr std::pair<std::string_view, Op> kUnary[] = {
        {"sin", Op::Sin},   {"cos", Op::Cos}, {"sinh", Op::Sinh},
        {"cosh", Op::Cosh}, {"exp", Op::Exp}, {"sqrt", Op::Sqrt}};
    for (const auto& [fname, op] : kUnary) {
      if (id == fname) {
        expect('(');
        const int arg = expr();
        expect(')');
        return add(op, arg);
      }
    }
    if (id == "pow") {
      expect('(');
      const int a = expr();
      expect(',');
      const int b = expr();
      expect(')');
      return add(Op::Pow, a, b);
    }
    if (id == variable_) return add(Op::Var);
    if (const auto it = params_.find(id); it != params_.end())
      return add(Op::Const, -1, -1, it->second);
    if (id == "pi") return add(Op::Const, -1, -1, std::numbers::pi);
    pos_ = start;
    fail("unbound identifier '" + std::string(id) + "'");
  }

  std::string_view text_;
  std::string_view variable_;
  const Expression::Params& params_;
  std::size_t pos_ = 0;
};

long double lift(double c, long double) { return static_cast<long double>(c); }
Jet2 lift(double c, const Jet2&) { return Jet2::constant(c); }

}  // namespace

Expression Expression::parse(std::string_view text, std::string_view variable,
                             const Params& params) {
  Parser p(text, variable, params);
  Expression e;
  e.root_ = p.parse_all();
  e.has_division_ = p.has_division;
  e.nodes_ = std::make_shared<const std::vector<Node>>(std::move(p.nodes));
  e.text_ = std::string(text);
  return e;
}

bool Expression::is_constant() const {
  for (const Node& n : *nodes_)
    if (n.op == Op::Var) return false;
  return true;
}

template <class T>
T Expression::eval_node(int i, const T& x) const {
  using std::cos, std::cosh, std::exp, std::pow, std::sin, std::sinh, std::sqrt;
  const Node& n = (*nodes_)[static_cast<std::size_t>(i)];
  switch (n.op) {
    case Op::Const: return lift(n.value, x);
    case Op::Var: return x;
    case Op::Neg: return -eval_node(n.lhs, x);
    case Op::Add: return eval_node(n.lhs, x) + eval_node(n.rhs, x);
    case Op::Sub: return eval_node(n.lhs, x) - eval_node(n.rhs, x);
    case Op::Mul: return eval_node(n.lhs, x) * eval_node(n.rhs, x);
    case Op::Div: return eval_node(n.lhs, x) / eval_node(n.rhs, x);
    case Op::Pow: return pow(eval_node(n.lhs, x), eval_node(n.rhs, x));
    case Op::Sin: return sin(eval_node(n.lhs, x));
    case Op::Cos: return cos(eval_node(n.lhs, x));
    case Op::Sinh: return sinh(eval_node(n.lhs, x));
    case Op::Cosh: return cosh(eval_node(n.lhs, x));
    case Op::Exp: return exp(eval_node(n.lhs, x));
    case Op::Sqrt: return sqrt(eval_node(n.lhs, x));
  }
  return x;
}

Jet2 Expression::eval(const Jet2& x) const { return eval_node(root_, x); }

long double Expression::eval(long double x) const { return eval_node(root_, x); }

}  // namespace rotsurf
