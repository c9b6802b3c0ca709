#pragma once

// Profile curves gamma(s) = (f1, f2, f3, f4)(s) evaluated as second-order jets.

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "rotsurf/algebra.hpp"
#include "rotsurf/expression.hpp"
#include "rotsurf/jet.hpp"

namespace rotsurf {

/// Closed interval [lo, hi]; infinite ends allowed.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double s) const { return s >= lo && s <= hi; }
  bool is_bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
};

/// A smooth real function of one variable: either a parsed expression or a
/// host callable returning jets.
class ScalarFunction {
 public:
  using JetFn = std::function<Jet2(double)>;
  using ValueFn = std::function<long double(long double)>;

  ScalarFunction() : ScalarFunction(constant(0.0)) {}
  explicit ScalarFunction(Expression e);
  /// `value` feeds extended-precision evaluation; when omitted the jet's value is used.
  ScalarFunction(JetFn jet, ValueFn value = {}, std::string label = "<callable>");

  static ScalarFunction constant(double c);
  /// Parses an expression in `variable`.
  static ScalarFunction parse(std::string_view text, std::string_view variable,
                              const Expression::Params& params = {});

  Jet2 jet(double x) const;
  long double value_extended(long double x) const;
  bool has_division() const { return expr_ && expr_->has_division(); }
  const std::string& label() const { return label_; }

 private:
  std::optional<Expression> expr_;
  JetFn jet_;
  ValueFn value_;
  std::string label_;
};

using CurveJet = std::array<Jet2, 4>;

struct Curve4 {
  std::string name;
  std::array<ScalarFunction, 4> f;
  Interval domain;

  /// Throws DomainViolation if s is outside the domain or a jet is not finite.
  CurveJet eval_jet(double s) const;
  Vec4 point(double s) const;
  std::array<long double, 4> value_extended(long double s) const;
};

/// Splits "e1,e2,e3,e4" on top-level commas and parses each in `s`.
/// A component containing '/' needs an explicit domain (PreconditionError otherwise).
Curve4 curve_from_expressions(std::string_view text, const Expression::Params& params = {},
                              std::optional<Interval> domain = std::nullopt,
                              std::string name = {});

/// ex1, ex2, ex3 (uses param c > 0, default 1), lin14, cosh14, cosh56.
/// Throws UnknownCurve for any other name.
Curve4 builtin_curve(std::string_view name, const Expression::Params& params = {});

bool is_builtin_curve(std::string_view name);
inline constexpr std::array<std::string_view, 6> kBuiltinCurves{"ex1",   "ex2",    "ex3",
                                                                "lin14", "cosh14", "cosh56"};

/// Largest deviation between the jets at s and 5-point central differences
/// (computed in long double) with step h, over all components and both orders.
/// Throws DomainViolation unless [s - 2h, s + 2h] lies in the domain.
double fd_check(const Curve4& curve, double s, double h);

}  // namespace rotsurf
