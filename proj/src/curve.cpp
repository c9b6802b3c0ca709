#include "rotsurf/curve.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <vector>

#include "rotsurf/error.hpp"

namespace rotsurf {

ScalarFunction::ScalarFunction(Expression e) : expr_(std::move(e)), label_(expr_->text()) {}

ScalarFunction::ScalarFunction(JetFn jet, ValueFn value, std::string label)
    : jet_(std::move(jet)), value_(std::move(value)), label_(std::move(label)) {
  if (!jet_) throw PreconditionError("ScalarFunction: empty callable");
}

ScalarFunction ScalarFunction::constant(double c) {
  Expression::Params p{{"k", c}};
  ScalarFunction f(Expression::parse("k", "s", p));
  f.label_ = std::to_string(c);
  return f;
}

ScalarFunction ScalarFunction::parse(std::string_view text, std::string_view variable,
                                     const Expression::Params& params) {
  return ScalarFunction(Expression::parse(text, variable, params));
}

Jet2 ScalarFunction::jet(double x) const {
  if (expr_) return expr_->eval(Jet2::variable(x));
  return jet_(x);
}

long double ScalarFunction::value_extended(long double x) const {
  if (expr_) return expr_->eval(x);
  if (value_) return value_(x);
  return jet_(static_cast<double>(x)).value;
}

CurveJet Curve4::eval_jet(double s) const {
  if (!domain.contains(s))
    throw DomainViolation("curve " + name + ": s = " + std::to_string(s) + " outside domain");
  CurveJet out;
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = f[i].jet(s);
    if (!out[i].is_finite())
      throw DomainViolation("curve " + name + ": component " + std::to_string(i + 1) +
                            " not finite at s = " + std::to_string(s));
  }
  return out;
}

Vec4 Curve4::point(double s) const {
  const CurveJet j = eval_jet(s);
  return {j[0].value, j[1].value, j[2].value, j[3].value};
}

std::array<long double, 4> Curve4::value_extended(long double s) const {
  if (!domain.contains(static_cast<double>(s)))
    throw DomainViolation("curve " + name + ": s outside domain");
  std::array<long double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = f[i].value_extended(s);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(text.substr(start)));
  return parts;
}

}  // namespace

Curve4 curve_from_expressions(std::string_view text, const Expression::Params& params,
                              std::optional<Interval> domain, std::string name) {
  const auto parts = split_top_level(text);
  if (parts.size() != 4)
    throw ParseError("curve \"" + std::string(text) + "\": expected 4 comma-separated components, got " +
                     std::to_string(parts.size()));
  Curve4 c;
  c.name = name.empty() ? std::string(text) : std::move(name);
  bool division = false;
  for (std::size_t i = 0; i < 4; ++i) {
    c.f[i] = ScalarFunction::parse(parts[i], "s", params);
    division = division || c.f[i].has_division();
  }
  if (division && !domain)
    throw PreconditionError("curve \"" + c.name + "\" contains a division; supply its domain");
  if (domain) {
    if (!(domain->lo < domain->hi)) throw PreconditionError("curve domain must have lo < hi");
    c.domain = *domain;
  }
  return c;
}

bool is_builtin_curve(std::string_view name) {
  return std::find(kBuiltinCurves.begin(), kBuiltinCurves.end(), name) != kBuiltinCurves.end();
}

Curve4 builtin_curve(std::string_view name, const Expression::Params& params) {
  auto make = [&](const char* text) {
    return curve_from_expressions(text, params, std::nullopt, std::string(name));
  };
  if (name == "ex1") return make("s+sinh(s), 0, 0, s+cosh(s)");
  if (name == "ex2") return make("s*cosh(s), s*sinh(s), 0, 0");
  if (name == "ex3") {
    Expression::Params p = params;
    const auto it = p.find("c");
    if (it == p.end()) p["c"] = 1.0;
    else if (!(it->second > 0.0)) throw PreconditionError("ex3: parameter c must be positive");
    return curve_from_expressions("0, c*sin(s), 0, c*cos(s)", p, std::nullopt, "ex3");
  }
  if (name == "lin14") return make("s, 0, 0, 2*s");
  if (name == "cosh14") return make("s, 0, 0, cosh(s)");
  if (name == "cosh56") return make("0, s, 0, cosh(s)");
  throw UnknownCurve("unknown builtin curve '" + std::string(name) + "'");
}

double fd_check(const Curve4& curve, double s, double h) {
  if (!(h > 0.0)) throw PreconditionError("fd_check: h must be positive");
  if (!curve.domain.contains(s - 2.0 * h) || !curve.domain.contains(s + 2.0 * h))
    throw DomainViolation("fd_check: stencil leaves the curve domain");
  const long double S = s, H = h;
  const auto m2 = curve.value_extended(S - 2 * H);
  const auto m1 = curve.value_extended(S - H);
  const auto z0 = curve.value_extended(S);
  const auto p1 = curve.value_extended(S + H);
  const auto p2 = curve.value_extended(S + 2 * H);
  const CurveJet jet = curve.eval_jet(s);
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const long double d1 = (m2[i] - 8 * m1[i] + 8 * p1[i] - p2[i]) / (12 * H);
    const long double d2 = (-m2[i] + 16 * m1[i] - 30 * z0[i] + 16 * p1[i] - p2[i]) / (12 * H * H);
    worst = std::max(worst, static_cast<double>(std::fabs(jet[i].d1 - d1)));
    worst = std::max(worst, static_cast<double>(std::fabs(jet[i].d2 - d2)));
  }
  return worst;
}

}  // namespace rotsurf
