#include "rotsurf/jet.hpp"

#include <cmath>

namespace rotsurf {

bool Jet2::is_finite() const {
  return std::isfinite(value) && std::isfinite(d1) && std::isfinite(d2);
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
  const double inv = 1.0 / b.value;
  return a * chain(b, inv, -inv * inv, 2.0 * inv * inv * inv);
}

Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value), c = std::cos(a.value);
  return chain(a, s, c, -s);
}

Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.value), c = std::cos(a.value);
  return chain(a, c, -s, -c);
}

Jet2 sinh(const Jet2& a) {
  const double s = std::sinh(a.value), c = std::cosh(a.value);
  return chain(a, s, c, s);
}

Jet2 cosh(const Jet2& a) {
  const double s = std::sinh(a.value), c = std::cosh(a.value);
  return chain(a, c, s, c);
}

Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value);
  return chain(a, e, e, e);
}

Jet2 log(const Jet2& a) {
  const double inv = 1.0 / a.value;
  return chain(a, std::log(a.value), inv, -inv * inv);
}

Jet2 sqrt(const Jet2& a) {
  const double r = std::sqrt(a.value);
  return chain(a, r, 0.5 / r, -0.25 / (r * a.value));
}

Jet2 pow(const Jet2& a, double k) {
  if (k == 0.0) return Jet2::constant(1.0);
  if (k == 1.0) return a;
  if (k == 2.0) return a * a;
  const double x = a.value;
  return chain(a, std::pow(x, k), k * std::pow(x, k - 1.0), k * (k - 1.0) * std::pow(x, k - 2.0));
}

Jet2 pow(const Jet2& a, const Jet2& b) {
  if (b.d1 == 0.0 && b.d2 == 0.0) return pow(a, b.value);
  return exp(b * log(a));
}

}  // namespace rotsurf
